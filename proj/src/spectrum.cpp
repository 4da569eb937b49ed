#include "gradedsusy/spectrum.hpp"

#include <map>
#include <tuple>

#include "gradedsusy/exact_linalg.hpp"

namespace gradedsusy {
namespace {

// Column matrix of the vectors over their joint (component, exponent) support.
GMatrix coordinates(const std::vector<WaveVector>& vs) {
  std::map<std::pair<std::size_t, Rational>, std::size_t> row;
  for (const auto& v : vs)
    for (std::size_t k = 0; k < v.ncomp(); ++k)
      for (const auto& [q, c] : v.component(k)) row.emplace(std::pair(k, q), 0);
  std::size_t next = 0;
  for (auto& [key, idx] : row) idx = next++;
  GMatrix a(row.size(), vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t k = 0; k < vs[j].ncomp(); ++k)
      for (const auto& [q, c] : vs[j].component(k)) a(row.at({k, q}), j) = c;
  return a;
}

std::optional<GaussianRational> proportional(const WaveVector& lhs, const WaveVector& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return std::nullopt;
  const std::size_t k = rhs.support().front();
  const auto& [q, c] = *rhs.component(k).begin();
  auto it = lhs.component(k).find(q);
  if (it == lhs.component(k).end()) return std::nullopt;
  const GaussianRational r = it->second / c;
  if (!(r * rhs == lhs)) return std::nullopt;
  return r;
}

}  // namespace

std::size_t span_rank(const std::vector<WaveVector>& vs) {
  if (vs.empty()) return 0;
  return bareiss_rank(coordinates(vs));
}

std::vector<WaveVector> independent_subset(const std::vector<WaveVector>& vs) {
  if (vs.empty()) return {};
  const RrefResult r = rref(coordinates(vs));
  std::vector<WaveVector> out;
  for (std::size_t c : r.pivot_cols) out.push_back(vs[c]);
  return out;
}

GroundStates ground_states(const LadderSet& l, const Rational& beta, int extra) {
  if (!(beta > Rational(1))) throw std::invalid_argument("ground_states: beta must exceed 1");
  const std::size_t n = l.dim;
  GroundStates gs;
  for (int sign : {1, -1}) {
    const Rational base = sign > 0 ? beta : -beta;
    std::vector<std::pair<std::size_t, Rational>> cols;
    for (std::size_t k = 0; k < n; ++k)
      for (int e = 0; e <= extra; ++e) cols.emplace_back(k, base + Rational(e));

    // Images of every ansatz column under every annihilator, stacked.
    std::vector<WaveVector> images;
    for (const auto& [k, q] : cols) {
      WaveVector stacked(n * l.ops.size());
      const WaveVector col = WaveVector::monomial(n, k, q);
      for (std::size_t a = 0; a < l.ops.size(); ++a) {
        const WaveVector img = apply(l.ops[a].ann, beta, col);
        for (std::size_t r = 0; r < n; ++r)
          for (const auto& [p, c] : img.component(r)) stacked.add(a * n + r, p, c);
      }
      images.push_back(std::move(stacked));
    }
    GMatrix a = coordinates(images);
    if (a.rows() == 0) a = GMatrix(1, cols.size());

    BranchSolutions br;
    br.sign = sign;
    br.normalizable = true;
    for (const auto& v : nullspace(a)) {
      WaveVector psi(n);
      for (std::size_t j = 0; j < cols.size(); ++j) psi.add(cols[j].first, cols[j].second, v[j]);
      if (Rational(2) * psi.min_exponent() <= Rational(-1)) br.normalizable = false;
      br.states.push_back(std::move(psi));
    }
    if (br.states.empty()) br.normalizable = false;
    gs.branches.push_back(std::move(br));
  }
  for (const auto& br : gs.branches)
    if (br.normalizable) {
      gs.states = br.states;
      gs.branch = br.sign > 0 ? '+' : '-';
      return gs;
    }
  throw NoNormalizableSolution("ground_states: neither branch is normalizable at beta = " + beta.str());
}

EigenResult eigen_check(const MatrixOp& op, const Rational& beta, const WaveVector& psi) {
  if (psi.is_zero()) throw std::invalid_argument("eigen_check: zero vector");
  EigenResult r;
  r.image = apply(op, beta, psi);
  if (r.image.is_zero()) {
    r.value = GaussianRational(0);
  } else {
    r.value = proportional(r.image, psi);
  }
  return r;
}

SpectrumReport excited_levels(const LadderSet& l, const Rational& beta, int nmax) {
  if (nmax < 0) throw std::invalid_argument("excited_levels: nmax must be nonnegative");
  const GroundStates gs = ground_states(l, beta);
  SpectrumReport rep;
  rep.beta = beta;
  rep.branch = gs.branch;
  for (const auto& br : gs.branches)
    if (!br.normalizable && !br.states.empty()) {
      auto e = eigen_check(l.R, beta, br.states.front());
      if (!e.value || !e.value->is_real()) throw std::logic_error("excited_levels: rejected branch is not an eigenvector");
      rep.rejected_energy = e.value->re;
    }

  std::vector<WaveVector> current = independent_subset(gs.states);
  for (int lev = 0; lev <= nmax; ++lev) {
    if (lev > 0) {
      std::vector<WaveVector> next;
      for (const auto& o : l.ops)
        for (const auto& psi : current) {
          WaveVector img = apply(o.cre, beta, psi);
          if (!img.is_zero()) next.push_back(std::move(img));
        }
      current = independent_subset(next);
    }
    Level level;
    level.n = lev;
    level.degeneracy = span_rank(current);
    if (level.degeneracy != current.size()) throw std::logic_error("excited_levels: rank mismatch");
    std::optional<GaussianRational> energy;
    for (const auto& psi : current) {
      auto e = eigen_check(l.R, beta, psi);
      if (!e.value || (energy && *e.value != *energy) || !e.value->is_real())
        throw std::logic_error("excited_levels: level " + std::to_string(lev) + " is not an eigenspace");
      energy = e.value;
    }
    if (energy) level.energy = energy->re;
    level.basis = current;
    rep.levels.push_back(std::move(level));
  }

  for (std::size_t lev = 0; lev + 2 < rep.levels.size(); ++lev) {
    std::vector<WaveVector> joint = rep.levels[lev + 2].basis;
    for (const auto& psi : rep.levels[lev].basis) joint.push_back(apply(l.Lplus, beta, psi));
    rep.levels[lev].lplus_in_span = span_rank(joint) == rep.levels[lev + 2].degeneracy;
  }
  return rep;
}

std::vector<DegreeVector> grade_components(const GradedModel& m) {
  auto deg = assign_component_degrees(m, 0, DegreeVector::zero(m.n));
  std::vector<DegreeVector> out;
  for (std::size_t k = 0; k < deg.size(); ++k) {
    if (!deg[k]) throw InconsistentGrading("grade_components: index " + std::to_string(k) + " is not reachable");
    out.push_back(*deg[k]);
  }
  return out;
}

DegreeVector wave_degree(const std::vector<DegreeVector>& comp, const WaveVector& psi) {
  const auto sup = psi.support();
  if (sup.empty()) throw std::invalid_argument("wave_degree: zero vector");
  const DegreeVector d = comp.at(sup.front());
  for (std::size_t k : sup)
    if (comp.at(k) != d) throw std::invalid_argument("wave_degree: vector is not homogeneous");
  return d;
}

Proportionality proportionality_check(const LadderSet& l, const std::vector<DegreeVector>& comp, const Rational& beta,
                                      const std::string& c_label, const WaveVector& phi_a, const std::string& d_label,
                                      const WaveVector& phi_b, LadderSide side) {
  const LadderOp& c = l.find(c_label);
  const LadderOp& d = l.find(d_label);
  if (wave_degree(comp, phi_a) + c.degree != wave_degree(comp, phi_b) + d.degree)
    throw std::invalid_argument("proportionality_check: degrees of the two sides differ");
  const bool cre = side == LadderSide::kCreation;
  Proportionality p;
  p.lhs = apply(cre ? c.cre : c.ann, beta, phi_a);
  p.rhs = apply(cre ? d.cre : d.ann, beta, phi_b);
  p.ratio = proportional(p.lhs, p.rhs);
  return p;
}

}  // namespace gradedsusy
