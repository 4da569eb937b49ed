#include "gradedsusy/verify.hpp"

#include <array>

#include "gradedsusy/parallel.hpp"

namespace gradedsusy {
namespace {

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

bool antisymmetric(const GradedModel& m, const BracketTable& t, std::size_t i, std::size_t j) {
  const int s = -sign_of(m.basis[i].degree.dot(m.basis[j].degree));
  std::vector<BracketEntry> flipped = t.cell(i, j);
  for (auto& e : flipped) e.coeff *= GaussianRational(s);
  return flipped == t.cell(j, i);
}

struct Triple {
  std::size_t i, j, k;
};

std::vector<Triple> enumerate_triples(std::size_t n, bool exhaustive) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = exhaustive ? 0 : i; j < n; ++j)
      for (std::size_t k = exhaustive ? 0 : j; k < n; ++k) out.push_back({i, j, k});
  return out;
}

}  // namespace

ClosureReport verify_closure(const GradedModel& m, unsigned threads) {
  const std::size_t n = m.basis.size();
  ClosureReport rep;
  rep.table = BracketTable(n);
  if (n == 0) return rep;

  std::map<DegreeVector, std::vector<const MatrixOp*>> slices;
  std::map<DegreeVector, std::vector<std::size_t>> slice_idx;
  for (std::size_t k = 0; k < n; ++k) {
    slices[m.basis[k].degree].push_back(&m.basis[k].op);
    slice_idx[m.basis[k].degree].push_back(k);
  }

  std::vector<std::optional<std::string>> residual(n * n);
  parallel_for(n * n, threads, [&](std::size_t p) {
    const std::size_t i = p / n, j = p % n;
    const MatrixOp b = graded_bracket(m.basis[i], m.basis[j]);
    if (b.is_zero()) return;
    const DegreeVector d = m.basis[i].degree + m.basis[j].degree;
    auto it = slices.find(d);
    try {
      if (it == slices.end()) throw NotInSpan("empty degree slice");
      std::vector<BetaPoly> c = decompose(b, std::span<const MatrixOp* const>(it->second));
      auto& cell = rep.table.cell(i, j);
      const auto& idx = slice_idx.at(d);
      for (std::size_t q = 0; q < c.size(); ++q)
        if (!c[q].is_zero()) cell.push_back({idx[q], std::move(c[q])});
    } catch (const NotInSpan&) {
      residual[p] = b.str();
    }
  });

  rep.pairs_checked = n * n;
  for (std::size_t p = 0; p < n * n; ++p)
    if (residual[p]) rep.failures.push_back({p / n, p % n, *residual[p]});
  if (rep.failures.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (!antisymmetric(m, rep.table, i, j)) rep.antisymmetry_failures.emplace_back(i, j);
  }
  return rep;
}

const BracketTable& ensure_table(GradedModel& m, unsigned threads) {
  if (m.table) return *m.table;
  ClosureReport rep = verify_closure(m, threads);
  if (!rep.failures.empty()) {
    const auto& f = rep.failures.front();
    throw ClosureViolation(f.i, f.j,
                           "closure fails for " + m.basis[f.i].name + ", " + m.basis[f.j].name + ":\n" + f.residual);
  }
  m.table = std::move(rep.table);
  return *m.table;
}

JacobiReport verify_jacobi(const GradedModel& m, const JacobiOptions& opt) {
  const std::size_t n = m.basis.size();
  JacobiReport rep;
  rep.exhaustive = opt.exhaustive;

  // Inner brackets are shared by many triples; compute each ordered pair once.
  std::vector<MatrixOp> inner(n * n);
  parallel_for(n * n, opt.threads, [&](std::size_t p) {
    inner[p] = graded_bracket(m.basis[p / n], m.basis[p % n]);
  });

  const std::vector<Triple> triples = enumerate_triples(n, opt.exhaustive);
  std::vector<std::optional<std::string>> residual(triples.size());
  parallel_for(triples.size(), opt.threads, [&](std::size_t t) {
    const std::array<std::size_t, 3> id{triples[t].i, triples[t].j, triples[t].k};
    MatrixOp sum(m.dim);
    for (int r = 0; r < 3; ++r) {
      const Generator& x = m.basis[id[r]];
      const std::size_t y = id[(r + 1) % 3], z = id[(r + 2) % 3];
      const MatrixOp& yz = inner[y * n + z];
      if (yz.is_zero()) continue;
      const DegreeVector dyz = m.basis[y].degree + m.basis[z].degree;
      MatrixOp term = bracket(x.op, yz, bracket_kind(x.degree, dyz));
      if (x.degree.dot(m.basis[z].degree) == 1) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    if (!sum.is_zero()) residual[t] = sum.str();
  });

  rep.triples_checked = triples.size();
  for (std::size_t t = 0; t < triples.size(); ++t)
    if (residual[t]) rep.failures.push_back({triples[t].i, triples[t].j, triples[t].k, *residual[t]});
  return rep;
}

JacobiReport verify_jacobi_table(const GradedModel& m, const BracketTable& t, bool exhaustive) {
  const std::size_t n = m.basis.size();
  if (t.size() != n) throw std::invalid_argument("verify_jacobi_table: table size mismatch");
  JacobiReport rep;
  rep.exhaustive = exhaustive;
  for (const Triple& tr : enumerate_triples(n, exhaustive)) {
    const std::array<std::size_t, 3> id{tr.i, tr.j, tr.k};
    std::map<std::size_t, BetaPoly> acc;
    for (int r = 0; r < 3; ++r) {
      const std::size_t x = id[r], y = id[(r + 1) % 3], z = id[(r + 2) % 3];
      const int s = sign_of(m.basis[x].degree.dot(m.basis[z].degree));
      for (const auto& e1 : t.cell(y, z))
        for (const auto& e2 : t.cell(x, e1.k)) acc[e2.k] += GaussianRational(s) * (e1.coeff * e2.coeff);
    }
    std::string residual;
    for (const auto& [k, c] : acc)
      if (!c.is_zero()) residual += m.basis[k].name + ": " + c.str() + "\n";
    if (!residual.empty()) rep.failures.push_back({tr.i, tr.j, tr.k, residual});
    ++rep.triples_checked;
  }
  return rep;
}

HermiticityReport verify_hermiticity(const GradedModel& m) {
  HermiticityReport rep;
  for (const auto& g : m.basis) {
    ++rep.checked;
    if (!(g.op.adjoint() == g.op)) rep.failures.push_back(g.name);
  }
  return rep;
}

BetaPoly conventional_coefficient(const GradedModel& m, std::size_t i, std::size_t j, const BracketEntry& e) {
  return e.coeff * GaussianRational(scale_factor(m.basis[e.k].scale_exp, m.basis[i].scale_exp, m.basis[j].scale_exp));
}

GreekConstants extract_greek_constants(const GradedModel& m, const BracketTable& t) {
  if (m.kind != "cl6b" || !m.realization) throw std::invalid_argument("extract_greek_constants: needs the Cl(6) model");
  const SuperRealization& r = *m.realization;

  // [X0, Y] = c Z in the input algebra, for (X0, Y, Z) = (H, S, Q) and (H, K, D).
  auto input_coeff = [&](const char* x, const char* y, const char* z) {
    const NamedOp *px = r.find(x), *py = r.find(y), *pz = r.find(z);
    if (!px || !py || !pz) throw std::invalid_argument("extract_greek_constants: missing H, K, D, Q or S");
    const MatrixOp b = bracket(px->op, py->op, BracketKind::kCommutator);
    const MatrixOp* basis[] = {&pz->op};
    return decompose(b, std::span<const MatrixOp* const>(basis)).front().constant();
  };

  GreekConstants out;
  auto collect = [&](std::map<std::string, GaussianRational>& dest, const char* y, const char* z, std::size_t ylen,
                     const GaussianRational& c) {
    const std::size_t x = m.require("H_0123");
    for (std::size_t j = 0; j < m.basis.size(); ++j) {
      const Generator& gy = m.basis[j];
      if (gy.family != y || gy.label.size() != ylen || gy.label == "000") continue;
      for (const auto& e : t.cell(x, j)) {
        const Generator& gz = m.basis[e.k];
        if (gz.family != z) throw std::logic_error("extract_greek_constants: unexpected target " + gz.name);
        // With [X0,Y] = c Z_in and Z = c Z_in / i, the i in the definition cancels.
        GaussianRational d = e.coeff.constant();
        if (!e.coeff.is_constant()) throw std::logic_error("extract_greek_constants: beta-dependent constant");
        dest[gy.label + gz.label] = d / c;
      }
    }
  };
  collect(out.f, "S", "Q", 1, input_coeff("H", "S", "Q"));
  collect(out.g, "K", "D", 2, input_coeff("H", "K", "D"));
  collect(out.h, "S", "Q", 3, input_coeff("H", "S", "Q"));
  return out;
}

}  // namespace gradedsusy
