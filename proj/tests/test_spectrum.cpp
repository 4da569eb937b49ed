#include <doctest.h>

#include <algorithm>
#include <set>

#include "gradedsusy/ladder.hpp"
#include "gradedsusy/osp12.hpp"
#include "gradedsusy/spectrum.hpp"

using namespace gradedsusy;
using G = GaussianRational;

namespace {

MatrixOp scalar_op(const DiffOp& d) {
  MatrixOp m(1);
  m(0, 0) = d;
  return m;
}

const WaveVector& state_of_degree(const std::vector<DegreeVector>& comp, const std::vector<WaveVector>& states,
                                  const char* degree) {
  for (const auto& s : states)
    if (wave_degree(comp, s) == DegreeVector::parse(degree)) return s;
  throw std::runtime_error("no state of that degree");
}

}  // namespace

TEST_CASE("apply on Gaussian-weighted monomials") {
  const Rational b(2);
  const WaveVector psi = WaveVector::monomial(1, 0, b);
  const DiffOp bx = DiffOp::monomial(BetaPoly::beta(), -1, 0);
  CHECK(apply(scalar_op(DiffOp::d() + DiffOp::x() - bx), b, psi).is_zero());
  const WaveVector out = apply(scalar_op(DiffOp::d() + DiffOp::x() + bx), b, psi);
  CHECK(out == WaveVector::monomial(1, 0, Rational(1), G(4)));
  CHECK(apply(scalar_op(DiffOp::x(2)), Rational(1, 3), WaveVector::monomial(1, 0, Rational(1, 3))) ==
        WaveVector::monomial(1, 0, Rational(7, 3)));
  // d(x^q e) = q x^(q-1) e - x^(q+1) e
  CHECK(apply(scalar_op(DiffOp::d()), b, WaveVector::monomial(1, 0, Rational(5, 2))) ==
        WaveVector::monomial(1, 0, Rational(3, 2), G(Rational(5, 2))) +
            WaveVector::monomial(1, 0, Rational(7, 2), G(-1)));
}

TEST_CASE("ground states of the Cl(4) model") {
  const GradedModel m = build_model("cl4");
  const LadderSet l = build_ladder(m);
  const auto comp = grade_components(m);
  const GroundStates g = ground_states(l, Rational(2));
  CHECK(g.branch == '+');
  REQUIRE(g.states.size() == 4);
  std::set<std::string> degs;
  for (const auto& s : g.states) {
    REQUIRE(s.support().size() == 1);
    const auto& c = s.component(s.support().front());
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->first == Rational(2));
    degs.insert(wave_degree(comp, s).str());
    for (const auto& op : l.ops) CHECK(apply(op.ann, Rational(2), s).is_zero());
    const EigenResult e = eigen_check(l.R, Rational(2), s);
    REQUIRE(e.value);
    CHECK(*e.value == G(Rational(5, 2)));
  }
  CHECK(degs == std::set<std::string>{"001", "111", "010", "100"});
  CHECK_THROWS_AS(ground_states(l, Rational(1)), std::invalid_argument);

  // the discarded branch is formal, with energy (1 - 2 beta)/2
  bool found = false;
  for (const auto& b : g.branches)
    if (b.sign < 0) {
      CHECK_FALSE(b.normalizable);
      REQUIRE_FALSE(b.states.empty());
      const EigenResult e = eigen_check(l.R, Rational(2), b.states.front());
      REQUIRE(e.value);
      CHECK(*e.value == G(Rational(-3, 2)));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("creation raises the energy by one") {
  const GradedModel m = build_model("cl4");
  const LadderSet l = build_ladder(m);
  const GroundStates g = ground_states(l, Rational(2));
  const WaveVector up = apply(l.ops.front().cre, Rational(2), g.states.front());
  if (!up.is_zero()) {
    const EigenResult e = eigen_check(l.R, Rational(2), up);
    REQUIRE(e.value);
    CHECK(*e.value == G(Rational(7, 2)));
  }
  std::size_t nonzero = 0;
  for (const auto& op : l.ops)
    for (const auto& s : g.states) {
      const WaveVector w = apply(op.cre, Rational(2), s);
      if (w.is_zero()) continue;
      ++nonzero;
      CHECK(*eigen_check(l.R, Rational(2), w).value == G(Rational(7, 2)));
    }
  CHECK(nonzero > 0);
  CHECK_FALSE(eigen_check(l.ops.front().cre, Rational(2), g.states.front()).value);
}

TEST_CASE("excited levels") {
  for (const auto& [kind, deg] : std::vector<std::pair<const char*, std::size_t>>{{"cl4", 4}, {"cl6b", 8}}) {
    CAPTURE(kind);
    const LadderSet l = build_ladder(build_model(kind));
    const SpectrumReport r = excited_levels(l, Rational(2), 4);
    REQUIRE(r.levels.size() == 5);
    for (const auto& lv : r.levels) {
      CHECK(lv.energy == Rational(5, 2) + Rational(lv.n));
      CHECK(lv.degeneracy == deg);
      CHECK(span_rank(lv.basis) == deg);
      for (const auto& v : lv.basis) CHECK(*eigen_check(l.R, Rational(2), v).value == G(lv.energy));
      if (lv.n + 2 <= 4) {
        REQUIRE(lv.lplus_in_span);
        CHECK(*lv.lplus_in_span);
      }
    }
    CHECK(r.rejected_energy == Rational(-3, 2));
  }
  const SpectrumReport r = excited_levels(build_ladder(build_model("cl4")), Rational(3, 2), 2);
  CHECK(r.levels[0].energy == Rational(2));
  CHECK(r.levels[1].energy == Rational(3));
  CHECK(r.levels[2].energy == Rational(4));
}

TEST_CASE("spectrum is invariant under reordering the ladder") {
  LadderSet l = build_ladder(build_model("cl4"));
  const SpectrumReport a = excited_levels(l, Rational(2), 3);
  std::reverse(l.ops.begin(), l.ops.end());
  const SpectrumReport b = excited_levels(l, Rational(2), 3);
  for (std::size_t k = 0; k < a.levels.size(); ++k) {
    CHECK(a.levels[k].degeneracy == b.levels[k].degeneracy);
    CHECK(a.levels[k].energy == b.levels[k].energy);
    std::vector<WaveVector> both = a.levels[k].basis;
    both.insert(both.end(), b.levels[k].basis.begin(), b.levels[k].basis.end());
    CHECK(span_rank(both) == a.levels[k].degeneracy);
  }
}

TEST_CASE("rank helpers") {
  const WaveVector u = WaveVector::monomial(2, 0, Rational(1)), v = WaveVector::monomial(2, 1, Rational(1));
  CHECK(span_rank({u, v, u + v}) == 2);
  CHECK(independent_subset({u, G(2) * u, v}).size() == 2);
  CHECK(span_rank({}) == 0);
}

TEST_CASE("component grades and wave degrees") {
  const GradedModel m = build_model("cl6b");
  const auto comp = grade_components(m);
  REQUIRE(comp.size() == 16);
  CHECK(comp[0].str() == "000");
  CHECK(comp[1].str() == "111");
  const WaveVector mixed = WaveVector::monomial(16, 0, Rational(1)) + WaveVector::monomial(16, 1, Rational(1));
  CHECK_THROWS(wave_degree(comp, mixed));
}

TEST_CASE("ladder operators shift degrees coherently") {
  const GradedModel m = build_model("cl4");
  const LadderSet l = build_ladder(m);
  const auto comp = grade_components(m);
  const GroundStates g = ground_states(l, Rational(2));
  for (const auto& op : l.ops)
    for (const auto& s : g.states) {
      const WaveVector w = apply(op.cre, Rational(2), s);
      if (!w.is_zero()) CHECK(wave_degree(comp, w) == wave_degree(comp, s) + op.degree);
    }
}

TEST_CASE("proportionality inside one degree sector") {
  const GradedModel m = build_model("cl4");
  const LadderSet l = build_ladder(m);
  const auto comp = grade_components(m);
  const Rational beta(2);
  const GroundStates g = ground_states(l, beta);
  const WaveVector& p001 = state_of_degree(comp, g.states, "001");
  const WaveVector& p111 = state_of_degree(comp, g.states, "111");

  const Proportionality p = proportionality_check(l, comp, beta, "100", p001, "010", p111, LadderSide::kCreation);
  REQUIRE(p.ratio);
  CHECK_FALSE(p.ratio->is_zero());
  CHECK(p.lhs == *p.ratio * p.rhs);
  CHECK(wave_degree(comp, p.lhs) == DegreeVector::parse("101"));

  const Proportionality same = proportionality_check(l, comp, beta, "100", p001, "100", p001, LadderSide::kCreation);
  REQUIRE(same.ratio);
  CHECK(*same.ratio == G(1));

  const Proportionality ann =
      proportionality_check(l, comp, beta, "100", p001, "010", p111, LadderSide::kAnnihilation);
  CHECK(ann.lhs.is_zero());
  CHECK_FALSE(ann.ratio);

  CHECK_THROWS_AS(proportionality_check(l, comp, beta, "100", p001, "100", p111, LadderSide::kCreation),
                  std::invalid_argument);
}
