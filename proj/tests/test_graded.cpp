#include <doctest.h>

#include "gradedsusy/builders.hpp"
#include "gradedsusy/clifford.hpp"
#include "gradedsusy/coupling.hpp"
#include "gradedsusy/greek_indices.hpp"
#include "gradedsusy/osp12.hpp"
#include "gradedsusy/verify.hpp"

using namespace gradedsusy;
using G = GaussianRational;

namespace {

DegreeVector dv(const char* s) { return DegreeVector::parse(s); }

// Conventional coefficient of target in the bracket of left and right.
G conv(const GradedModel& m, const BracketTable& t, const char* left, const char* right, const char* target) {
  const std::size_t i = m.require(left), j = m.require(right), k = m.require(target);
  for (const auto& e : t.cell(i, j))
    if (e.k == k) return conventional_coefficient(m, i, j, e).constant();
  return G(0);
}

// Brute-force value of the Greek-index element, phase included.
ConstMatrix greek_word(const std::vector<int>& idx) {
  ConstMatrix m = ConstMatrix::identity(8);
  for (int mu : idx)
    if (mu != 0) m = m * build_gamma(3, mu);
  const G ph = idx.size() == 1   ? G(1)
               : idx.size() == 2 ? G::i_pow(1 - greek_degree(idx[0]).dot(greek_degree(idx[1])))
                                 : G::i();
  return ph * m;
}

ConstMatrix greek_key(const std::string& key) {
  if (key == "000") return ConstMatrix::identity(8);
  std::vector<int> v;
  for (char c : key) v.push_back(c - '0');
  return greek_word(v);
}

struct Models {
  GradedModel cl4 = build_model("cl4");
  GradedModel cl2n = build_model("cl2n");
  GradedModel cl6b = build_model("cl6b");
  Models() {
    ensure_table(cl4);
    ensure_table(cl2n);
    ensure_table(cl6b, 2);
  }
};

const Models& models() {
  static const Models m;
  return m;
}

}  // namespace

TEST_CASE("degree vectors") {
  const DegreeVector a = dv("101"), b = dv("110");
  CHECK((a + b).str() == "011");
  CHECK(a.dot(b) == 1);
  CHECK(a.parity() == 0);
  CHECK(dv("111").parity() == 1);
  CHECK(DegreeVector::all(3).size() == 8);
  CHECK(DegreeVector::all(3).front().str() == "000");
  CHECK(DegreeVector::all(3).back().str() == "111");
  CHECK(a[0] == 1);
  CHECK(a[1] == 0);
}

TEST_CASE("bracket kind follows the inner product") {
  for (const auto& a : DegreeVector::all(3))
    for (const auto& b : DegreeVector::all(3)) {
      const BracketKind k = bracket_kind(a, b);
      CHECK((k == BracketKind::kAnticommutator) == (a.dot(b) == 1));
      CHECK(bracket_kind(b, a) == k);
    }
}

TEST_CASE("phase exponent") {
  CHECK(f_exponent(dv("000")) == 0);
  CHECK(f_exponent(dv("111")) == 1);
  CHECK(f_exponent(dv("101")) == 0);
  for (const auto& a : DegreeVector::all(3))
    CHECK(f_exponent(a, PhaseRule::kPrinted) == f_exponent(a, PhaseRule::kHermitian));
}

TEST_CASE("gamma condition") {
  const Osp12Realization o = build_osp12();
  SuperRealization r = o.as_super();
  CHECK(verify_gamma_condition(r).passed());

  SuperRealization bad = r;
  bad.gamma = ConstMatrix::identity(2);
  const GammaReport rep = verify_gamma_condition(bad);
  CHECK_FALSE(rep.passed());
  bool anticomm = false;
  for (const auto& v : rep.violations) anticomm = anticomm || v.relation == "{X1,G}=0";
  CHECK(anticomm);
  CHECK_THROWS_AS(build_cl2nm2(bad, 3), GammaConditionFailed);

  SuperRealization none = r;
  none.gamma.reset();
  CHECK_THROWS_AS(verify_gamma_condition(none), GammaMissing);
  CHECK_THROWS_AS(build_cl2nm2(none, 3), GammaMissing);

  const MatrixOp g = MatrixOp::from_const(pauli(3));
  CHECK(bracket(g, o.H, BracketKind::kCommutator).is_zero());
}

TEST_CASE("builder shapes and sample generators") {
  const Osp12Realization o = build_osp12();
  const GradedModel& cl4 = models().cl4;
  CHECK(cl4.basis.size() == 20);
  CHECK(cl4.dim == 8);
  CHECK(cl4.basis[cl4.require("Q_001")].op == tensor(ConstMatrix::identity(4), o.Q));
  const MatrixOp hg = o.H * MatrixOp::from_const(o.gamma);
  CHECK(cl4.basis[cl4.require("H_101")].op == tensor(build_gamma(2, 1), hg));
  CHECK(cl4.basis[cl4.require("H_101")].degree == dv("101"));

  const GradedModel& cl2n = models().cl2n;
  CHECK(cl2n.basis.size() == 20);
  CHECK(cl2n.dim == 16);
  CHECK(cl2n.basis[cl2n.require("Q_100")].op == tensor(build_gamma(3, 1), o.Q));
  const int w23[] = {2, 3};
  CHECK(cl2n.basis[cl2n.require("H_011")].op == tensor(G::i() * gamma_product(3, w23), o.H));

  const GradedModel& cl6b = models().cl6b;
  CHECK(cl6b.basis.size() == 40);
  CHECK(cl6b.dim == 16);
  const int w12[] = {1, 2};
  CHECK(cl6b.basis[cl6b.require("H_12")].op == tensor(G::i() * gamma_product(3, w12), o.H));
  CHECK(cl6b.basis[cl6b.require("Q_1")].degree == dv("100"));
  CHECK(cl6b.basis[cl6b.require("Q_0")].degree == dv("111"));
  CHECK(cl6b.basis[cl6b.require("H_0123")].degree == dv("000"));
  CHECK(greek_degree(0) == dv("111"));
  CHECK(greek_degree(3) == dv("001"));
  CHECK_FALSE(cl6b.index_of("H_21").has_value());
}

TEST_CASE("odd generator lifted with the identity carries no phase") {
  const GradedModel& cl4 = models().cl4;
  const Generator& iq = cl4.basis[cl4.require("Q_111")];
  const Osp12Realization o = build_osp12();
  const int w12[] = {1, 2};
  CHECK(iq.op == tensor(G::i() * gamma_product(2, w12), o.Q));
  CHECK(iq.op.adjoint() == iq.op);
}

TEST_CASE("Greek index normalization") {
  const int w11[] = {1, 1};
  NormalizedIndex r = normalize_indices(w11);
  CHECK(r.key == "000");
  CHECK(r.factor == G(1));
  const int w212[] = {2, 1, 2};
  r = normalize_indices(w212);
  CHECK(r.key == "1");
  CHECK(r.factor == -G::i());
  const int w1023[] = {1, 0, 2, 3}, w0123[] = {0, 1, 2, 3};
  const NormalizedIndex a = normalize_indices(w1023), b = normalize_indices(w0123);
  CHECK(a.key == b.key);
  const int s = 1 - greek_degree(0).dot(greek_degree(1)) ? -1 : 1;
  CHECK(a.factor == G(s) * b.factor);
  CHECK_THROWS(normalize_indices(std::span<const int>()));
  const int bad[] = {4};
  CHECK_THROWS(normalize_indices(bad));
}

TEST_CASE("Greek index normalization agrees with explicit matrices") {
  std::size_t checked = 0;
  for (int len = 1; len <= 4; ++len) {
    int count = 1;
    for (int k = 0; k < len; ++k) count *= 4;
    for (int c = 0; c < count; ++c) {
      std::vector<int> v;
      for (int x = c, k = 0; k < len; ++k, x /= 4) v.push_back(x % 4);
      const NormalizedIndex r = normalize_indices(v);
      CAPTURE(v);
      CHECK(greek_word(v) == r.factor * greek_key(r.key));
      ++checked;
    }
  }
  CHECK(checked == 340);
}

TEST_CASE("closure tables") {
  const GradedModel& cl4 = models().cl4;
  const BracketTable& t4 = *cl4.table;
  CHECK(conv(cl4, t4, "Q_001", "Q_001", "H_000") == G(2));
  CHECK(conv(cl4, t4, "Q_100", "Q_100", "H_000") == G(2));

  const GradedModel& cl6b = models().cl6b;
  CHECK(conv(cl6b, *cl6b.table, "Q_1", "Q_2", "H_12") == G(0, -2));

  // single target at degree 110 for a 100 x 010 pair
  const std::size_t i = cl4.require("Q_100"), j = cl4.require("S_010");
  const auto& cell = t4.cell(i, j);
  REQUIRE(cell.size() == 1);
  CHECK(cl4.basis[cell[0].k].degree == dv("110"));

  // every entry lands in the summed degree slice
  for (const GradedModel* m : {&models().cl4, &models().cl2n, &models().cl6b})
    for (std::size_t a = 0; a < m->basis.size(); ++a)
      for (std::size_t b = 0; b < m->basis.size(); ++b)
        for (const auto& e : m->table->cell(a, b))
          CHECK(m->basis[e.k].degree == m->basis[a].degree + m->basis[b].degree);
}

TEST_CASE("closure reports graded antisymmetry") {
  const ClosureReport r = verify_closure(models().cl4, 2);
  CHECK(r.passed());
  CHECK(r.pairs_checked == 400);
  CHECK(r.table == *models().cl4.table);
}

TEST_CASE("closure failure is reported") {
  GradedModel m = models().cl4;
  m.table.reset();
  m.basis.erase(m.basis.begin() + static_cast<long>(m.require("H_000")));
  const ClosureReport r = verify_closure(m);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.failures.empty());
  CHECK_THROWS_AS(ensure_table(m), ClosureViolation);
}

TEST_CASE("lifted osp(1|2) relations at the base degrees") {
  const GradedModel& m = models().cl4;
  auto lift = [](const std::string& g) { return g + (g == "Q" || g == "S" ? "_001" : "_000"); };
  for (const auto& rel : osp12_relations()) {
    CAPTURE(rel.left + "," + rel.right);
    CHECK(conv(m, *m.table, lift(rel.left).c_str(), lift(rel.right).c_str(), lift(rel.target).c_str()) == rel.coeff);
  }
}

TEST_CASE("Jacobi identity") {
  const GradedModel& cl4 = models().cl4;
  const JacobiReport def = verify_jacobi(cl4, {false, 2});
  CHECK(def.passed());
  CHECK(def.triples_checked == 1540);
  const JacobiReport all = verify_jacobi(cl4, {true, 2});
  CHECK(all.passed());
  CHECK(all.triples_checked == 8000);
  CHECK(verify_jacobi_table(cl4, *cl4.table, true).passed());
  CHECK(verify_jacobi_table(models().cl2n, *models().cl2n.table).passed());
  CHECK(verify_jacobi_table(models().cl6b, *models().cl6b.table).passed());

  // a corrupted table is caught
  BracketTable t = *cl4.table;
  const std::size_t q = cl4.require("Q_001");
  for (auto& e : t.cell(q, q)) e.coeff *= G(3);
  CHECK_FALSE(verify_jacobi_table(cl4, t, true).passed());
}

TEST_CASE("Hermiticity") {
  CHECK(verify_hermiticity(models().cl4).passed());
  CHECK(verify_hermiticity(models().cl2n).passed());
  CHECK(verify_hermiticity(models().cl6b).passed());
  GradedModel m = models().cl4;
  m.basis[0].op *= BetaPoly(G::i());
  CHECK(verify_hermiticity(m).failures.size() == 1);
}

TEST_CASE("structure constants in Greek form") {
  const GradedModel& m = models().cl6b;
  const GreekConstants c = extract_greek_constants(m, *m.table);
  const std::map<std::string, G> f{{"0123", G(1)}, {"1023", G(1)}, {"3012", G(1)}, {"2013", G(-1)}};
  const std::map<std::string, G> g{{"0123", G(1)},  {"0312", G(1)},  {"1203", G(1)},
                                   {"2301", G(1)},  {"0213", G(-1)}, {"1302", G(-1)}};
  const std::map<std::string, G> h{{"0123", G(1)}, {"0231", G(1)}, {"1230", G(1)}, {"0132", G(-1)}};
  CHECK(c.f == f);
  CHECK(c.g == g);
  CHECK(c.h == h);
  CHECK_THROWS(extract_greek_constants(models().cl4, *models().cl4.table));
}

TEST_CASE("coupling graph") {
  CHECK(coupling_graph(models().cl4).size() == 1);
  CHECK(coupling_graph(models().cl6b).size() == 1);
  const auto comps = coupling_graph(models().cl2n);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::size_t>{0, 2, 4, 6, 9, 11, 13, 15});
  CHECK(comps[1] == std::vector<std::size_t>{1, 3, 5, 7, 8, 10, 12, 14});
}

TEST_CASE("component degrees") {
  auto grades = [](const GradedModel& m) {
    std::vector<std::string> out;
    for (const auto& d : assign_component_degrees(m, 0, DegreeVector::zero(3))) out.push_back(d ? d->str() : "-");
    return out;
  };
  CHECK(grades(models().cl4) ==
        std::vector<std::string>{"000", "001", "110", "111", "011", "010", "101", "100"});
  const auto g2 = grades(models().cl6b);
  CHECK(g2 == std::vector<std::string>{"000", "111", "110", "001", "011", "100", "101", "010", "110", "001", "000",
                                       "111", "101", "010", "011", "100"});
  std::map<std::string, int> count;
  for (const auto& s : g2) ++count[s];
  for (const auto& [k, v] : count) CHECK(v == 2);

  // one degree-zero generator reaches only its own block
  GradedModel single;
  single.kind = "test";
  single.n = 3;
  single.dim = 8;
  const MatrixOp swap = tensor(ConstMatrix::identity(4), MatrixOp::from_const(pauli(1)));
  single.basis.push_back({"X_000", "X", "000", dv("000"), swap, 0});
  const auto d = assign_component_degrees(single, 0, dv("000"));
  CHECK(d[0] == dv("000"));
  CHECK(d[1] == dv("000"));
  CHECK_FALSE(d[2].has_value());

  // a diagonal entry cannot carry a nonzero degree
  single.basis.front().degree = dv("100");
  single.basis.front().op = swap + MatrixOp::identity(8);
  CHECK_THROWS_AS(assign_component_degrees(single, 0, dv("000")), InconsistentGrading);
}

TEST_CASE("general-n phase rules") {
  const SuperRealization r = build_osp12().as_super();
  const GradedModel printed = build_cl2nm2(r, 4, PhaseRule::kPrinted);
  const GradedModel herm = build_cl2nm2(r, 4, PhaseRule::kHermitian);
  CHECK(printed.basis.size() == 40);
  CHECK(printed.dim == 16);
  CHECK(verify_hermiticity(herm).passed());
  CHECK_FALSE(verify_hermiticity(printed).passed());
}
