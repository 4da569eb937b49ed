#include <doctest.h>

#include <random>

#include "gradedsusy/clifford.hpp"
#include "gradedsusy/matrix_op.hpp"
#include "gradedsusy/osp12.hpp"

using namespace gradedsusy;
using G = GaussianRational;

namespace {

// Oracle for normal order: a word of letters 'x', 'y' (= x^-1) and 'd',
// rewritten one step at a time with d x = x d + 1 and d y = y d - y y.
using Word = std::string;

std::map<std::pair<int, int>, Rational> normal_order(const Word& w) {
  std::map<std::pair<int, int>, Rational> out;
  std::vector<std::pair<Word, Rational>> todo{{w, Rational(1)}};
  while (!todo.empty()) {
    auto [cur, c] = todo.back();
    todo.pop_back();
    std::size_t pos = Word::npos;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k)
      if (cur[k] == 'd' && cur[k + 1] != 'd') {
        pos = k;
        break;
      }
    if (pos == Word::npos) {
      int xp = 0, dp = 0;
      for (char ch : cur) {
        if (ch == 'x') ++xp;
        if (ch == 'y') --xp;
        if (ch == 'd') ++dp;
      }
      out[{xp, dp}] += c;
      continue;
    }
    const char v = cur[pos + 1];
    Word swapped = cur;
    std::swap(swapped[pos], swapped[pos + 1]);
    todo.push_back({swapped, c});
    if (v == 'x') {
      todo.push_back({cur.substr(0, pos) + cur.substr(pos + 2), c});
    } else {
      todo.push_back({cur.substr(0, pos) + "yy" + cur.substr(pos + 2), -c});
    }
  }
  return out;
}

DiffOp from_word(const Word& w) {
  DiffOp r = DiffOp::scalar(BetaPoly(1));
  for (char ch : w) r = r * (ch == 'x' ? DiffOp::x() : ch == 'y' ? DiffOp::x(-1) : DiffOp::d());
  return r;
}

DiffOp rand_op(std::mt19937& rng) {
  std::uniform_int_distribution<int> xp(-2, 2), dp(0, 2), v(-2, 2), nt(1, 3);
  std::vector<WeylTerm> t;
  for (int k = nt(rng); k > 0; --k)
    t.push_back({xp(rng), dp(rng), BetaPoly(std::vector<G>{G(v(rng), v(rng)), G(v(rng))})});
  return DiffOp(std::move(t));
}

MatrixOp rand_matrix(std::mt19937& rng, std::size_t dim) {
  MatrixOp m(dim);
  std::bernoulli_distribution on(0.5);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (on(rng)) m(r, c) = rand_op(rng);
  return m;
}

}  // namespace

TEST_CASE("compose examples") {
  CHECK(DiffOp::d() * DiffOp::x() == DiffOp::x() * DiffOp::d() + DiffOp::scalar(BetaPoly(1)));
  CHECK(DiffOp::d() * DiffOp::x(-1) == DiffOp::x(-1) * DiffOp::d() - DiffOp::x(-2));
  const DiffOp p = DiffOp::monomial(BetaPoly(-G::i()), 0, 1);
  CHECK(p * p == -DiffOp::d(2));
}

TEST_CASE("normal order matches one-step rewriting") {
  std::mt19937 rng(17);
  const char letters[] = {'x', 'y', 'd'};
  for (int t = 0; t < 200; ++t) {
    Word w;
    for (int k = 0; k < 2 + t % 6; ++k) w.push_back(letters[rng() % 3]);
    std::vector<WeylTerm> terms;
    for (const auto& [k, c] : normal_order(w)) terms.push_back({k.first, k.second, BetaPoly(G(c))});
    CAPTURE(w);
    CHECK(from_word(w) == DiffOp(std::move(terms)));
  }
}

TEST_CASE("reorder_d_past_x closed form") {
  // d^2 x^3 = x^3 d^2 + 6 x^2 d + 6 x
  const DiffOp lhs = DiffOp(reorder_d_past_x(2, 3));
  CHECK(lhs == DiffOp::x(3) * DiffOp::d(2) + BetaPoly(6) * (DiffOp::x(2) * DiffOp::d()) + BetaPoly(6) * DiffOp::x());
  CHECK(lhs == DiffOp::d(2) * DiffOp::x(3));
}

TEST_CASE("composition is associative and adjoint reverses it") {
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    const DiffOp a = rand_op(rng), b = rand_op(rng), c = rand_op(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
    CHECK(a.adjoint().adjoint() == a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("adjoint examples") {
  const MatrixOp p = MatrixOp::from_const(ConstMatrix::identity(1));
  MatrixOp pm(1);
  pm(0, 0) = DiffOp::monomial(BetaPoly(-G::i()), 0, 1);
  CHECK(pm.adjoint() == pm);
  const DiffOp xd = DiffOp::x() * DiffOp::d();
  CHECK(xd.adjoint() == -xd - DiffOp::scalar(BetaPoly(1)));
  const Osp12Realization o = build_osp12();
  for (const MatrixOp* g : {&o.Q, &o.S, &o.H, &o.D, &o.K}) CHECK(g->adjoint() == *g);
  (void)p;
}

TEST_CASE("matrix operators: products and brackets") {
  std::mt19937 rng(29);
  for (int t = 0; t < 30; ++t) {
    const MatrixOp a = rand_matrix(rng, 2), b = rand_matrix(rng, 2), c = rand_matrix(rng, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
    CHECK(bracket(a, b, BracketKind::kCommutator) == -bracket(b, a, BracketKind::kCommutator));
    CHECK(bracket(a, b, BracketKind::kAnticommutator) == bracket(b, a, BracketKind::kAnticommutator));
  }
  const Osp12Realization o = build_osp12();
  CHECK(bracket(o.D, o.H, BracketKind::kCommutator) == BetaPoly(-G::i()) * o.H);
  // internal Q is sqrt 2 times the conventional one
  CHECK(bracket(o.Q, o.Q, BracketKind::kAnticommutator) == BetaPoly(4) * o.H);
  CHECK(bracket(o.H, o.H, BracketKind::kCommutator).is_zero());
}

TEST_CASE("tensor with constant matrices") {
  const Osp12Realization o = build_osp12();
  const MatrixOp t = tensor(ConstMatrix::identity(4), o.H);
  CHECK(t.dim() == 8);
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) CHECK(t(2 * b + r, 2 * b + c) == o.H(r, c));
  CHECK(t(0, 2).is_zero());
  const MatrixOp s = tensor(pauli(3), MatrixOp::identity(2));
  CHECK(s(0, 0) == DiffOp::scalar(BetaPoly(1)));
  CHECK(s(1, 1) == DiffOp::scalar(BetaPoly(1)));
  CHECK(s(2, 2) == DiffOp::scalar(BetaPoly(-1)));
  CHECK(s(3, 3) == DiffOp::scalar(BetaPoly(-1)));
  // mixed-product property
  const ConstMatrix g1 = build_gamma(2, 1), g2 = build_gamma(2, 2);
  CHECK(tensor(g1, o.Q) * tensor(g2, o.S) == tensor(g1 * g2, o.Q * o.S));
}

TEST_CASE("decompose") {
  const Osp12Realization o = build_osp12();
  const MatrixOp hdk[] = {o.H, o.D, o.K};
  auto c = decompose(BetaPoly(2) * o.H, std::span<const MatrixOp>(hdk));
  CHECK(c == std::vector<BetaPoly>{BetaPoly(2), BetaPoly(0), BetaPoly(0)});
  c = decompose(BetaPoly(3) * o.K - BetaPoly(G::i()) * o.D, std::span<const MatrixOp>(hdk));
  CHECK(c == std::vector<BetaPoly>{BetaPoly(0), BetaPoly(-G::i()), BetaPoly(3)});

  const int w12[] = {1, 2};
  const MatrixOp target = tensor(gamma_product(3, w12), o.H);
  const MatrixOp other[] = {tensor(build_gamma(3, 3), o.H)};
  CHECK_THROWS_AS(decompose(target, std::span<const MatrixOp>(other)), NotInSpan);

  // beta-dependent coefficient: beta * sigma3 against the identity and sigma3
  MatrixOp bs = BetaPoly::beta() * MatrixOp::from_const(pauli(3));
  const MatrixOp basis[] = {MatrixOp::identity(2), MatrixOp::from_const(pauli(3))};
  c = decompose(bs, std::span<const MatrixOp>(basis));
  CHECK(c[0].is_zero());
  CHECK(c[1] == BetaPoly::beta());
}
