#include "gradedsusy/osp12.hpp"

#include <algorithm>
#include <map>

#include "gradedsusy/clifford.hpp"

namespace gradedsusy {
namespace {

BetaPoly poly(std::vector<GaussianRational> c) { return BetaPoly(std::move(c)); }

}  // namespace

SuperRealization Osp12Realization::as_super() const {
  SuperRealization r;
  r.even = {{"H", H, 0}, {"D", D, 0}, {"K", K, 0}};
  r.odd = {{"Q", Q, 1}, {"S", S, 1}};
  r.gamma = gamma;
  return r;
}

Osp12Realization build_osp12() {
  const GaussianRational i = GaussianRational::i();
  const Rational half(1, 2);
  Osp12Realization r{MatrixOp(2), MatrixOp(2), MatrixOp(2), MatrixOp(2), MatrixOp(2), pauli(3)};

  r.Q(0, 1) = DiffOp::monomial(-i, 0, 1) + DiffOp::monomial(BetaPoly::monomial(i, 1), -1, 0);
  r.Q(1, 0) = DiffOp::monomial(-i, 0, 1) + DiffOp::monomial(BetaPoly::monomial(-i, 1), -1, 0);

  r.S(0, 1) = DiffOp::x();
  r.S(1, 0) = DiffOp::x();

  const DiffOp kinetic = DiffOp::monomial(BetaPoly(-half), 0, 2);
  r.H(0, 0) = kinetic + DiffOp::monomial(poly({0, half, half}), -2, 0);
  r.H(1, 1) = kinetic + DiffOp::monomial(poly({0, -half, half}), -2, 0);

  const DiffOp dil = DiffOp::monomial(i * GaussianRational(half), 1, 1) +
                     DiffOp::scalar(i * GaussianRational(Rational(1, 4)));
  r.D(0, 0) = dil;
  r.D(1, 1) = dil;

  r.K(0, 0) = DiffOp::monomial(BetaPoly(half), 2, 0);
  r.K(1, 1) = DiffOp::monomial(BetaPoly(half), 2, 0);
  return r;
}

const std::vector<Osp12Relation>& osp12_relations() {
  const GaussianRational i = GaussianRational::i();
  const GaussianRational half(Rational(1, 2));
  static const std::vector<Osp12Relation> rel = {
      {"Q", "Q", 2, "H"},
      {"S", "S", 2, "K"},
      {"Q", "S", -2, "D"},
      {"D", "Q", -(i * half), "Q"},
      {"D", "S", i * half, "S"},
      {"Q", "K", -i, "S"},
      {"S", "H", i, "Q"},
      {"D", "K", i, "K"},
      {"H", "K", i * GaussianRational(2), "D"},
      {"D", "H", -i, "H"},
  };
  return rel;
}

bool Osp12Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

Osp12Report verify_osp12(const Osp12Realization& r) {
  const SuperRealization s = r.as_super();
  const std::vector<std::string> order = {"Q", "S", "H", "D", "K"};
  auto get = [&](const std::string& n) { return s.find(n); };
  std::vector<const MatrixOp*> basis;
  for (const auto& n : order) basis.push_back(&get(n)->op);
  auto odd = [](const std::string& n) { return n == "Q" || n == "S"; };

  // Conventional coefficients of [a, b] against the five generators.
  auto conventional = [&](const std::string& a, const std::string& b) {
    const NamedOp *pa = get(a), *pb = get(b);
    const BracketKind kind = odd(a) && odd(b) ? BracketKind::kAnticommutator : BracketKind::kCommutator;
    const MatrixOp br = bracket(pa->op, pb->op, kind);
    std::vector<BetaPoly> c = decompose(br, std::span<const MatrixOp* const>(basis));
    std::map<std::string, BetaPoly> out;
    for (std::size_t k = 0; k < order.size(); ++k)
      if (!c[k].is_zero())
        out[order[k]] = c[k] * GaussianRational(scale_factor(get(order[k])->scale_exp, pa->scale_exp, pb->scale_exp));
    return out;
  };
  auto render = [](const std::map<std::string, BetaPoly>& m) {
    if (m.empty()) return std::string("0");
    std::string s;
    for (const auto& [name, c] : m) s += (s.empty() ? "" : " + ") + c.str() + " " + name;
    return s;
  };
  auto bracket_name = [&](const std::string& a, const std::string& b) {
    return odd(a) && odd(b) ? "{" + a + "," + b + "}" : "[" + a + "," + b + "]";
  };

  Osp12Report rep;
  std::vector<std::pair<std::string, std::string>> listed;
  for (const auto& rel : osp12_relations()) {
    std::map<std::string, BetaPoly> expected{{rel.target, BetaPoly(rel.coeff)}};
    auto got = conventional(rel.left, rel.right);
    rep.checks.push_back({bracket_name(rel.left, rel.right), render(expected), render(got), got == expected});
    listed.emplace_back(rel.left, rel.right);
    listed.emplace_back(rel.right, rel.left);
  }
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a; b < order.size(); ++b) {
      if (std::find(listed.begin(), listed.end(), std::pair(order[a], order[b])) != listed.end()) continue;
      auto got = conventional(order[a], order[b]);
      rep.checks.push_back({bracket_name(order[a], order[b]), "0", render(got), got.empty()});
    }
  return rep;
}

GradedModel build_model(std::string_view kind, int n, PhaseRule rule) {
  const SuperRealization s = build_osp12().as_super();
  GradedModel m;
  if (kind == "cl4" || kind == "cl2nm2") {
    m = build_cl2nm2(s, n, rule);
  } else if (kind == "cl2n") {
    m = build_cl2n(s, n);
  } else if (kind == "cl6b") {
    if (n != 3) throw std::invalid_argument("build_model: cl6b is defined for n = 3 only");
    m = build_cl6b(s);
  } else {
    throw std::invalid_argument("build_model: unknown kind " + std::string(kind));
  }
  m.metadata["algebra"] = "osp12";
  return m;
}

}  // namespace gradedsusy
