#include "gradedsusy/graded_model.hpp"

namespace gradedsusy {

std::size_t SuperRealization::dim() const {
  if (!even.empty()) return even.front().op.dim();
  if (!odd.empty()) return odd.front().op.dim();
  return gamma ? gamma->dim() : 0;
}

const NamedOp* SuperRealization::find(std::string_view name) const {
  for (const auto& g : even)
    if (g.name == name) return &g;
  for (const auto& g : odd)
    if (g.name == name) return &g;
  return nullptr;
}

std::optional<std::size_t> GradedModel::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].name == name) return k;
  return std::nullopt;
}

std::size_t GradedModel::require(std::string_view name) const {
  auto k = index_of(name);
  if (!k) throw std::out_of_range("GradedModel: no generator named " + std::string(name));
  return *k;
}

std::vector<std::size_t> GradedModel::slice(const DegreeVector& d) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].degree == d) out.push_back(k);
  return out;
}

BracketKind bracket_kind(const DegreeVector& a, const DegreeVector& b) {
  return a.dot(b) == 1 ? BracketKind::kAnticommutator : BracketKind::kCommutator;
}

MatrixOp graded_bracket(const Generator& x, const Generator& y) {
  return bracket(x.op, y.op, bracket_kind(x.degree, y.degree));
}

Rational scale_factor(int e_target, int e_left, int e_right) {
  const int e = e_target - e_left - e_right;
  if (e % 2 != 0) throw std::logic_error("scale_factor: odd power of sqrt 2");
  const int h = e / 2;
  Rational r(1);
  for (int k = 0; k < (h < 0 ? -h : h); ++k) r *= Rational(2);
  return h < 0 ? r.reciprocal() : r;
}

}  // namespace gradedsusy
