#include "gradedsusy/wave_vector.hpp"

#include <optional>
#include <stdexcept>

namespace gradedsusy {
namespace {

using Component = WaveVector::Component;

void add_to(Component& c, const Rational& q, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c.emplace(q, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

Component derivative(const Component& c) {
  Component out;
  for (const auto& [q, v] : c) {
    if (!q.is_zero()) add_to(out, q - Rational(1), v * GaussianRational(q));
    add_to(out, q + Rational(1), -v);
  }
  return out;
}

}  // namespace

WaveVector WaveVector::monomial(std::size_t ncomp, std::size_t comp, const Rational& q, const GaussianRational& c) {
  WaveVector w(ncomp);
  w.add(comp, q, c);
  return w;
}

void WaveVector::add(std::size_t comp, const Rational& q, const GaussianRational& c) {
  if (comp >= comps_.size()) throw std::out_of_range("WaveVector: component out of range");
  add_to(comps_[comp], q, c);
}

bool WaveVector::is_zero() const {
  for (const auto& c : comps_)
    if (!c.empty()) return false;
  return true;
}

std::vector<std::size_t> WaveVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < comps_.size(); ++k)
    if (!comps_[k].empty()) out.push_back(k);
  return out;
}

Rational WaveVector::min_exponent() const {
  std::optional<Rational> m;
  for (const auto& c : comps_)
    if (!c.empty() && (!m || c.begin()->first < *m)) m = c.begin()->first;
  if (!m) throw std::logic_error("WaveVector::min_exponent: zero vector");
  return *m;
}

WaveVector& WaveVector::operator+=(const WaveVector& o) {
  if (o.comps_.size() != comps_.size()) throw std::invalid_argument("WaveVector: component count mismatch");
  for (std::size_t k = 0; k < comps_.size(); ++k)
    for (const auto& [q, v] : o.comps_[k]) add_to(comps_[k], q, v);
  return *this;
}

WaveVector& WaveVector::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    for (auto& comp : comps_) comp.clear();
    return *this;
  }
  for (auto& comp : comps_)
    for (auto& [q, v] : comp) v *= c;
  return *this;
}

std::string WaveVector::str() const {
  std::string out;
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    if (comps_[k].empty()) continue;
    out += "[" + std::to_string(k) + "]";
    for (const auto& [q, v] : comps_[k]) out += " (" + v.str() + ") x^" + q.str();
    out += "\n";
  }
  return out.empty() ? "0\n" : out;
}

WaveVector apply(const MatrixOp& op, const Rational& beta, const WaveVector& psi) {
  if (op.dim() != psi.ncomp()) throw std::invalid_argument("apply: dimension mismatch");
  const std::size_t n = psi.ncomp();
  WaveVector out(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (psi.component(c).empty()) continue;
    // Derivatives of this component, computed on demand.
    std::vector<Component> ders{psi.component(c)};
    for (std::size_t r = 0; r < n; ++r) {
      for (const auto& t : op(r, c).terms()) {
        while (ders.size() <= static_cast<std::size_t>(t.dpow)) ders.push_back(derivative(ders.back()));
        const GaussianRational coeff = t.coeff.eval(beta);
        if (coeff.is_zero()) continue;
        for (const auto& [q, v] : ders[t.dpow]) out.add(r, q + Rational(t.xpow), v * coeff);
      }
    }
  }
  return out;
}

}  // namespace gradedsusy
