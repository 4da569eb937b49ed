#include "gradedsusy/beta_poly.hpp"

#include <algorithm>

namespace gradedsusy {

BetaPoly::BetaPoly(GaussianRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

BetaPoly::BetaPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BetaPoly BetaPoly::monomial(GaussianRational c, std::size_t power) {
  BetaPoly p;
  if (c.is_zero()) return p;
  p.coeffs_.resize(power + 1);
  p.coeffs_[power] = std::move(c);
  return p;
}

void BetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational BetaPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : GaussianRational();
}

BetaPoly BetaPoly::conj() const {
  BetaPoly r = *this;
  for (auto& c : r.coeffs_) c.im = -c.im;
  return r;
}

GaussianRational BetaPoly::eval(const Rational& beta) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= GaussianRational(beta);
    acc += *it;
  }
  return acc;
}

BetaPoly BetaPoly::operator-() const {
  BetaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.coeffs_.size() == 1) return b * a.coeffs_[0];
  if (b.coeffs_.size() == 1) return a * b.coeffs_[0];
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return BetaPoly(std::move(out));
}

BetaPoly& BetaPoly::operator*=(const BetaPoly& o) {
  *this = *this * o;
  return *this;
}

BetaPoly& BetaPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string BetaPoly::str() const {
  if (coeffs_.empty()) return "0";
  if (coeffs_.size() == 1) return coeffs_[0].str();
  std::string out = "(";
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term;
    const bool needs_paren = !c.re.is_zero() && !c.im.is_zero();
    std::string cs = needs_paren ? "(" + c.str() + ")" : c.str();
    if (k == 0) {
      term = cs;
    } else {
      std::string pw = k == 1 ? "b" : "b^" + std::to_string(k);
      if (c.is_one()) {
        term = pw;
      } else if (c == GaussianRational(-1)) {
        term = "-" + pw;
      } else {
        term = cs + "*" + pw;
      }
    }
    if (!first && term[0] != '-') out += "+";
    out += term;
    first = false;
  }
  return out + ")";
}

}  // namespace gradedsusy
