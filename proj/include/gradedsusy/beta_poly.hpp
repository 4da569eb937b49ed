#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gradedsusy/gaussian_rational.hpp"

namespace gradedsusy {

// Univariate polynomial in the formal (real) coupling beta over Q(i).
// Dense coefficient list indexed by power, trailing zeros trimmed; the zero
// polynomial has no coefficients.
class BetaPoly {
 public:
  BetaPoly() = default;
  BetaPoly(GaussianRational c);  // NOLINT: degree-0 embedding
  BetaPoly(Rational c) : BetaPoly(GaussianRational(std::move(c))) {}  // NOLINT
  BetaPoly(int c) : BetaPoly(GaussianRational(c)) {}                  // NOLINT
  explicit BetaPoly(std::vector<GaussianRational> coeffs);

  // c * beta^power
  static BetaPoly monomial(GaussianRational c, std::size_t power);
  static BetaPoly beta() { return monomial(GaussianRational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coeff(std::size_t power) const;
  // Value of the constant term; meaningful when is_constant().
  GaussianRational constant() const { return coeff(0); }

  // beta is real, so only the coefficients are conjugated.
  BetaPoly conj() const;
  GaussianRational eval(const Rational& beta) const;

  BetaPoly operator-() const;
  BetaPoly& operator+=(const BetaPoly& o);
  BetaPoly& operator-=(const BetaPoly& o);
  BetaPoly& operator*=(const BetaPoly& o);
  BetaPoly& operator*=(const GaussianRational& c);

  friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
  friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
  friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
  friend BetaPoly operator*(BetaPoly a, const GaussianRational& c) { return a *= c; }
  friend BetaPoly operator*(const GaussianRational& c, BetaPoly a) { return a *= c; }
  friend bool operator==(const BetaPoly& a, const BetaPoly& b) = default;

  // "0", "1/2", "(1/2+1/2*b^2)" style rendering; b stands for beta.
  std::string str() const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

}  // namespace gradedsusy
