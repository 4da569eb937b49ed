#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gradedsusy/beta_poly.hpp"

namespace gradedsusy {

// One normal-ordered term coeff * x^xpow * d^dpow (d = d/dx).
struct WeylTerm {
  int xpow = 0;
  int dpow = 0;
  BetaPoly coeff;

  friend bool operator==(const WeylTerm&, const WeylTerm&) = default;
};

// Element of the one-variable Weyl algebra with Laurent powers of x, kept in
// the canonical normal order (all x to the left of all d). Terms are sorted by
// (xpow, dpow) with nonzero coefficients, so equal operators compare equal
// term-for-term.
class DiffOp {
 public:
  DiffOp() = default;
  // Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
  explicit DiffOp(std::vector<WeylTerm> terms);

  static DiffOp scalar(BetaPoly c);
  static DiffOp monomial(BetaPoly c, int xpow, int dpow);
  static DiffOp x(int power = 1) { return monomial(BetaPoly(1), power, 0); }
  static DiffOp d(int power = 1) { return monomial(BetaPoly(1), 0, power); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<WeylTerm>& terms() const { return terms_; }
  // Highest beta power appearing in any coefficient; -1 for zero.
  int beta_degree() const;

  // Formal adjoint: x^dagger = x, d^dagger = -d, coefficients conjugated,
  // factor order reversed, result re-normal-ordered.
  DiffOp adjoint() const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const BetaPoly& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);  // composition
  friend DiffOp operator*(const BetaPoly& c, DiffOp a) { return a *= c; }
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  // "c * x^m * d^k + ..." in (xpow, dpow) order; "0" when empty.
  std::string str() const;

 private:
  std::vector<WeylTerm> terms_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b);

// Normal-ordered form of d^k x^m: sum_j C(k,j) m(m-1)...(m-j+1) x^(m-j) d^(k-j).
std::vector<WeylTerm> reorder_d_past_x(int dpow, int xpow);

}  // namespace gradedsusy
