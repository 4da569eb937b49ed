#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gradedsusy/gaussian_rational.hpp"
#include "gradedsusy/matrix_op.hpp"

namespace gradedsusy {

// Vector-valued function sum_q c_{k,q} x^q exp(-x^2/2) per component k.
class WaveVector {
 public:
  using Component = std::map<Rational, GaussianRational>;

  WaveVector() = default;
  explicit WaveVector(std::size_t ncomp) : comps_(ncomp) {}
  // c x^q exp(-x^2/2) in component comp.
  static WaveVector monomial(std::size_t ncomp, std::size_t comp, const Rational& q,
                             const GaussianRational& c = GaussianRational(1));

  std::size_t ncomp() const { return comps_.size(); }
  const Component& component(std::size_t k) const { return comps_[k]; }
  void add(std::size_t comp, const Rational& q, const GaussianRational& c);

  bool is_zero() const;
  // Components with at least one term.
  std::vector<std::size_t> support() const;
  // Smallest exponent present; the vector must be nonzero.
  Rational min_exponent() const;

  WaveVector& operator+=(const WaveVector& o);
  WaveVector& operator*=(const GaussianRational& c);
  friend WaveVector operator+(WaveVector a, const WaveVector& b) { return a += b; }
  friend WaveVector operator*(const GaussianRational& c, WaveVector a) { return a *= c; }
  friend bool operator==(const WaveVector&, const WaveVector&) = default;

  // "[k] c x^q + ..." per nonzero component.
  std::string str() const;

 private:
  std::vector<Component> comps_;
};

// Exact action of a matrix of differential operators with beta set to a
// rational value, using d(x^q e) = (q x^(q-1) - x^(q+1)) e, e = exp(-x^2/2).
WaveVector apply(const MatrixOp& op, const Rational& beta, const WaveVector& psi);

}  // namespace gradedsusy
