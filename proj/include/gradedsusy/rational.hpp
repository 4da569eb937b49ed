#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gradedsusy {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in int64 are kept inline; anything
// larger is promoted to a GMP rational and demoted again as soon as it fits.
// The representation is canonical, so equality is a field comparison.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) { check_small_numerator(); }  // NOLINT: implicit by design
  Rational(int n) : num_(n) {}                                      // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "-p", "p/q" with arbitrarily many digits.
  static Rational parse(std::string_view text);

  std::string str() const;
  mpq_class to_mpq() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }

  Rational operator-() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

  // Floor of the value; throws std::overflow_error if it does not fit int64.
  std::int64_t floor() const;

 private:
  void check_small_numerator();
  void assign_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace gradedsusy
