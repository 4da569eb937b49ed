#pragma once

#include <cstddef>
#include <string>

#include "gradedsusy/rational.hpp"

namespace gradedsusy {

// Element re + im*i of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit embedding of Q
  GaussianRational(int r) : re(r) {}                  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  // i^k for any integer k.
  static GaussianRational i_pow(int k);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_one() const { return re.is_one() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  // Human-readable form: "3", "-i", "1/2+3/4*i".
  std::string str() const;
  std::size_t hash() const { return re.hash() * 31 + im.hash(); }
};

}  // namespace gradedsusy
