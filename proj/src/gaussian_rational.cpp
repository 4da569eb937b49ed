#include "gradedsusy/gaussian_rational.hpp"

#include <stdexcept>

namespace gradedsusy {

GaussianRational GaussianRational::i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
  if (im.is_zero()) return {re.reciprocal(), Rational(0)};
  const Rational n = norm();
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  // Most coefficients in practice are purely real or purely imaginary.
  if (o.im.is_zero()) {
    re *= o.re;
    im *= o.re;
    return *this;
  }
  if (o.re.is_zero()) {
    Rational new_re = -(im * o.im);
    im = re * o.im;
    re = std::move(new_re);
    return *this;
  }
  Rational new_re = re * o.re - im * o.im;
  Rational new_im = re * o.im + im * o.re;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag;
  if (im.is_one()) {
    imag = "i";
  } else if (im == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im.str() + "*i";
  }
  if (re.is_zero()) return imag;
  if (im.sign() > 0) return re.str() + "+" + imag;
  return re.str() + imag;
}

}  // namespace gradedsusy
