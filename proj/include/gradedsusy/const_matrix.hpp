#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gradedsusy/gaussian_rational.hpp"

namespace gradedsusy {

// Square matrix with exact Q(i) entries.
class ConstMatrix {
 public:
  ConstMatrix() = default;
  explicit ConstMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  ConstMatrix(std::size_t dim, std::vector<GaussianRational> entries);

  static ConstMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  ConstMatrix adjoint() const;
  bool is_zero() const;

  ConstMatrix& operator+=(const ConstMatrix& o);
  ConstMatrix& operator-=(const ConstMatrix& o);
  ConstMatrix& operator*=(const GaussianRational& c);
  friend ConstMatrix operator+(ConstMatrix a, const ConstMatrix& b) { return a += b; }
  friend ConstMatrix operator-(ConstMatrix a, const ConstMatrix& b) { return a -= b; }
  friend ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b);
  friend ConstMatrix operator*(const GaussianRational& c, ConstMatrix a) { return a *= c; }
  friend bool operator==(const ConstMatrix& a, const ConstMatrix& b) = default;

  // Row-per-line rendering with space-separated entries.
  std::string str() const;

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianRational> a_;
};

// Kronecker product; the left factor selects the coarse block index:
// (A (x) B)[r*dB + p][c*dB + q] = A[r][c] * B[p][q].
ConstMatrix kron(const ConstMatrix& a, const ConstMatrix& b);

}  // namespace gradedsusy
