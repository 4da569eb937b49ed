#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gradedsusy/gaussian_rational.hpp"

namespace gradedsusy {

// Dense row-major matrix over Q(i).
class GMatrix {
 public:
  GMatrix() = default;
  GMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> a_;
};

struct RrefResult {
  GMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Gauss-Jordan reduction to reduced row echelon form (first nonzero pivot).
RrefResult rref(GMatrix m);

// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
// Gaussian-integer entries, after which every division is exact in Z[i].
std::size_t bareiss_rank(const GMatrix& m);

// Basis of {v : m v = 0}, one vector per free column, each normalized so its
// free coordinate is 1.
std::vector<std::vector<GaussianRational>> nullspace(const GMatrix& m);

// Some solution of m x = rhs, or nullopt when inconsistent. Free variables are 0.
std::optional<std::vector<GaussianRational>> solve(const GMatrix& m,
                                                   const std::vector<GaussianRational>& rhs);

}  // namespace gradedsusy
