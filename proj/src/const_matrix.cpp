#include "gradedsusy/const_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gradedsusy {

ConstMatrix::ConstMatrix(std::size_t dim, std::vector<GaussianRational> entries)
    : dim_(dim), a_(std::move(entries)) {
  if (a_.size() != dim * dim) throw std::invalid_argument("ConstMatrix: entry count is not dim^2");
}

ConstMatrix ConstMatrix::identity(std::size_t dim) {
  ConstMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = GaussianRational(1);
  return m;
}

ConstMatrix ConstMatrix::adjoint() const {
  ConstMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

bool ConstMatrix::is_zero() const {
  for (const auto& z : a_)
    if (!z.is_zero()) return false;
  return true;
}

ConstMatrix& ConstMatrix::operator+=(const ConstMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("ConstMatrix: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ConstMatrix& ConstMatrix::operator-=(const ConstMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("ConstMatrix: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ConstMatrix& ConstMatrix::operator*=(const GaussianRational& c) {
  for (auto& z : a_) z *= c;
  return *this;
}

ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("ConstMatrix: dimension mismatch");
  const std::size_t n = a.dim_;
  ConstMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const auto& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  }
  return out;
}

std::string ConstMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).str();
    }
    os << '\n';
  }
  return os.str();
}

ConstMatrix kron(const ConstMatrix& a, const ConstMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ConstMatrix out(da * db);
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t c = 0; c < da; ++c) {
      const auto& x = a(r, c);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < db; ++p)
        for (std::size_t q = 0; q < db; ++q) {
          const auto& y = b(p, q);
          if (!y.is_zero()) out(r * db + p, c * db + q) = x * y;
        }
    }
  return out;
}

}  // namespace gradedsusy
