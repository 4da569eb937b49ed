#include "gradedsusy/exact_linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace gradedsusy {
namespace {

void swap_rows(GMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

mpz_class row_denominator_lcm(const GMatrix& m, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& z = m(r, c);
    if (z.is_zero()) continue;
    mpq_class re = z.re.to_mpq();
    mpq_class im = z.im.to_mpq();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), re.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), im.get_den_mpz_t());
  }
  return l;
}

}  // namespace

RrefResult rref(GMatrix m) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    swap_rows(m, row, piv);
    const GaussianRational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t bareiss_rank(const GMatrix& input) {
  GMatrix m = input;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const GaussianRational scale{Rational(mpq_class(row_denominator_lcm(m, r)))};
    if (scale.is_one()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) m(r, c) *= scale;
    }
  }
  GaussianRational prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    swap_rows(m, row, piv);
    const GaussianRational p = m(row, col);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      const GaussianRational lead = m(r, col);
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        GaussianRational v = m(r, c) * p - lead * m(row, c);
        if (!v.is_zero()) v /= prev;
        assert(v.re.is_integer() && v.im.is_integer());
        m(r, c) = std::move(v);
      }
      m(r, col) = GaussianRational();
    }
    prev = p;
    ++row;
  }
  return row;
}

std::vector<std::vector<GaussianRational>> nullspace(const GMatrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> v(m.cols());
    v[free] = GaussianRational(1);
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
      v[rr.pivot_cols[k]] = -rr.reduced(k, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<GaussianRational>> solve(const GMatrix& m,
                                                   const std::vector<GaussianRational>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  GMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const RrefResult rr = rref(std::move(aug));
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<GaussianRational> x(m.cols());
  for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) x[rr.pivot_cols[k]] = rr.reduced(k, m.cols());
  return x;
}

}  // namespace gradedsusy
