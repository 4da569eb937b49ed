#include "gradedsusy/matrix_op.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gradedsusy/exact_linalg.hpp"

namespace gradedsusy {

MatrixOp MatrixOp::identity(std::size_t dim) {
  MatrixOp m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = DiffOp::scalar(BetaPoly(1));
  return m;
}

MatrixOp MatrixOp::from_const(const ConstMatrix& c) {
  MatrixOp m(c.dim());
  for (std::size_t r = 0; r < c.dim(); ++r)
    for (std::size_t k = 0; k < c.dim(); ++k)
      if (!c(r, k).is_zero()) m(r, k) = DiffOp::scalar(BetaPoly(c(r, k)));
  return m;
}

MatrixOp MatrixOp::with_degree(DegreeVector d) const {
  MatrixOp m = *this;
  m.degree_ = d;
  return m;
}

bool MatrixOp::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const DiffOp& d) { return d.is_zero(); });
}

std::size_t MatrixOp::nonzero_entries() const {
  return static_cast<std::size_t>(
      std::count_if(e_.begin(), e_.end(), [](const DiffOp& d) { return !d.is_zero(); }));
}

int MatrixOp::beta_degree() const {
  int deg = -1;
  for (const auto& d : e_) deg = std::max(deg, d.beta_degree());
  return deg;
}

MatrixOp MatrixOp::adjoint() const {
  MatrixOp m(dim_);
  m.degree_ = degree_;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (!(*this)(r, c).is_zero()) m(c, r) = (*this)(r, c).adjoint();
  return m;
}

MatrixOp MatrixOp::operator-() const {
  MatrixOp m = *this;
  for (auto& d : m.e_) d = -d;
  return m;
}

MatrixOp& MatrixOp::operator+=(const MatrixOp& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("MatrixOp: dimension mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (!o.e_[k].is_zero()) e_[k] += o.e_[k];
  return *this;
}

MatrixOp& MatrixOp::operator-=(const MatrixOp& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("MatrixOp: dimension mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (!o.e_[k].is_zero()) e_[k] -= o.e_[k];
  return *this;
}

MatrixOp& MatrixOp::operator*=(const BetaPoly& c) {
  for (auto& d : e_) d *= c;
  return *this;
}

MatrixOp operator*(const MatrixOp& a, const MatrixOp& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("MatrixOp: dimension mismatch");
  const std::size_t n = a.dim_;
  // Column support of each row of b, so the inner loop only visits nonzeros.
  std::vector<std::vector<std::size_t>> b_rows(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c)
      if (!b(k, c).is_zero()) b_rows[k].push_back(c);
  MatrixOp out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const DiffOp& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c : b_rows[k]) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

std::string MatrixOp::str() const {
  std::string out;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (!(*this)(r, c).is_zero())
        out += "[" + std::to_string(r) + "," + std::to_string(c) + "] " + (*this)(r, c).str() + "\n";
  return out.empty() ? "0\n" : out;
}

MatrixOp bracket(const MatrixOp& a, const MatrixOp& b, BracketKind kind) {
  if (a.dim() != b.dim()) throw std::invalid_argument("bracket: dimension mismatch");
  MatrixOp ab = a * b;
  MatrixOp ba = b * a;
  return kind == BracketKind::kCommutator ? ab - ba : ab + ba;
}

MatrixOp tensor(const ConstMatrix& c, const MatrixOp& a) {
  const std::size_t dc = c.dim(), da = a.dim();
  MatrixOp out(dc * da);
  for (std::size_t r = 0; r < dc; ++r)
    for (std::size_t s = 0; s < dc; ++s) {
      const GaussianRational& z = c(r, s);
      if (z.is_zero()) continue;
      const BetaPoly zp(z);
      for (std::size_t p = 0; p < da; ++p)
        for (std::size_t q = 0; q < da; ++q) {
          if (a(p, q).is_zero()) continue;
          out(r * da + p, s * da + q) = zp * a(p, q);
        }
    }
  return out;
}

namespace {

using CoordKey = std::tuple<std::size_t, std::size_t, int, int, std::size_t>;

template <typename Fn>
void for_each_coordinate(const MatrixOp& m, std::size_t beta_shift, Fn&& fn) {
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      for (const auto& t : m(r, c).terms())
        for (std::size_t p = 0; p < t.coeff.coeffs().size(); ++p)
          if (!t.coeff.coeffs()[p].is_zero()) fn(CoordKey{r, c, t.xpow, t.dpow, p + beta_shift}, t.coeff.coeffs()[p]);
}

std::optional<std::vector<BetaPoly>> solve_with_shifts(const MatrixOp& target,
                                                       std::span<const MatrixOp* const> basis,
                                                       std::size_t max_shift) {
  const std::size_t cols = basis.size() * (max_shift + 1);
  std::map<CoordKey, std::size_t> row_of;
  auto touch = [&](const CoordKey& k, const GaussianRational&) { row_of.emplace(k, 0); };
  for_each_coordinate(target, 0, touch);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t s = 0; s <= max_shift; ++s) for_each_coordinate(*basis[i], s, touch);
  std::size_t next = 0;
  for (auto& [k, idx] : row_of) idx = next++;

  GMatrix a(row_of.size(), cols);
  std::vector<GaussianRational> rhs(row_of.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t s = 0; s <= max_shift; ++s)
      for_each_coordinate(*basis[i], s, [&](const CoordKey& k, const GaussianRational& v) {
        a(row_of.at(k), i * (max_shift + 1) + s) = v;
      });
  for_each_coordinate(target, 0, [&](const CoordKey& k, const GaussianRational& v) { rhs[row_of.at(k)] = v; });

  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  std::vector<BetaPoly> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<GaussianRational> c(x->begin() + static_cast<std::ptrdiff_t>(i * (max_shift + 1)),
                                    x->begin() + static_cast<std::ptrdiff_t>((i + 1) * (max_shift + 1)));
    out.emplace_back(std::move(c));
  }
  return out;
}

bool recomposes(const MatrixOp& target, std::span<const MatrixOp* const> basis, const std::vector<BetaPoly>& c) {
  MatrixOp acc(target.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!c[i].is_zero()) acc += c[i] * *basis[i];
  return acc == target;
}

// Single-element basis: read the ratio off one coordinate, then confirm.
std::optional<BetaPoly> single_ratio(const MatrixOp& target, const MatrixOp& b) {
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) {
      const DiffOp& e = b(r, c);
      if (e.is_zero()) continue;
      const WeylTerm& t = e.terms().front();
      const auto& coeffs = t.coeff.coeffs();
      std::size_t p = 0;
      while (coeffs[p].is_zero()) ++p;
      GaussianRational tv;
      for (const auto& tt : target(r, c).terms())
        if (tt.xpow == t.xpow && tt.dpow == t.dpow) tv = tt.coeff.coeff(p);
      BetaPoly ratio(tv / coeffs[p]);
      if (ratio * b == target) return ratio;
      return std::nullopt;
    }
  return std::nullopt;
}

}  // namespace

std::vector<BetaPoly> decompose(const MatrixOp& target, std::span<const MatrixOp* const> basis) {
  for (const MatrixOp* b : basis)
    if (b->dim() != target.dim()) throw std::invalid_argument("decompose: dimension mismatch");
  if (target.is_zero()) return std::vector<BetaPoly>(basis.size());
  if (basis.empty()) throw NotInSpan("decompose: nonzero operator against an empty basis");
  if (basis.size() == 1 && !basis[0]->is_zero()) {
    if (auto r = single_ratio(target, *basis[0])) return {*r};
  }
  if (auto c = solve_with_shifts(target, basis, 0); c && recomposes(target, basis, *c)) return *c;
  const int tdeg = target.beta_degree();
  if (tdeg > 0) {
    if (auto c = solve_with_shifts(target, basis, static_cast<std::size_t>(tdeg)); c && recomposes(target, basis, *c))
      return *c;
  }
  throw NotInSpan("decompose: operator is not in the span of the given basis");
}

std::vector<BetaPoly> decompose(const MatrixOp& target, std::span<const MatrixOp> basis) {
  std::vector<const MatrixOp*> ptrs;
  ptrs.reserve(basis.size());
  for (const auto& b : basis) ptrs.push_back(&b);
  return decompose(target, std::span<const MatrixOp* const>(ptrs));
}

}  // namespace gradedsusy
