#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradedsusy/const_matrix.hpp"
#include "gradedsusy/degree.hpp"
#include "gradedsusy/diffop.hpp"

namespace gradedsusy {

// Square matrix of DiffOp entries, optionally labelled with a Z_2^n degree.
// Equality compares entries only; the degree is a filing label.
class MatrixOp {
 public:
  MatrixOp() = default;
  explicit MatrixOp(std::size_t dim) : dim_(dim), e_(dim * dim) {}

  static MatrixOp identity(std::size_t dim);
  static MatrixOp from_const(const ConstMatrix& c);

  std::size_t dim() const { return dim_; }
  DiffOp& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  const DiffOp& operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  const std::optional<DegreeVector>& degree() const { return degree_; }
  void set_degree(std::optional<DegreeVector> d) { degree_ = std::move(d); }
  MatrixOp with_degree(DegreeVector d) const;

  bool is_zero() const;
  std::size_t nonzero_entries() const;
  int beta_degree() const;

  // Conjugate transpose with the formal adjoint applied entrywise.
  MatrixOp adjoint() const;

  MatrixOp operator-() const;
  MatrixOp& operator+=(const MatrixOp& o);
  MatrixOp& operator-=(const MatrixOp& o);
  MatrixOp& operator*=(const BetaPoly& c);
  friend MatrixOp operator+(MatrixOp a, const MatrixOp& b) { return a += b; }
  friend MatrixOp operator-(MatrixOp a, const MatrixOp& b) { return a -= b; }
  friend MatrixOp operator*(const MatrixOp& a, const MatrixOp& b);
  friend MatrixOp operator*(const BetaPoly& c, MatrixOp a) { return a *= c; }
  friend bool operator==(const MatrixOp& a, const MatrixOp& b) { return a.dim_ == b.dim_ && a.e_ == b.e_; }

  // One line per nonzero entry: "[r,c] <diffop>".
  std::string str() const;

 private:
  std::size_t dim_ = 0;
  std::vector<DiffOp> e_;
  std::optional<DegreeVector> degree_;
};

enum class BracketKind { kCommutator, kAnticommutator };

// a b - b a or a b + b a.
MatrixOp bracket(const MatrixOp& a, const MatrixOp& b, BracketKind kind);

// Kronecker product with the constant factor on the coarse index.
MatrixOp tensor(const ConstMatrix& c, const MatrixOp& a);

struct NotInSpan : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact coefficients c_i with target = sum_i c_i basis_i. The solve runs over
// Q(i); if that fails, coefficients polynomial in beta (up to the target's
// beta degree) are tried. Throws NotInSpan when no combination matches.
std::vector<BetaPoly> decompose(const MatrixOp& target, std::span<const MatrixOp* const> basis);
std::vector<BetaPoly> decompose(const MatrixOp& target, std::span<const MatrixOp> basis);

}  // namespace gradedsusy
