#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gradedsusy/const_matrix.hpp"
#include "gradedsusy/degree.hpp"
#include "gradedsusy/matrix_op.hpp"

namespace gradedsusy {

// A generator of the input superalgebra. scale_exp records that the stored
// operator is 2^(scale_exp/2) times the conventional one.
struct NamedOp {
  std::string name;
  MatrixOp op;
  int scale_exp = 0;
};

struct SuperRealization {
  std::vector<NamedOp> even;
  std::vector<NamedOp> odd;
  std::optional<ConstMatrix> gamma;

  std::size_t dim() const;
  const NamedOp* find(std::string_view name) const;
};

// Homogeneous basis element of a graded model. The name is family + "_" + label.
struct Generator {
  std::string name;
  std::string family;
  std::string label;
  DegreeVector degree;
  MatrixOp op;
  int scale_exp = 0;
};

struct BracketEntry {
  std::size_t k = 0;
  BetaPoly coeff;

  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

// cell(i, j) lists the nonzero coefficients of the graded bracket of basis i and j.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::size_t size) : size_(size), cells_(size * size) {}

  std::size_t size() const { return size_; }
  std::vector<BracketEntry>& cell(std::size_t i, std::size_t j) { return cells_[i * size_ + j]; }
  const std::vector<BracketEntry>& cell(std::size_t i, std::size_t j) const { return cells_[i * size_ + j]; }

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::vector<BracketEntry>> cells_;
};

struct GradedModel {
  std::string kind;
  int n = 0;
  std::size_t dim = 0;
  std::vector<Generator> basis;
  std::map<std::string, std::string> metadata;
  // Input superalgebra, kept so the gamma condition can be rechecked.
  std::optional<SuperRealization> realization;
  std::optional<BracketTable> table;

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;
  // Basis indices whose degree equals d, in basis order.
  std::vector<std::size_t> slice(const DegreeVector& d) const;
};

// Commutator when a.b = 0, anticommutator when a.b = 1.
BracketKind bracket_kind(const DegreeVector& a, const DegreeVector& b);
MatrixOp graded_bracket(const Generator& x, const Generator& y);

// Power of two relating an internal bracket coefficient to the conventional
// one: conventional = internal * 2^((e_k - e_i - e_j) / 2). The exponent is
// always even for the models built here; odd exponents throw.
Rational scale_factor(int e_target, int e_left, int e_right);

}  // namespace gradedsusy
