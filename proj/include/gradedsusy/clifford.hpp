#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gradedsusy/const_matrix.hpp"

namespace gradedsusy {

// Standard Pauli matrix sigma_k, k in {1,2,3}.
ConstMatrix pauli(int k);

// Generator gamma_j (1 <= j <= 2m) of the 2^m-dimensional Hermitian irrep of Cl(2m):
//   gamma_1     = s1^(x)m
//   gamma_j     = s1^(x)(m-j+1) (x) s3 (x) I2^(x)(j-2),   2 <= j <= m
//   gamma_{j+m} = s1^(x)(m-j)   (x) s2 (x) I2^(x)(j-1),   1 <= j <= m
ConstMatrix build_gamma(int m, int j);

// Left-to-right product gamma_{i1} gamma_{i2} ...; the empty product is the identity.
ConstMatrix gamma_product(int m, std::span<const int> indices);

struct CliffordViolation {
  int j = 0;
  int k = 0;
  std::string relation;  // "anticommutator" or "hermiticity"
};

struct CliffordReport {
  int m = 0;
  std::size_t dim = 0;
  std::size_t pairs_checked = 0;  // unordered pairs j <= k
  std::size_t hermitian_checked = 0;
  std::vector<CliffordViolation> violations;

  bool passed() const { return violations.empty(); }
};

// Checks {gamma_j, gamma_k} = 2 delta_jk I and gamma_j^dagger = gamma_j for all j, k.
CliffordReport verify_clifford(int m);

}  // namespace gradedsusy
