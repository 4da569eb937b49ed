#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gradedsusy/graded_model.hpp"

namespace gradedsusy {

// Phase exponent choice for the Cl(2(n-1)) lift.
//  kPrinted:   f(a) = sum_{k=1}^{n-2} a_k prod_{l=k+1}^{n-1} a_l + |a| sum_{l=1}^{n-1} a_l
//  kHermitian: f(a) = C(w, 2) + |a| w with w = sum_{l=1}^{n-1} a_l
// Both agree for n <= 3. For n >= 4 only kHermitian gives self-adjoint generators.
enum class PhaseRule { kPrinted, kHermitian };

// f(a) mod 2.
int f_exponent(const DegreeVector& a, PhaseRule rule = PhaseRule::kPrinted);

struct GammaViolation {
  std::string generator;
  std::string relation;  // "[X0,G]=0", "{X1,G}=0" or "G^2=I"
};

struct GammaReport {
  std::size_t checked = 0;
  std::vector<GammaViolation> violations;
  bool passed() const { return violations.empty(); }
};

struct GammaMissing : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GammaConditionFailed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

GammaReport verify_gamma_condition(const SuperRealization& r);

// X_a = i^f(a) gamma_1^a_1 ... gamma_{n-1}^a_{n-1} (x) X_|a| G^(a_1+...+a_{n-1})
// over the 2^(n-1)-dimensional Cl(2(n-1)) irrep. Degrees enumerate Z_2^n
// lexicographically; every even (odd) input generator is lifted to every
// even (odd) degree.
GradedModel build_cl2nm2(const SuperRealization& r, int n, PhaseRule rule = PhaseRule::kPrinted);

// X_a = i^(C(w,2) mod 2) prod_{j: a_j = 1} gamma_j (x) X_|a| over the Cl(2n) irrep,
// w the weight of a. No grading involution is needed.
GradedModel build_cl2n(const SuperRealization& r, int n);

// Z_2^3 lift over Cl(6) with Greek labels 0..3, gamma_0 = I_8 and the odd
// degrees a_0 = 111, a_1 = 100, a_2 = 010, a_3 = 001.
GradedModel build_cl6b(const SuperRealization& r);

// Degree vector a_mu of the Greek index mu.
DegreeVector greek_degree(int mu);

}  // namespace gradedsusy
