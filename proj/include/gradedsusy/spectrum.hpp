#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradedsusy/coupling.hpp"
#include "gradedsusy/ladder.hpp"
#include "gradedsusy/wave_vector.hpp"

namespace gradedsusy {

struct NoNormalizableSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BranchSolutions {
  int sign = 1;  // exponents sign*beta + k
  std::vector<WaveVector> states;
  bool normalizable = false;  // every exponent q satisfies 2q > -1
};

struct GroundStates {
  std::vector<WaveVector> states;  // the kept (normalizable) branch
  char branch = '+';
  std::vector<BranchSolutions> branches;  // both branches, unfiltered
};

// Common kernel of all annihilators on the ansatz x^(+-beta + k) exp(-x^2/2),
// k = 0..extra, per component. Requires beta > 1.
GroundStates ground_states(const LadderSet& l, const Rational& beta, int extra = 2);

struct EigenResult {
  std::optional<GaussianRational> value;
  WaveVector image;  // op applied to psi
};

EigenResult eigen_check(const MatrixOp& op, const Rational& beta, const WaveVector& psi);

struct Level {
  int n = 0;
  Rational energy;
  std::size_t degeneracy = 0;
  std::vector<WaveVector> basis;
  // L+ of this level stays inside level n + 2; unset when n + 2 is beyond the run.
  std::optional<bool> lplus_in_span;
};

struct SpectrumReport {
  Rational beta;
  char branch = '+';
  std::vector<Level> levels;
  Rational rejected_energy;  // formal eigenvalue of the discarded branch
};

// Level n + 1 is the span of every creation operator applied to a basis of
// level n, which equals the span of all length-(n+1) words on the ground space.
SpectrumReport excited_levels(const LadderSet& l, const Rational& beta, int nmax);

// Exact rank over Q(i) by fraction-free elimination.
std::size_t span_rank(const std::vector<WaveVector>& vs);
// A maximal independent subset, in input order.
std::vector<WaveVector> independent_subset(const std::vector<WaveVector>& vs);

// Degree of each Hilbert component, seeded with degree 0 at index 0.
std::vector<DegreeVector> grade_components(const GradedModel& m);

// Degree of a vector supported on components of one degree.
DegreeVector wave_degree(const std::vector<DegreeVector>& comp, const WaveVector& psi);

enum class LadderSide { kAnnihilation, kCreation };

struct Proportionality {
  WaveVector lhs;  // op_c phi_a
  WaveVector rhs;  // op_d phi_b
  std::optional<GaussianRational> ratio;  // lhs = ratio * rhs, when both are nonzero and parallel
};

// Compares op_c phi_a with op_d phi_b for ladder labels c and d. Requires
// deg(phi_a) + deg(c) = deg(phi_b) + deg(d).
Proportionality proportionality_check(const LadderSet& l, const std::vector<DegreeVector>& comp, const Rational& beta,
                                      const std::string& c_label, const WaveVector& phi_a, const std::string& d_label,
                                      const WaveVector& phi_b, LadderSide side);

}  // namespace gradedsusy
