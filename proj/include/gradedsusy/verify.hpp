#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradedsusy/graded_model.hpp"

namespace gradedsusy {

struct ClosureFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string residual;  // the bracket that failed to decompose
};

struct ClosureReport {
  std::size_t pairs_checked = 0;
  BracketTable table;
  std::vector<ClosureFailure> failures;
  // Pairs whose coefficients break graded antisymmetry.
  std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_failures;

  bool passed() const { return failures.empty() && antisymmetry_failures.empty(); }
};

struct ClosureViolation : std::runtime_error {
  ClosureViolation(std::size_t i, std::size_t j, const std::string& what)
      : std::runtime_error(what), i(i), j(j) {}
  std::size_t i;
  std::size_t j;
};

// Every ordered pair (i, j): graded bracket decomposed against the basis slice
// of degree d_i + d_j. Failures are collected, not thrown.
ClosureReport verify_closure(const GradedModel& m, unsigned threads = 1);

// Runs verify_closure if needed and stores the table on the model. Throws
// ClosureViolation with the first failing pair.
const BracketTable& ensure_table(GradedModel& m, unsigned threads = 1);

struct JacobiFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::string residual;
};

struct JacobiReport {
  std::size_t triples_checked = 0;
  bool exhaustive = false;  // all ordered triples rather than one per multiset
  std::vector<JacobiFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct JacobiOptions {
  // false: one ordering per multiset {i <= j <= k}. Cyclic invariance and
  // graded antisymmetry make every other ordering a signed copy.
  bool exhaustive = false;
  unsigned threads = 1;
};

// Operator-level graded Jacobi sum
//   (-1)^(a.c) [[X,[[Y,Z]]]] + (-1)^(b.a) [[Y,[[Z,X]]]] + (-1)^(c.b) [[Z,[[X,Y]]]] = 0
// with exact normal-ordered entries.
JacobiReport verify_jacobi(const GradedModel& m, const JacobiOptions& opt = {});

// Same sum evaluated through the bracket table alone (bilinearity). Exact and
// much cheaper; a zero here implies the operator identity.
JacobiReport verify_jacobi_table(const GradedModel& m, const BracketTable& t, bool exhaustive = false);

struct HermiticityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

HermiticityReport verify_hermiticity(const GradedModel& m);

// Bracket coefficient in conventional normalization (undoing the internal
// sqrt 2 rescaling).
BetaPoly conventional_coefficient(const GradedModel& m, std::size_t i, std::size_t j, const BracketEntry& e);

// Structure constants of the Cl(6) model in Greek-index form. Keys are four
// digits: the index of Y followed by the index of Z.
//   [X_0123, Y_mu]     = i sum f_{mu nu rho sigma} Z_{nu rho sigma}
//   [X_0123, Y_mu nu]  = i sum g_{mu nu rho sigma} Z_{rho sigma}
//   [X_0123, Y_mu nu rho] = i sum h_{mu nu rho sigma} Z_sigma
// where [X0, Y] = i Z in the input superalgebra. Only nonzero entries are kept.
struct GreekConstants {
  std::map<std::string, GaussianRational> f;
  std::map<std::string, GaussianRational> g;
  std::map<std::string, GaussianRational> h;
};

GreekConstants extract_greek_constants(const GradedModel& m, const BracketTable& t);

}  // namespace gradedsusy
