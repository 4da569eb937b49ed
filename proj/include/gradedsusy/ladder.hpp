#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gradedsusy/graded_model.hpp"

namespace gradedsusy {

// a = S + iQ and a^dagger = S - iQ for one odd label. Stored internally with
// scale exponent 1 (sqrt 2 times the conventional operators).
struct LadderOp {
  std::string label;
  DegreeVector degree;
  MatrixOp ann;
  MatrixOp cre;
};

struct LadderSet {
  std::size_t dim = 0;
  MatrixOp R;       // H_000 + K_000
  MatrixOp Lplus;   // (K_000 - H_000)/2 + i D_000
  MatrixOp Lminus;  // (K_000 - H_000)/2 - i D_000
  std::vector<LadderOp> ops;
  ConstMatrix F;  // I_(dim/2) (x) s3

  const LadderOp& find(std::string_view label) const;
};

// One ladder pair for every label carrying both an S and a Q generator.
LadderSet build_ladder(const GradedModel& m);

struct OscillatorCheck {
  std::string name;
  std::string label;   // ladder label, empty for global checks
  std::string status;  // "pass", "fail" or "computed"
  std::string detail;  // computed value, or the residual when failing
};

struct OscillatorReport {
  std::vector<OscillatorCheck> checks;
  bool passed() const;
};

// All identities in conventional normalization with beta formal:
//   [a,a+] = I - 2 beta F,  {a,a+} = 2R,  F^2 = I,  {F,a} = {F,a+} = 0,
//   R = a+ a + (I - 2 beta F)/2,  [R,a] = -a,  [R,L+-] = +-2 L+-,  a^dagger = a+,
// F commuting (anticommuting) with even (odd) model generators. The
// coefficients of [R,a+] against a+ and of {a+,a+}, {a,a} against L+, L-
// are reported as "computed"; a "pass" on those rows means they equal +1, 4, 4.
// printed_pair_coeff is the coefficient printed for {a+,a+} in the source of
// the model (4 or 2) and is echoed in the detail text.
OscillatorReport verify_oscillator(const GradedModel& m, const LadderSet& l, int printed_pair_coeff = 4);

}  // namespace gradedsusy
