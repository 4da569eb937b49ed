#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gradedsusy/builders.hpp"
#include "gradedsusy/graded_model.hpp"

namespace gradedsusy {

// osp(1|2) superconformal mechanics on C^2 with formal coupling beta, stored
// with Q and S multiplied by sqrt 2 so every entry stays in Q(i)[beta]:
//   Q = s1 p - s2 beta/x,  S = x s1,  p = -i d,
//   H = -d^2/2 + (beta^2 + beta s3) / (2 x^2),  D = (i/2) x d + i/4,  K = x^2 / 2,
// grading involution s3. Q and S carry scale exponent 1.
struct Osp12Realization {
  MatrixOp Q, S, H, D, K;
  ConstMatrix gamma;

  // Even generators H, D, K and odd generators Q, S in that order.
  SuperRealization as_super() const;
};

Osp12Realization build_osp12();

// [left, right] = coeff * target (anticommutator for two odd generators), in
// conventional normalization.
struct Osp12Relation {
  std::string left;
  std::string right;
  GaussianRational coeff;
  std::string target;
};

// The ten nonvanishing relations.
const std::vector<Osp12Relation>& osp12_relations();

struct RelationCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
};

struct Osp12Report {
  std::vector<RelationCheck> checks;
  bool passed() const;
};

// Checks the ten listed relations and that the other five brackets vanish.
Osp12Report verify_osp12(const Osp12Realization& r);

// "cl4" (alias "cl2nm2"): Cl(2(n-1)) lift; "cl2n": Cl(2n) lift; "cl6b": the
// Greek-index Cl(6) lift (n must be 3).
GradedModel build_model(std::string_view kind, int n = 3, PhaseRule rule = PhaseRule::kPrinted);

}  // namespace gradedsusy
