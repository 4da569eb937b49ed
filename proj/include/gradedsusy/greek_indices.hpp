#pragma once

#include <span>
#include <string>
#include <vector>

#include "gradedsusy/gaussian_rational.hpp"

namespace gradedsusy {

// W with k Greek indices (0..3) stands for phase * gamma_{i1} ... gamma_{ik} (x) W_{k mod 2},
// gamma_0 = I, with phase 1 (k = 1), i^(1 - a_mu.a_nu) (k = 2), i (k >= 3).
// The canonical basis keys are "000", "0".."3", "01".."23", "012".."123", "0123".
struct NormalizedIndex {
  std::string key;
  GaussianRational factor;  // W_indices = factor * W_key
};

NormalizedIndex normalize_indices(std::span<const int> indices);

// Reduces gamma_{i1} ... gamma_{ik} to sign * gamma_{s1} ... gamma_{sr}, s1 < ... < sr,
// zeros dropped. Returns the sign; sorted receives s.
int reduce_gamma_word(std::span<const int> indices, std::vector<int>& sorted);

}  // namespace gradedsusy
