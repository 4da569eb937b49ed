#include "gradedsusy/greek_indices.hpp"

#include <stdexcept>
#include <vector>

#include "gradedsusy/builders.hpp"

namespace gradedsusy {
namespace {

GaussianRational word_phase(std::span<const int> idx) {
  if (idx.size() <= 1) return GaussianRational(1);
  if (idx.size() == 2) return GaussianRational::i_pow(1 - greek_degree(idx[0]).dot(greek_degree(idx[1])));
  return GaussianRational::i();
}

}  // namespace

int reduce_gamma_word(std::span<const int> indices, std::vector<int>& sorted) {
  std::vector<int> w;
  for (int mu : indices) {
    if (mu < 0 || mu > 3) throw std::invalid_argument("normalize_indices: index must be 0..3");
    if (mu != 0) w.push_back(mu);
  }
  int sign = 1;
  // Bubble sort; each swap of distinct anticommuting factors flips the sign.
  for (std::size_t pass = 0; pass < w.size(); ++pass)
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] > w[k + 1]) {
        std::swap(w[k], w[k + 1]);
        sign = -sign;
      }
  sorted.clear();
  for (int mu : w) {
    if (!sorted.empty() && sorted.back() == mu) {
      sorted.pop_back();
    } else {
      sorted.push_back(mu);
    }
  }
  return sign;
}

NormalizedIndex normalize_indices(std::span<const int> indices) {
  if (indices.empty()) throw std::invalid_argument("normalize_indices: empty index list");
  std::vector<int> s;
  const int sign = reduce_gamma_word(indices, s);
  const bool odd = indices.size() % 2 == 1;

  // The canonical element with the same parity and the same gamma content.
  std::vector<int> canon;
  if (odd) {
    if (s.size() == 0) canon = {0};
    else if (s.size() == 1) canon = s;
    else if (s.size() == 2) canon = {0, s[0], s[1]};
    else canon = {1, 2, 3};
  } else {
    if (s.size() == 0) canon = {};
    else if (s.size() == 1) canon = {0, s[0]};
    else if (s.size() == 2) canon = s;
    else canon = {0, 1, 2, 3};
  }
  std::vector<int> cs;
  const int csign = reduce_gamma_word(canon, cs);
  GaussianRational cphase = canon.empty() ? GaussianRational(1) : word_phase(canon);

  std::string key;
  if (canon.empty()) {
    key = "000";
  } else {
    for (int mu : canon) key.push_back(static_cast<char>('0' + mu));
  }
  GaussianRational factor = word_phase(indices) * GaussianRational(sign * csign) / cphase;
  return {key, factor};
}

}  // namespace gradedsusy
