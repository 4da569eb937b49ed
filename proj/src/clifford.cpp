#include "gradedsusy/clifford.hpp"

#include <stdexcept>

namespace gradedsusy {
namespace {

ConstMatrix kron_power(const ConstMatrix& a, int times) {
  ConstMatrix out = ConstMatrix::identity(1);
  for (int t = 0; t < times; ++t) out = kron(out, a);
  return out;
}

}  // namespace

ConstMatrix pauli(int k) {
  const GaussianRational o(0), one(1), mone(-1), i = GaussianRational::i();
  switch (k) {
    case 1: return ConstMatrix(2, {o, one, one, o});
    case 2: return ConstMatrix(2, {o, -i, i, o});
    case 3: return ConstMatrix(2, {one, o, o, mone});
    default: throw std::out_of_range("pauli: index must be 1, 2 or 3");
  }
}

ConstMatrix build_gamma(int m, int j) {
  if (m < 1) throw std::out_of_range("build_gamma: m must be positive");
  if (j < 1 || j > 2 * m) throw std::out_of_range("build_gamma: j out of range 1..2m");
  const ConstMatrix s1 = pauli(1), s2 = pauli(2), s3 = pauli(3), id = ConstMatrix::identity(2);
  if (j == 1) return kron_power(s1, m);
  if (j <= m) return kron(kron(kron_power(s1, m - j + 1), s3), kron_power(id, j - 2));
  const int jj = j - m;
  return kron(kron(kron_power(s1, m - jj), s2), kron_power(id, jj - 1));
}

ConstMatrix gamma_product(int m, std::span<const int> indices) {
  ConstMatrix out = ConstMatrix::identity(std::size_t{1} << m);
  for (int j : indices) out = out * build_gamma(m, j);
  return out;
}

CliffordReport verify_clifford(int m) {
  if (m < 1) throw std::out_of_range("verify_clifford: m must be positive");
  CliffordReport rep;
  rep.m = m;
  rep.dim = std::size_t{1} << m;
  std::vector<ConstMatrix> g;
  for (int j = 1; j <= 2 * m; ++j) g.push_back(build_gamma(m, j));
  const ConstMatrix two_id = GaussianRational(2) * ConstMatrix::identity(rep.dim);
  const ConstMatrix zero(rep.dim);
  for (int j = 0; j < 2 * m; ++j) {
    ++rep.hermitian_checked;
    if (!(g[j].adjoint() == g[j])) rep.violations.push_back({j + 1, j + 1, "hermiticity"});
    for (int k = j; k < 2 * m; ++k) {
      ++rep.pairs_checked;
      const ConstMatrix anti = g[j] * g[k] + g[k] * g[j];
      if (!(anti == (j == k ? two_id : zero))) rep.violations.push_back({j + 1, k + 1, "anticommutator"});
    }
  }
  return rep;
}

}  // namespace gradedsusy
