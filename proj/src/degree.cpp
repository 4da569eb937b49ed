#include "gradedsusy/degree.hpp"

#include <bit>
#include <stdexcept>

namespace gradedsusy {

DegreeVector::DegreeVector(const std::vector<int>& bits) : n_(static_cast<int>(bits.size())) {
  if (n_ > kMaxRank) throw std::invalid_argument("DegreeVector: rank too large");
  for (int k = 0; k < n_; ++k) {
    if (bits[k] != 0 && bits[k] != 1) throw std::invalid_argument("DegreeVector: entries must be 0 or 1");
    if (bits[k]) mask_ |= 1U << (n_ - 1 - k);
  }
}

DegreeVector DegreeVector::zero(int n) {
  if (n < 0 || n > kMaxRank) throw std::invalid_argument("DegreeVector: bad rank");
  return DegreeVector(n, 0);
}

DegreeVector DegreeVector::parse(std::string_view text) {
  std::vector<int> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      bits.push_back(ch - '0');
    } else if (ch != ',' && ch != ' ' && ch != '(' && ch != ')') {
      throw std::invalid_argument("DegreeVector::parse: unexpected character");
    }
  }
  return DegreeVector(bits);
}

int DegreeVector::parity() const { return std::popcount(mask_) & 1; }
int DegreeVector::weight() const { return std::popcount(mask_); }

int DegreeVector::dot(const DegreeVector& o) const {
  if (o.n_ != n_) throw std::invalid_argument("DegreeVector: rank mismatch");
  return std::popcount(mask_ & o.mask_) & 1;
}

DegreeVector DegreeVector::operator+(const DegreeVector& o) const {
  if (o.n_ != n_) throw std::invalid_argument("DegreeVector: rank mismatch");
  return DegreeVector(n_, mask_ ^ o.mask_);
}

std::string DegreeVector::str() const {
  std::string s;
  for (int k = 0; k < n_; ++k) s.push_back(static_cast<char>('0' + (*this)[k]));
  return s;
}

std::vector<DegreeVector> DegreeVector::all(int n) {
  if (n < 0 || n > kMaxRank) throw std::invalid_argument("DegreeVector: bad rank");
  std::vector<DegreeVector> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) out.push_back(DegreeVector(n, m));
  return out;
}

}  // namespace gradedsusy
