#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gradedsusy {

// Element (a_1, ..., a_n) of Z_2^n. Sum, inner product and parity are mod 2.
class DegreeVector {
 public:
  static constexpr int kMaxRank = 16;

  DegreeVector() = default;
  // bits[k] is a_{k+1}.
  explicit DegreeVector(const std::vector<int>& bits);
  // Zero vector of rank n.
  static DegreeVector zero(int n);
  // "101" -> (1,0,1).
  static DegreeVector parse(std::string_view text);

  int rank() const { return n_; }
  // a_{k+1} for 0-based k.
  int operator[](int k) const { return static_cast<int>((mask_ >> (n_ - 1 - k)) & 1U); }
  int parity() const;
  int weight() const;  // number of nonzero entries
  int dot(const DegreeVector& o) const;
  DegreeVector operator+(const DegreeVector& o) const;

  // Lexicographic in (a_1, ..., a_n); the packed mask orders the same way.
  std::uint32_t mask() const { return mask_; }
  std::string str() const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  friend std::strong_ordering operator<=>(const DegreeVector& a, const DegreeVector& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

  // All 2^n vectors in lexicographic order.
  static std::vector<DegreeVector> all(int n);

 private:
  DegreeVector(int n, std::uint32_t mask) : n_(n), mask_(mask) {}
  int n_ = 0;
  std::uint32_t mask_ = 0;  // bit (n-1-k) holds a_{k+1}
};

}  // namespace gradedsusy
