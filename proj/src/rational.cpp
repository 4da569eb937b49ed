#include "gradedsusy/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace gradedsusy {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

// Representable inline: magnitude strictly below 2^63 (INT64_MIN is excluded so
// that negation never overflows).
bool fits_inline(i128 v) { return v > static_cast<i128>(kMin) && v <= static_cast<i128>(kMax); }

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class lo(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (num == kMin || den == kMin) {
    assign_mpq(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(abs64(num), den);
  num_ = num / g;
  den_ = den / g;
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::check_small_numerator() {
  if (num_ == kMin) assign_mpq(mpq_class(mpz_class(static_cast<long>(kMin))));
}

void Rational::assign_mpq(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  return Rational(q);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  if (big_) return Rational(mpq_class(1 / *big_));
  Rational r;
  if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, rhs.num_, &s) && s != kMin) {
        num_ = s;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const u128 g = gcd128(abs128(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (fits_inline(n) && fits_inline(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign_mpq(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
    return *this;
  }
  assign_mpq(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::int64_t g1 = std::gcd(abs64(num_), rhs.den_);
    const std::int64_t g2 = std::gcd(abs64(rhs.num_), den_);
    std::int64_t n, d;
    if (!__builtin_mul_overflow(num_ / g1, rhs.num_ / g2, &n) &&
        !__builtin_mul_overflow(den_ / g2, rhs.den_ / g1, &d) && n != kMin) {
      num_ = n;
      den_ = d;
      return *this;
    }
  }
  assign_mpq(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.reciprocal(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  const auto h1 = std::hash<std::int64_t>{}(num_);
  const auto h2 = std::hash<std::int64_t>{}(den_);
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::int64_t Rational::floor() const {
  if (big_) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("Rational::floor: out of range");
    return f.get_si();
  }
  std::int64_t q = num_ / den_;
  if ((num_ % den_ != 0) && (num_ < 0)) --q;
  return q;
}

}  // namespace gradedsusy
