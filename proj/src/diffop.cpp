#include "gradedsusy/diffop.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradedsusy {
namespace {

bool key_less(const WeylTerm& a, const WeylTerm& b) {
  return a.xpow != b.xpow ? a.xpow < b.xpow : a.dpow < b.dpow;
}

bool same_key(const WeylTerm& a, const WeylTerm& b) { return a.xpow == b.xpow && a.dpow == b.dpow; }

void canonicalize(std::vector<WeylTerm>& terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms.size();) {
    WeylTerm acc = std::move(terms[k]);
    std::size_t j = k + 1;
    while (j < terms.size() && same_key(acc, terms[j])) {
      acc.coeff += terms[j].coeff;
      ++j;
    }
    if (!acc.coeff.is_zero()) terms[out++] = std::move(acc);
    k = j;
  }
  terms.resize(out);
}

int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("DiffOp: exponent overflow");
  return r;
}

}  // namespace

std::vector<WeylTerm> reorder_d_past_x(int dpow, int xpow) {
  std::vector<WeylTerm> out;
  Rational binom(1);
  Rational falling(1);
  for (int j = 0; j <= dpow; ++j) {
    if (j > 0) {
      binom = binom * Rational(dpow - j + 1) / Rational(j);
      falling *= Rational(static_cast<std::int64_t>(xpow) - (j - 1));
    }
    if (falling.is_zero()) break;
    out.push_back({checked_add(xpow, -j), dpow - j, BetaPoly(binom * falling)});
  }
  return out;
}

DiffOp::DiffOp(std::vector<WeylTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.dpow < 0) throw std::invalid_argument("DiffOp: negative derivative order");
  canonicalize(terms_);
}

DiffOp DiffOp::scalar(BetaPoly c) { return monomial(std::move(c), 0, 0); }

DiffOp DiffOp::monomial(BetaPoly c, int xpow, int dpow) {
  if (dpow < 0) throw std::invalid_argument("DiffOp: negative derivative order");
  DiffOp op;
  if (!c.is_zero()) op.terms_.push_back({xpow, dpow, std::move(c)});
  return op;
}

int DiffOp::beta_degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, t.coeff.degree());
  return deg;
}

DiffOp DiffOp::adjoint() const {
  std::vector<WeylTerm> out;
  for (const auto& t : terms_) {
    BetaPoly c = t.coeff.conj();
    if (t.dpow % 2 != 0) c = -c;
    for (auto& r : reorder_d_past_x(t.dpow, t.xpow)) {
      r.coeff = r.coeff * c;
      out.push_back(std::move(r));
    }
  }
  return DiffOp(std::move(out));
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<WeylTerm> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && key_less(terms_[i], o.terms_[j]))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || key_less(o.terms_[j], terms_[i])) {
      merged.push_back(o.terms_[j++]);
    } else {
      WeylTerm t = std::move(terms_[i++]);
      t.coeff += o.terms_[j++].coeff;
      if (!t.coeff.is_zero()) merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

DiffOp& DiffOp::operator*=(const BetaPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  // Q(i)[beta] has no zero divisors, so no term can vanish here.
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<WeylTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size() * 2);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      const BetaPoly c = ta.coeff * tb.coeff;
      if (ta.dpow == 0) {
        out.push_back({checked_add(ta.xpow, tb.xpow), tb.dpow, c});
        continue;
      }
      for (auto& r : reorder_d_past_x(ta.dpow, tb.xpow)) {
        out.push_back({checked_add(ta.xpow, r.xpow), checked_add(r.dpow, tb.dpow), r.coeff * c});
      }
    }
  }
  return DiffOp(std::move(out));
}

DiffOp compose(const DiffOp& a, const DiffOp& b) { return a * b; }

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) out += " + ";
    const auto& t = terms_[k];
    out += t.coeff.str() + " * x^" + std::to_string(t.xpow) + " * d^" + std::to_string(t.dpow);
  }
  return out;
}

}  // namespace gradedsusy
