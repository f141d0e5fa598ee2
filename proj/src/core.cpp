#include "riffle/core.hpp"

#include <algorithm>
#include <sstream>

namespace riffle {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

BigInt binom(long n, long k) {
  if (n < 0) throw std::invalid_argument("binom: negative upper index");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt pow2(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// ---------------------------------------------------------------------------
// GFPoly

GFPoly::GFPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

GFPoly::GFPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

GFPoly GFPoly::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return GFPoly(std::move(v));
}

void GFPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt GFPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

GFPoly& GFPoly::operator+=(const GFPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

GFPoly& GFPoly::operator-=(const GFPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

GFPoly operator*(const GFPoly& a, const GFPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return GFPoly(std::move(out));
}

std::string GFPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

GFPoly poly_mul(const GFPoly& a, const GFPoly& b) { return a * b; }

GFPoly d_operator(const GFPoly& p, unsigned r) {
  std::vector<BigInt> out(p.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= ipow(BigInt(static_cast<unsigned long>(i)), r);
  }
  return GFPoly(std::move(out));
}

BigInt eval_at_one(const GFPoly& p) {
  BigInt s = 0;
  for (const auto& c : p.coeffs()) s += c;
  return s;
}

BigInt d_eval_at_one(const GFPoly& p, unsigned r) {
  BigInt s = 0;
  BigInt w;
  const auto& cs = p.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(i), r);
    mpz_addmul(s.get_mpz_t(), w.get_mpz_t(), cs[i].get_mpz_t());
  }
  return s;
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat RatPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::shifted(const Rat& shift) const {
  // Horner in polynomial arithmetic: p(x + s) = (...(c_d (x+s) + c_{d-1})(x+s) ...).
  RatPoly acc;
  const RatPoly lin({shift, Rat(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin + RatPoly::constant(*it);
  }
  return acc;
}

RatPoly RatPoly::divide_by_root(const Rat& root) const {
  if (coeffs_.empty()) return {};
  std::vector<Rat> q(coeffs_.size() - 1);
  Rat carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Rat v = coeffs_[i] + carry;
    if (i == 0) {
      if (v != 0) throw std::domain_error("divide_by_root: not a root");
      break;
    }
    q[i - 1] = v;
    carry = v * root;
  }
  return RatPoly(std::move(q));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string(char var, bool compact) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else if (compact) {
      os << (c < 0 ? "-" : "+");
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << riffle::to_string(mag);
      continue;
    }
    if (mag != 1) {
      os << riffle::to_string(mag);
      if (mag.get_den() != 1) os << ' ';
    }
    os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ShuffleSpec

ShuffleSpec ShuffleSpec::from_shuffles(long n, unsigned k) {
  if (k >= 62) throw GuardError("shuffle count too large");
  return from_sequences(n, 1L << k);
}

ShuffleSpec ShuffleSpec::from_sequences(long n, long sequences) {
  if (n < 1) throw std::invalid_argument("deck size must be at least 1");
  if (sequences < 1) throw std::invalid_argument("sequence count must be at least 1");
  return ShuffleSpec(n, sequences);
}

}  // namespace riffle
