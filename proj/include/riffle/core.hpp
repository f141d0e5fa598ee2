#pragma once

// Exact arithmetic substrate: big integers, rationals, dense polynomials in q
// (distribution-counting generating functions) and dense polynomials in L with
// rational coefficients (closed-form building blocks).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace riffle {

using BigInt = mpz_class;
using Rat = mpq_class;

/// A size or domain guard refused the request (CLI exit code 2).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact fit could not be produced or failed out-of-sample validation.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds num/den in lowest terms with a positive denominator.
Rat make_rat(const BigInt& num, const BigInt& den);

/// Binomial coefficient; 0 when k < 0 or k > n. Throws for n < 0.
BigInt binom(long n, long k);

BigInt pow2(unsigned long e);
BigInt ipow(const BigInt& base, unsigned long e);

std::string to_string(const BigInt& v);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& v);

/// Dense polynomial in q with big-integer coefficients. Index i holds the
/// coefficient of q^i. The zero polynomial stores no coefficients; any other
/// value has a nonzero highest stored coefficient.
class GFPoly {
 public:
  GFPoly() = default;
  explicit GFPoly(std::vector<BigInt> coeffs);
  GFPoly(std::initializer_list<long> coeffs);

  static GFPoly monomial(const BigInt& c, std::size_t power);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of q^i, zero beyond the degree.
  BigInt coeff(std::size_t i) const;

  GFPoly& operator+=(const GFPoly& o);
  GFPoly& operator-=(const GFPoly& o);
  friend GFPoly operator+(GFPoly a, const GFPoly& b) { return a += b; }
  friend GFPoly operator-(GFPoly a, const GFPoly& b) { return a -= b; }
  friend GFPoly operator*(const GFPoly& a, const GFPoly& b);
  friend bool operator==(const GFPoly& a, const GFPoly& b) = default;

  /// Human-readable form, e.g. "4 + 4q + 3q^2 + 5q^4".
  std::string to_string(char var = 'q') const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

GFPoly poly_mul(const GFPoly& a, const GFPoly& b);

/// D t(q) = q t'(q), applied r times.
GFPoly d_operator(const GFPoly& p, unsigned r);

/// p(1).
BigInt eval_at_one(const GFPoly& p);

/// D^r p evaluated at q = 1, i.e. sum_i i^r a_i, without materialising D^r p.
BigInt d_eval_at_one(const GFPoly& p, unsigned r);

/// Dense polynomial in one variable (L or y) with rational coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<Rat> coeffs);

  static RatPoly constant(const Rat& c) { return RatPoly({c}); }
  /// The identity polynomial L.
  static RatPoly variable() { return RatPoly({Rat(0), Rat(1)}); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t i) const;
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Rat eval(const Rat& x) const;
  /// p(x + shift).
  RatPoly shifted(const Rat& shift) const;
  /// Exact division by (x - root); throws unless root is a zero of p.
  RatPoly divide_by_root(const Rat& root) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rat& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(RatPoly a) { return a *= Rat(-1); }
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  /// "4L^2 + 9L + 3", "-9/2 L - 13/4". With compact=true the separators
  /// carry no spaces: "4L+1".
  std::string to_string(char var = 'L', bool compact = false) const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

/// Problem parameters: deck size n and sequence count C (C = 2^k after k
/// riffle shuffles). Derived: h = ceil(n/2), and the unique decomposition
/// n = 4L + alpha with alpha in {-1, 0, 1, 2}.
class ShuffleSpec {
 public:
  static ShuffleSpec from_shuffles(long n, unsigned k);
  static ShuffleSpec from_sequences(long n, long sequences);

  long n() const { return n_; }
  long sequences() const { return c_; }
  long half() const { return (n_ + 1) / 2; }
  long big_l() const { return (n_ + 1) / 4; }
  long alpha() const { return n_ - 4 * big_l(); }

 private:
  ShuffleSpec(long n, long c) : n_(n), c_(c) {}
  long n_;
  long c_;
};

}  // namespace riffle
