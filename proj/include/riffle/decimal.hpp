#pragma once

// Fixed-precision decimal arithmetic for the few quantities that cannot stay
// rational (standardized moments, leading-term asymptotics). Thin RAII wrapper
// over an MPFR value; precision is requested in decimal digits.

#include <mpfr.h>

#include <string>

#include "riffle/core.hpp"

namespace riffle {

class Decimal {
 public:
  explicit Decimal(unsigned digits = 50);
  Decimal(const Rat& value, unsigned digits);
  Decimal(const Decimal& o);
  Decimal(Decimal&& o) noexcept;
  Decimal& operator=(const Decimal& o);
  Decimal& operator=(Decimal&& o) noexcept;
  ~Decimal();

  static Decimal pi(unsigned digits);
  static Decimal from_long(long v, unsigned digits);

  unsigned digits() const { return digits_; }

  Decimal& operator+=(const Decimal& o);
  Decimal& operator-=(const Decimal& o);
  Decimal& operator*=(const Decimal& o);
  Decimal& operator/=(const Decimal& o);
  friend Decimal operator+(Decimal a, const Decimal& b) { return a += b; }
  friend Decimal operator-(Decimal a, const Decimal& b) { return a -= b; }
  friend Decimal operator*(Decimal a, const Decimal& b) { return a *= b; }
  friend Decimal operator/(Decimal a, const Decimal& b) { return a /= b; }

  Decimal sqrt() const;
  Decimal abs() const;
  Decimal pow(long e) const;
  /// this^(num/2), used for variance^(r/2).
  Decimal pow_half(long num) const;

  bool is_zero() const;
  int sign() const;
  double to_double() const;
  friend bool operator<(const Decimal& a, const Decimal& b);

  /// Fixed-point rendering with `digits` significant digits.
  std::string to_string() const;

 private:
  void init();
  unsigned digits_;
  mpfr_t v_;
};

}  // namespace riffle
