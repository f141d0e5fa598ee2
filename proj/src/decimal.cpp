#include "riffle/decimal.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace riffle {

namespace {

// Decimal digits to binary precision, with guard bits.
mpfr_prec_t bits_for(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

}  // namespace

void Decimal::init() { mpfr_init2(v_, bits_for(digits_)); }

Decimal::Decimal(unsigned digits) : digits_(digits == 0 ? 1 : digits) {
  init();
  mpfr_set_ui(v_, 0, MPFR_RNDN);
}

Decimal::Decimal(const Rat& value, unsigned digits) : digits_(digits == 0 ? 1 : digits) {
  init();
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Decimal::Decimal(const Decimal& o) : digits_(o.digits_) {
  init();
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Decimal::Decimal(Decimal&& o) noexcept : digits_(o.digits_) {
  init();
  mpfr_swap(v_, o.v_);
}

Decimal& Decimal::operator=(const Decimal& o) {
  if (this != &o) {
    if (digits_ != o.digits_) {
      digits_ = o.digits_;
      mpfr_set_prec(v_, bits_for(digits_));
    }
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Decimal& Decimal::operator=(Decimal&& o) noexcept {
  std::swap(digits_, o.digits_);
  mpfr_swap(v_, o.v_);
  return *this;
}

Decimal::~Decimal() { mpfr_clear(v_); }

Decimal Decimal::pi(unsigned digits) {
  Decimal d(digits);
  mpfr_const_pi(d.v_, MPFR_RNDN);
  return d;
}

Decimal Decimal::from_long(long v, unsigned digits) {
  Decimal d(digits);
  mpfr_set_si(d.v_, v, MPFR_RNDN);
  return d;
}

Decimal& Decimal::operator+=(const Decimal& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Decimal& Decimal::operator-=(const Decimal& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Decimal& Decimal::operator*=(const Decimal& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Decimal& Decimal::operator/=(const Decimal& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Decimal Decimal::sqrt() const {
  Decimal d(digits_);
  mpfr_sqrt(d.v_, v_, MPFR_RNDN);
  return d;
}

Decimal Decimal::abs() const {
  Decimal d(digits_);
  mpfr_abs(d.v_, v_, MPFR_RNDN);
  return d;
}

Decimal Decimal::pow(long e) const {
  Decimal d(digits_);
  mpfr_pow_si(d.v_, v_, e, MPFR_RNDN);
  return d;
}

Decimal Decimal::pow_half(long num) const {
  Decimal root = sqrt();
  return root.pow(num);
}

bool Decimal::is_zero() const { return mpfr_zero_p(v_) != 0; }
int Decimal::sign() const { return mpfr_sgn(v_); }
double Decimal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

bool operator<(const Decimal& a, const Decimal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

std::string Decimal::to_string() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";
  // Fixed notation with `digits_` significant digits.
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits_, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  bool neg = false;
  if (!mant.empty() && mant[0] == '-') {
    neg = true;
    mant.erase(0, 1);
  }
  std::string out;
  if (exp10 <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
  } else if (static_cast<std::size_t>(exp10) >= mant.size()) {
    out = mant + std::string(static_cast<std::size_t>(exp10) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(exp10)) + "." + mant.substr(static_cast<std::size_t>(exp10));
  }
  return neg ? "-" + out : out;
}

}  // namespace riffle
