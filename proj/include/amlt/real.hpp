#pragma once

// Configurable-precision binary floating point on top of MPFR.
//
// Every new value (including the result of an arithmetic operation) is
// created with the thread's current default precision. Copies keep the
// precision of their source. PrecisionScope raises the default for a
// block, which is how guard digits are added to sensitive summations.

#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <mpfr.h>

namespace amlt {

class Real {
public:
  Real();
  template <std::integral I>
  Real(I v) : Real() {
    if constexpr (std::is_signed_v<I>)
      mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
    else
      mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
  }
  template <std::floating_point F>
  Real(F v) : Real() {
    mpfr_set_d(v_, static_cast<double>(v), MPFR_RNDN);
  }
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal literal, or a ratio "p/q" of two decimal literals.
  /// Throws std::invalid_argument on malformed input.
  static Real parse(std::string_view text);

  static void set_default_precision(long bits);
  static long default_precision();

  static Real infinity();
  static Real nan();
  static Real pi();
  /// 2^(1-p) for the current default precision p.
  static Real epsilon();
  /// Unit roundoff 2^(-p) at the given precision.
  static Real unit_roundoff(long bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Rounds this value in place to `bits` of precision.
  void round_to(long bits);

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }
  /// Decimal scientific form with `digits` significant digits; 0 picks
  /// enough digits to round-trip at this value's precision.
  std::string str(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator-(const Real& a);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

private:
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& r);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real ldexp(const Real& x, long e);
/// Spacing of representable numbers at x in its own precision; 0 for x = 0.
Real ulp(const Real& x);
Real tgamma(const Real& x);
/// Upper incomplete gamma function Gamma(s, z).
Real gamma_upper(const Real& s, const Real& z);
/// Lower incomplete gamma function gamma(s, z) for s > 0, z >= 0, summed
/// from the all-positive series z^s e^-z sum z^k / (s)_{k+1}.
Real gamma_lower(const Real& s, const Real& z);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// Raises the default precision for the lifetime of the scope.
class PrecisionScope {
public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  long saved_;
};

/// Extra bits used for internal summations.
inline constexpr long kGuardBits = 64;

/// Default working precision in bits.
inline constexpr long kDefaultPrecisionBits = 256;

} // namespace amlt
