#include "amlt/real.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace amlt {

namespace {

thread_local long g_default_bits = kDefaultPrecisionBits;

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

bool parse_decimal(const std::string& s, mpfr_ptr out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const int rc = mpfr_strtofr(out, s.c_str(), &end, 10, kRnd);
  (void)rc;
  return end != nullptr && *end == '\0' && end != s.c_str();
}

std::string trim(std::string_view v) {
  std::size_t b = 0, e = v.size();
  while (b < e && (v[b] == ' ' || v[b] == '\t')) ++b;
  while (e > b && (v[e - 1] == ' ' || v[e - 1] == '\t')) --e;
  return std::string(v.substr(b, e - b));
}

} // namespace

Real::Real() {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(g_default_bits));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs by swapping with a freshly initialised minimal value.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::parse(std::string_view text) {
  const std::string t = trim(text);
  Real out;
  const auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!parse_decimal(t, out.v_)) throw std::invalid_argument("not a number: '" + t + "'");
    return out;
  }
  PrecisionScope guard(g_default_bits + kGuardBits);
  Real num, den;
  if (!parse_decimal(trim(t.substr(0, slash)), num.v_) || !parse_decimal(trim(t.substr(slash + 1)), den.v_))
    throw std::invalid_argument("not a ratio: '" + t + "'");
  if (den.is_zero()) throw std::invalid_argument("zero denominator: '" + t + "'");
  mpfr_div(out.v_, num.v_, den.v_, kRnd);
  return out;
}

void Real::set_default_precision(long bits) {
  if (bits < 16 || bits > (1L << 20)) throw std::invalid_argument("precision out of range");
  g_default_bits = bits;
}

long Real::default_precision() { return g_default_bits; }

Real Real::infinity() {
  Real r;
  mpfr_set_inf(r.v_, 1);
  return r;
}

Real Real::nan() {
  Real r;
  mpfr_set_nan(r.v_);
  return r;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

Real Real::epsilon() {
  Real r(1);
  mpfr_mul_2si(r.v_, r.v_, 1 - g_default_bits, kRnd);
  return r;
}

Real Real::unit_roundoff(long bits) {
  Real r(1);
  mpfr_mul_2si(r.v_, r.v_, -bits, kRnd);
  return r;
}

void Real::round_to(long bits) { mpfr_prec_round(v_, static_cast<mpfr_prec_t>(bits), kRnd); }

std::string Real::str(int digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(v_, v_, rhs.v_, kRnd);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(v_, v_, rhs.v_, kRnd);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(v_, v_, rhs.v_, kRnd);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  mpfr_div(v_, v_, rhs.v_, kRnd);
  return *this;
}

Real operator-(const Real& a) {
  Real r;
  mpfr_neg(r.v_, a.v_, kRnd);
  return r;
}
Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& r) {
  const auto p = os.precision();
  return os << r.str(p > 0 ? static_cast<int>(p) : 0);
}

Real abs(const Real& x) {
  Real r;
  mpfr_abs(r.get(), x.get(), kRnd);
  return r;
}
Real sqrt(const Real& x) {
  Real r;
  mpfr_sqrt(r.get(), x.get(), kRnd);
  return r;
}
Real exp(const Real& x) {
  Real r;
  mpfr_exp(r.get(), x.get(), kRnd);
  return r;
}
Real log(const Real& x) {
  Real r;
  mpfr_log(r.get(), x.get(), kRnd);
  return r;
}
Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}
Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}
Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.get(), x.get());
  return r;
}
Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}
Real tgamma(const Real& x) {
  Real r;
  mpfr_gamma(r.get(), x.get(), kRnd);
  return r;
}
Real ulp(const Real& x) {
  if (x.is_zero() || !x.is_finite()) return Real(0);
  return ldexp(Real(1), static_cast<long>(mpfr_get_exp(x.get())) - x.precision());
}

Real gamma_upper(const Real& s, const Real& z) {
  Real r;
  mpfr_gamma_inc(r.get(), s.get(), z.get(), kRnd);
  return r;
}

Real gamma_lower(const Real& s, const Real& z) {
  if (z.is_zero()) return Real(0);
  const long bits = Real::default_precision();
  Real out;
  {
    PrecisionScope guard(bits + kGuardBits);
    const Real tiny = Real::unit_roundoff(bits + kGuardBits);
    Real term = Real(1) / s;
    Real sum = term;
    for (long k = 1; k < 100000; ++k) {
      term *= z / (s + Real(k));
      sum += term;
      // Terms decrease geometrically once k > z; stop when negligible.
      if (Real(k) > z && term <= sum * tiny) break;
    }
    out = sum * pow(z, s) * exp(-z);
  }
  out.round_to(bits);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

PrecisionScope::PrecisionScope(long bits) : saved_(g_default_bits) { g_default_bits = bits; }
PrecisionScope::~PrecisionScope() { g_default_bits = saved_; }

} // namespace amlt
