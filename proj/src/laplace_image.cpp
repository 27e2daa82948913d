#include "amlt/laplace_image.hpp"

#include <string>

#include "amlt/error.hpp"

namespace amlt {

namespace {

struct RawSum {
  Real sum;      // at guard precision
  Real abs_sum;  // sum of |terms|
  int sign = 0;  // common sign of nonzero terms; 2 when mixed
};

// Must be called inside a guard-precision scope.
RawSum raw_sum(const InvPowerSeries& ips, const Real& x) {
  const std::size_t N = ips.truncation_order();
  RawSum out;
  out.sum = Real(0);
  out.abs_sum = Real(0);
  const Real inv = Real(1) / x;
  Real power = pow(x, -(Real(1) + ips.offset()));

  const std::size_t quarter_start = N - N / 4;
  Real prev_abs(-1);
  std::size_t rising = 0, seen = 0;
  bool monotone_rise = true;

  for (std::size_t n = 0; n <= N; ++n) {
    const Real& c = ips.coeff(n);
    if (!c.is_zero()) {
      const Real term = c * power;
      out.sum += term;
      const Real a = abs(term);
      out.abs_sum += a;
      const int s = term.sign();
      if (out.sign == 0) out.sign = s;
      else if (out.sign != s) out.sign = 2;
      if (N >= 8 && n >= quarter_start) {
        if (seen > 0) {
          if (a > prev_abs) ++rising;
          else monotone_rise = false;
        }
        prev_abs = a;
        ++seen;
      }
    }
    power *= inv;
  }
  if (N >= 8 && seen >= 3 && monotone_rise && rising + 1 == seen)
    throw Error(ErrorKind::DivergentAt, "terms grow over the last quarter at x = " + x.str(12));
  return out;
}

// Bound on sum_{n>N} |c_n| x^(-n-1-offset) from the tail model.
Real tail_bound(const InvPowerSeries& ips, const Real& x) {
  const TailModel& t = ips.tail();
  if (!t.known) return Real::infinity();
  if (t.rho.is_zero() || t.scale.is_zero()) return Real(0);
  const std::size_t N = ips.truncation_order();
  const Real n1(N + 1);
  const Real growth = pow((n1 + Real(1) + t.shift) / (n1 + t.shift), t.degree);
  const Real theta = t.rho / x * growth;
  if (theta >= Real(1)) return Real::infinity();
  const Real first =
      t.scale * pow(t.rho, static_cast<long>(N + 1)) * pow(n1 + t.shift, t.degree) * pow(x, -(n1 + Real(1) + ips.offset()));
  return first / (Real(1) - theta);
}

int tail_sign_for(int sign, const Real& factor) { return factor.sign() == 0 ? 0 : sign * factor.sign(); }

} // namespace

InvPowerSeries::InvPowerSeries(std::vector<Real> coeffs, Real offset)
    : coeffs_(std::move(coeffs)), offset_(std::move(offset)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

InvPowerSeries::InvPowerSeries(std::vector<Real> coeffs, Real offset, TailModel tail, Real coeff_rel_err)
    : coeffs_(std::move(coeffs)), offset_(std::move(offset)), tail_(std::move(tail)), rel_err_(std::move(coeff_rel_err)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

InvPowerSeries InvPowerSeries::times_power(const Real& a) const {
  InvPowerSeries out = *this;
  out.offset_ = offset_ - a;
  return out;
}

InvPowerSeries InvPowerSeries::derivative(std::size_t m) const {
  if (m == 0) return *this;
  InvPowerSeries out = *this;
  const std::size_t N = truncation_order();
  const Real sign = (m % 2 == 0) ? Real(1) : Real(-1);
  for (std::size_t n = 0; n <= N; ++n) {
    if (coeffs_[n].is_zero()) continue;
    // d^m/dx^m x^(-(n+1+offset)) = (-1)^m (n+1+offset)_m x^(-(n+1+offset+m))
    Real factor = sign;
    const Real base = Real(n + 1) + offset_;
    for (std::size_t i = 0; i < m; ++i) factor *= base + Real(i);
    out.coeffs_[n] = coeffs_[n] * factor;
  }
  out.offset_ = offset_ + Real(m);
  if (tail_.known && !tail_.rho.is_zero()) {
    out.tail_.degree = tail_.degree + static_cast<long>(m);
    out.tail_.shift = max(tail_.shift, abs(offset_) + Real(m + 1));
    // For n > N the rising factor is positive once n + 1 + offset > 0.
    const bool positive = Real(N + 2) + offset_ > Real(0);
    out.tail_.sign = positive ? tail_.sign * sign.sign() : 0;
  }
  out.rel_err_ = rel_err_ + Real(m + 1) * Real::unit_roundoff(Real::default_precision());
  return out;
}

InvPowerSeries InvPowerSeries::scaled(const Real& s) const {
  InvPowerSeries out = *this;
  for (auto& c : out.coeffs_) c *= s;
  out.tail_.scale = tail_.scale * abs(s);
  out.tail_.sign = tail_sign_for(tail_.sign, s);
  out.rel_err_ = rel_err_ + Real::unit_roundoff(Real::default_precision());
  return out;
}

InvPowerSeries laplace_coeffs(const AMSeries& s) {
  const std::size_t N = s.truncation_order();
  std::vector<Real> c;
  c.reserve(N + 1);
  Real fact(1);
  for (std::size_t k = 0; k <= N; ++k) {
    if (k > 0) fact *= Real(k);
    c.push_back(s.coeff(k) * fact);
  }
  TailModel tail;
  if (s.type_zero()) {
    tail.known = true;
    tail.rho = s.type().tail_rate;
    tail.scale = Real(1);
    tail.shift = Real(1);
    tail.degree = 0;
    tail.sign = 1;
  }
  const Real rel = s.coeff_rel_err() + Real(N + 2) * Real::unit_roundoff(Real::default_precision());
  return InvPowerSeries(std::move(c), Real(0), tail, rel);
}

EvalResult eval_image(const InvPowerSeries& ips, const Real& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::IndexOutOfRange, "eval_image requires x > 0");
  const long bits = Real::default_precision();
  const std::size_t N = ips.truncation_order();
  EvalResult out;
  RawSum raw;
  Real tail;
  {
    PrecisionScope guard(bits + kGuardBits);
    raw = raw_sum(ips, x);
    tail = tail_bound(ips, x);
  }
  out.value = raw.sum;
  out.value.round_to(bits);
  Real rounding = raw.abs_sum * (ips.coeff_rel_err() + Real(N + 8) * Real::unit_roundoff(bits + kGuardBits)) +
                  abs(out.value) * Real::unit_roundoff(bits);
  rounding.round_to(bits);
  tail.round_to(bits);
  out.abs_error_bound = tail + rounding;

  const bool tail_zero = tail.is_zero();
  if (raw.sign == 0) out.sign_definite = tail_zero;
  else if (raw.sign != 2) out.sign_definite = tail_zero || (tail.is_finite() && ips.tail().sign == raw.sign);
  return out;
}

RemainderSplit split_remainder(const InvPowerSeries& ips, std::size_t n) {
  if (!ips.offset().is_zero()) throw Error(ErrorKind::OffsetNotZero, "remainder split needs offset 0");
  const std::size_t N = ips.truncation_order();
  if (n == 0 || (n > N && !ips.finite()))
    throw Error(ErrorKind::OrderExceedsTruncation, "split order must be in 1..N");
  RemainderSplit out;
  out.order = n;
  // A finite series splits at any order; missing coefficients are zero.
  std::vector<Real> c = ips.coeffs();
  if (c.size() < n + 1) c.resize(n + 1, Real(0));
  out.head.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<Real> tail_coeffs(c.begin() + static_cast<std::ptrdiff_t>(n), c.end());
  TailModel t = ips.tail();
  if (t.known && !t.rho.is_zero()) {
    // c_(n+m) <= scale rho^n rho^m (m + n + shift)^d
    t.scale = t.scale * pow(t.rho, static_cast<long>(n));
    t.shift = t.shift + Real(n);
  }
  out.tail = InvPowerSeries(std::move(tail_coeffs), Real(0), t, ips.coeff_rel_err());
  return out;
}

EvalResult reconstruct(const RemainderSplit& split, const Real& x) {
  const long bits = Real::default_precision();
  const std::size_t N = split.tail.truncation_order() + split.order;
  EvalResult out;
  Real tail;
  RawSum raw;
  Real head_abs;
  {
    PrecisionScope guard(bits + kGuardBits);
    Real head(0);
    head_abs = Real(0);
    const Real inv = Real(1) / x;
    Real power = inv;
    for (const auto& h : split.head) {
      head += h * power;
      head_abs += abs(h * power);
      power *= inv;
    }
    raw = raw_sum(split.tail, x);
    const Real xn = pow(x, -static_cast<long>(split.order));
    out.value = head + xn * raw.sum;
    head_abs += xn * raw.abs_sum;
    tail = xn * tail_bound(split.tail, x);
  }
  out.value.round_to(bits);
  Real rounding = head_abs * (split.tail.coeff_rel_err() + Real(N + 8) * Real::unit_roundoff(bits + kGuardBits)) +
                  abs(out.value) * Real::unit_roundoff(bits);
  rounding.round_to(bits);
  tail.round_to(bits);
  out.abs_error_bound = tail + rounding;
  return out;
}

} // namespace amlt
