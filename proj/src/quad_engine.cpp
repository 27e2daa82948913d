#include "amlt/quad_engine.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "amlt/error.hpp"

namespace amlt {

namespace {

constexpr std::size_t kGaussPoints = 20;
constexpr std::size_t kMaxPanels = 200000;
constexpr int kMaxDepth = 80;
constexpr int kInitialPanels = 8;

Real apply_rule(const std::function<Real(const Real&)>& g, const Real& a, const Real& b) {
  const GaussRule& rule = gauss_legendre(kGaussPoints);
  const Real half = (b - a) / Real(2);
  const Real mid = (a + b) / Real(2);
  Real sum(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * g(mid + half * rule.nodes[i]);
  return sum * half;
}

struct Accumulator {
  Real value{0};
  Real bound{0};
  std::size_t panels = 0;
};

void refine(const std::function<Real(const Real&)>& g, const Real& a, const Real& b, const Real& whole,
            const Real& density, int depth, Accumulator& acc) {
  if (++acc.panels > kMaxPanels) throw Error(ErrorKind::ToleranceUnreachable, "panel budget exhausted");
  const Real mid = (a + b) / Real(2);
  const Real left = apply_rule(g, a, mid);
  const Real right = apply_rule(g, mid, b);
  const Real both = left + right;
  const Real err = abs(whole - both);
  if (err <= density * (b - a)) {
    acc.value += both;
    acc.bound += err;
    return;
  }
  if (depth >= kMaxDepth) throw Error(ErrorKind::ToleranceUnreachable, "maximum bisection depth reached");
  refine(g, a, mid, left, density, depth + 1, acc);
  refine(g, mid, b, right, density, depth + 1, acc);
}

// Sum over n > N of first * theta^(n-N-1); infinite when theta >= 1.
Real geometric_tail(const Real& first, const Real& theta) {
  if (first.is_zero()) return Real(0);
  if (theta >= Real(1)) return Real::infinity();
  return first / (Real(1) - theta);
}

struct TailSetup {
  Real eps;
  Real growth;  // C_eps with phi(t) <= C_eps e^(eps t)
};

TailSetup tail_setup(const AMSeries& s, const Real& x) {
  if (!s.type_zero())
    throw Error(ErrorKind::CertificateInsufficient,
                std::string("series certificate is ") + to_string(s.certificate()) + "; tail cannot be bounded");
  const Real rho = s.type().tail_rate;
  Real eps = x / Real(2);
  if (rho >= eps) {
    if (rho >= x) throw Error(ErrorKind::CertificateInsufficient, "growth rate of the series is not below x");
    eps = (rho + x) / Real(2);
  }
  // a_n <= C eps^n / n! for every n, so phi(t) <= C e^(eps t).
  Real c(0);
  Real fact(1);
  Real eps_pow(1);
  const std::size_t N = s.truncation_order();
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) {
      fact *= Real(n);
      eps_pow *= eps;
    }
    c = max(c, s.coeff(n) * fact / eps_pow);
  }
  if (!rho.is_zero()) c = max(c, pow(rho / eps, static_cast<long>(N + 1)));
  return {eps, c};
}

// Horner evaluation of the stored coefficients.
Real phi_value(const AMSeries& s, const Real& t) {
  Real sum(0);
  for (std::size_t i = s.truncation_order() + 1; i-- > 0;) sum = sum * t + s.coeff(i);
  return sum;
}

} // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  thread_local std::map<std::pair<long, std::size_t>, GaussRule> cache;
  const long bits = Real::default_precision();
  auto key = std::make_pair(bits, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  GaussRule rule;
  {
    PrecisionScope guard(bits + kGuardBits);
    const Real tiny = Real::unit_roundoff(bits + kGuardBits / 2);
    for (std::size_t i = 1; i <= n; ++i) {
      Real z = Real(std::cos(3.14159265358979323846 * (static_cast<double>(i) - 0.25) / (static_cast<double>(n) + 0.5)));
      Real dp;
      for (int iter = 0; iter < 100; ++iter) {
        Real p0(1), p1 = z;
        for (std::size_t k = 2; k <= n; ++k) {
          Real p2 = (Real(2 * k - 1) * z * p1 - Real(k - 1) * p0) / Real(k);
          p0 = std::move(p1);
          p1 = std::move(p2);
        }
        dp = Real(n) * (z * p1 - p0) / (z * z - Real(1));
        const Real dz = p1 / dp;
        z -= dz;
        if (abs(dz) <= tiny) break;
      }
      Real p0(1), p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        Real p2 = (Real(2 * k - 1) * z * p1 - Real(k - 1) * p0) / Real(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = Real(n) * (z * p1 - p0) / (z * z - Real(1));
      rule.nodes.push_back(z);
      rule.weights.push_back(Real(2) / ((Real(1) - z * z) * dp * dp));
    }
  }
  for (auto& v : rule.nodes) v.round_to(bits);
  for (auto& v : rule.weights) v.round_to(bits);
  return cache.emplace(key, std::move(rule)).first->second;
}

EvalResult integrate_adaptive(const std::function<Real(const Real&)>& g, const Real& a, const Real& b,
                              const Real& tol) {
  Accumulator acc;
  if (!(b > a)) return exact(Real(0));
  const Real density = tol / (b - a);
  const Real width = (b - a) / Real(kInitialPanels);
  for (int i = 0; i < kInitialPanels; ++i) {
    const Real lo = a + width * Real(i);
    const Real hi = i + 1 == kInitialPanels ? b : a + width * Real(i + 1);
    refine(g, lo, hi, apply_rule(g, lo, hi), density, 0, acc);
  }
  EvalResult r;
  r.value = acc.value;
  r.abs_error_bound = acc.bound + abs(acc.value) * Real(kGaussPoints * 4) * Real::epsilon();
  return r;
}

EvalResult laplace_numeric(const AMSeries& s, const Real& x, const Real& tol) {
  if (x.sign() <= 0) throw Error(ErrorKind::IndexOutOfRange, "laplace_numeric requires x > 0");
  const TailSetup ts = tail_setup(s, x);
  const Real decay = x - ts.eps;
  if (ts.growth.is_zero()) return exact(Real(0));

  // C e^(-(x-eps)T) / (x-eps) <= tol/2
  Real T = log(Real(2) * ts.growth / (decay * tol)) / decay;
  T = max(T, Real(1));
  const Real tail_T = ts.growth * exp(-decay * T) / decay;

  EvalResult quad = integrate_adaptive([&](const Real& t) { return exp(-x * t) * phi_value(s, t); }, Real(0), T,
                                       tol / Real(2));

  // Coefficients beyond N: sum_{n>N} rho^n / x^(n+1).
  const Real rho = s.type().tail_rate;
  const std::size_t N = s.truncation_order();
  const Real trunc =
      rho.is_zero() ? Real(0) : geometric_tail(pow(rho / x, static_cast<long>(N + 1)) / x, rho / x);

  quad.abs_error_bound += tail_T + trunc;
  quad.sign_definite = true;
  return quad;
}

EvalResult laplace_weighted_numeric(const AMSeries& s, const Real& lambda, const Real& x, const Real& tol) {
  if (lambda.sign() <= 0) throw Error(ErrorKind::NonPositiveLambda, "lambda must be positive");
  if (x.sign() <= 0) throw Error(ErrorKind::IndexOutOfRange, "laplace_weighted_numeric requires x > 0");
  const TailSetup ts = tail_setup(s, x);
  const Real decay = x - ts.eps;
  if (ts.growth.is_zero()) return exact(Real(0));
  const Real lm1 = lambda - Real(1);
  const std::size_t N = s.truncation_order();
  const bool smooth = lambda.is_integer();

  // Cut-off: C Gamma(lambda, (x-eps)T) / (x-eps)^lambda <= tol/2.
  Real T = max(Real(2), log(Real(2) * ts.growth / (decay * tol)) / decay);
  auto tail_at = [&](const Real& t) { return ts.growth * gamma_upper(lambda, decay * t) / pow(decay, lambda); };
  Real tail_T = tail_at(T);
  for (int i = 0; i < 60 && tail_T > tol / Real(2); ++i) {
    T *= Real(2);
    tail_T = tail_at(T);
  }
  if (tail_T > tol / Real(2)) throw Error(ErrorKind::ToleranceUnreachable, "no cut-off meets the tail tolerance");

  auto integrand = [&](const Real& t) { return exp(-x * t) * pow(t, lm1) * phi_value(s, t); };

  EvalResult out;
  if (smooth) {
    out = integrate_adaptive(integrand, Real(0), T, tol / Real(2));
  } else {
    // Singular head: int_0^1 e^(-xt) t^(n+lambda-1) dt = gamma(n+lambda, x) / x^(n+lambda).
    const long bits = Real::default_precision();
    Real head(0);
    {
      PrecisionScope guard(bits + kGuardBits);
      head = Real(0);
      for (std::size_t n = 0; n <= N; ++n) {
        if (s.coeff(n).is_zero()) continue;
        const Real sn = Real(n) + lambda;
        head += s.coeff(n) * gamma_lower(sn, x) / pow(x, sn);
      }
    }
    head.round_to(bits);
    EvalResult body = integrate_adaptive(integrand, Real(1), T, tol / Real(2));
    out.value = head + body.value;
    out.abs_error_bound =
        body.abs_error_bound + abs(head) * (Real(N + 8) * Real::unit_roundoff(bits) + s.coeff_rel_err());
  }

  // Coefficients beyond N contribute sum_{n>N} rho^n Gamma(n+lambda) / (n! x^(n+lambda)),
  // with Gamma(n+lambda)/n! <= (n+1+lambda)^max(lambda-1, 0).
  const Real rho = s.type().tail_rate;
  Real trunc(0);
  if (!rho.is_zero()) {
    const Real d = max(lm1, Real(0));
    const Real n1(N + 1);
    const Real first = pow(rho / x, static_cast<long>(N + 1)) * pow(n1 + Real(1) + lambda, d) / pow(x, lambda);
    const Real theta = rho / x * pow((n1 + Real(2) + lambda) / (n1 + Real(1) + lambda), d);
    trunc = geometric_tail(first, theta);
  }
  out.abs_error_bound += tail_T + trunc;
  out.sign_definite = true;
  return out;
}

} // namespace amlt
