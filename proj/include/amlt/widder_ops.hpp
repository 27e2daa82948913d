#pragma once

// Widder operators f_j = (-1)^j (x^j f)^(j), Sokal's T_{n,k}^lambda, the
// recursions between them and the sign conditions characterising Laplace
// transforms of absolutely monotonic functions.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "amlt/check_report.hpp"
#include "amlt/function.hpp"
#include "amlt/laplace_image.hpp"

namespace amlt {

/// Two independently computed sides of an identity.
struct PairResult {
  EvalResult left;
  EvalResult right;

  bool agree() const { return amlt::agree(left, right); }
  Real relative_difference() const { return amlt::relative_difference(left.value, right.value); }
};

/// Coefficients c_n (n+1+offset-j)(n+2+offset-j)...(n+offset); offset kept.
InvPowerSeries widder_image(const InvPowerSeries& ips, std::size_t j);

/// f_j as a handle: widder_image for series, symbolic otherwise.
Function widder_function(const Function& f, std::size_t j);

/// -x f'_{j-1}(x) - j f_{j-1}(x), given a handle for f_{j-1}.
EvalResult recursion_step(const Function& f_prev, std::size_t j, const Real& x);

/// f_k(x) from the derivatives f^(0..k)(x) alone, by repeatedly applying
/// f_j^(m) = -x f_{j-1}^(m+1) - (j+m) f_{j-1}^(m).
EvalResult recursion_chain(const Function& f, std::size_t k, const Real& x);

/// f_j^(k-1)(x) against -x f_{j-1}^(k)(x) - (j+k-1) f_{j-1}^(k-1)(x).
PairResult derivative_recursion_check(const Function& f, std::size_t j, std::size_t k, const Real& x);

/// (-1)^n x^-(n+lambda-1) (x^(k+n+lambda-1) f^(n)(x))^(k)
EvalResult sokal_T(const Function& f, std::size_t n, std::size_t k, const Real& lambda, const Real& x);

/// x^(k-1) (x^k f)^(2k-1) against (x^(2k-1) f^(k-1))^(k).
PairResult widder_identity_check(const Function& f, std::size_t k, const Real& x);

/// a_{j,l} with (-1)^j x^j f^(k-1) = sum_l a_{j,l} f_l^(k-j-1).
struct CorollaryTable {
  std::size_t k = 0;
  std::vector<std::vector<Real>> rows;  // rows[j][l], l <= j

  const Real& at(std::size_t j, std::size_t l) const { return rows.at(j).at(l); }
  bool nonnegative() const;
};

CorollaryTable corollary_coeffs(std::size_t k, std::size_t j_max);
PairResult corollary_identity_check(const Function& f, std::size_t j, std::size_t k, const Real& x);
/// (-x f_{j-1})' against f_j + (j-1) f_{j-1}.
PairResult step_derivative_check(const Function& f, std::size_t j, const Real& x);

/// "eq7" entries for k = 1..k_max and "cor3.2" entries for j <= k-1 on the
/// grid. value is left - right; pass when the sides agree within their bounds
/// or to relative rel_tol.
CheckReport identity_report(const Function& f, std::size_t k_max, const std::vector<Real>& grid,
                            const Real& rel_tol = Real(1e-25));

/// 2^-4, 2^-3, ..., 2^11.
std::vector<Real> default_x_grid();

struct CheckOptions {
  std::size_t k_max = 6;
  std::size_t depth = 8;
  std::vector<Real> grid = default_x_grid();
  Tolerances tolerances;
};

/// Conditions (iii), (iv), (v) for k <= k_max on the grid, plus coefficient
/// witnesses for series-backed input.
CheckReport check_conditions(const Function& f, const CheckOptions& options = {});

struct DecayOptions {
  std::vector<Real> grid;  // defaults to 10^1 .. 10^6
  Real tolerance{1e-5};
  std::size_t extra_nu = 2;
  /// Compare the last magnitude with tolerance times the first instead of tolerance.
  bool relative_final = false;
};

/// x^k f^(k)(x) and (x^k f)^(nu)(x), nu = k..k+extra_nu, on a geometric grid
/// toward infinity: magnitudes must decrease and end below tolerance.
CheckReport decay_check(const Function& f, std::size_t k_max, const DecayOptions& options = {});

struct CmOrderResult {
  Verdict verdict = Verdict::inconclusive;
  CheckReport report;
  /// Series input only: c_0 = ... = c_(r-2) = 0.
  std::optional<bool> zero_prefix;
};

/// (x^r f)' <= 0 on the grid, which makes f completely monotonic of order r.
CmOrderResult cm_order_detect(const Function& f, std::size_t r, const std::vector<Real>& grid = default_x_grid(),
                              const Tolerances& tol = {});

struct PolynomialDetection {
  /// f = L(phi) with phi a polynomial of degree r-1 and x^r f -> a_r.
  std::optional<std::size_t> r;
  Real a_r;
  /// (k, x, x^k f(x)) samples toward 0+.
  struct Sample {
    std::size_t k;
    Real x;
    Real value;
  };
  std::vector<Sample> evidence;
  std::string note;
};

PolynomialDetection detect_polynomial(const Function& f);

} // namespace amlt
