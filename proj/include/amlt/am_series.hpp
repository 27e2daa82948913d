#pragma once

// Absolutely monotonic functions phi(t) = sum a_n t^n, a_n >= 0, of
// exponential type zero, stored as a truncated coefficient list.

#include <cstddef>
#include <string>
#include <vector>

#include "amlt/eval_result.hpp"
#include "amlt/real.hpp"

namespace amlt {

/// Default truncation order N; shorter coefficient lists are zero-padded.
inline constexpr std::size_t kDefaultTruncation = 64;

enum class TypeCertificate { certified_zero, heuristic_zero, unknown, violated };

const char* to_string(TypeCertificate c);

/// Verdict on exponential type zero from the growth rates
/// r_n = (n! a_n)^(1/n), which tend to zero exactly for type zero.
struct TypeEstimate {
  TypeCertificate certificate = TypeCertificate::unknown;
  /// r_n for n = 0..N; r_0 and entries with a_n = 0 are stored as 0.
  std::vector<Real> rates;
  /// Majorant rho used for the tail: a_n <= rho^n / n! for n > N.
  /// Zero for polynomials; meaningful only for the two type-zero verdicts.
  Real tail_rate;
  /// The coefficient list vanishes over its whole second half.
  bool polynomial = false;
};

struct TypeOptions {
  /// r_N must stay below this for a certified verdict.
  double threshold = 0.25;
};

class AMSeries {
public:
  /// Validates, clamps roundoff-level negatives, pads to `pad_to` terms + 1
  /// and certifies. Throws Error(NegativeCoefficient, index) otherwise.
  explicit AMSeries(std::vector<Real> coeffs, std::size_t pad_to = kDefaultTruncation,
                    TypeOptions options = {});

  const std::vector<Real>& coeffs() const { return coeffs_; }
  const Real& coeff(std::size_t n) const { return coeffs_[n]; }
  std::size_t truncation_order() const { return coeffs_.size() - 1; }
  const TypeEstimate& type() const { return type_; }
  TypeCertificate certificate() const { return type_.certificate; }
  bool type_zero() const {
    return type_.certificate == TypeCertificate::certified_zero ||
           type_.certificate == TypeCertificate::heuristic_zero;
  }
  /// Indices whose tiny negative input was clamped to zero.
  const std::vector<std::size_t>& clamped_indices() const { return clamped_; }
  /// Relative error of the stored coefficients w.r.t. the exact map that
  /// produced them (zero for user input).
  const Real& coeff_rel_err() const { return rel_err_; }
  const TypeOptions& options() const { return options_; }

  const std::string& name() const { return name_; }
  AMSeries& set_name(std::string n) {
    name_ = std::move(n);
    return *this;
  }

private:
  friend AMSeries derivative_series(const AMSeries& s, std::size_t j);
  friend AMSeries weight_gamma(const AMSeries& s, const Real& lambda);

  std::vector<Real> coeffs_;
  TypeEstimate type_;
  std::vector<std::size_t> clamped_;
  Real rel_err_;
  TypeOptions options_;
  std::string name_;
};

inline AMSeries new_am_series(std::vector<Real> coeffs) { return AMSeries(std::move(coeffs)); }

TypeEstimate estimate_type(const std::vector<Real>& coeffs, const TypeOptions& options = {});
inline TypeEstimate estimate_type(const AMSeries& s) { return estimate_type(s.coeffs(), s.options()); }

/// sum a_n t^n with a tail bound; the bound is infinite unless the series
/// carries a type-zero verdict.
EvalResult eval_phi(const AMSeries& s, const Real& t);

/// b_n = a_{n+j} (n+j)! / n!, i.e. phi^(j). Truncation order drops by j.
AMSeries derivative_series(const AMSeries& s, std::size_t j);

/// b_n = a_n Gamma(n + lambda) / n!; lambda = 1 is the identity.
AMSeries weight_gamma(const AMSeries& s, const Real& lambda);

} // namespace amlt
