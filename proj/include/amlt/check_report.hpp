#pragma once

#include <string>
#include <vector>

#include "amlt/eval_result.hpp"
#include "amlt/real.hpp"

namespace amlt {

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);

/// Sign-check slack: max(abs_tol, rel_tol * local_scale), where the local
/// scale is |f(x)| for the function under test.
struct Tolerances {
  Real abs_tol{1e-40};
  Real rel_tol{1e-35};
};

struct CheckEntry {
  std::string condition_id;
  long k = 0;
  /// Secondary order: derivative depth m, nu, j or n depending on the
  /// condition; -1 when unused.
  long m = -1;
  std::string detail;
  Real x;
  Real value;
  Real bound;
  Verdict verdict = Verdict::inconclusive;
};

/// Coefficient-level evidence that holds for every x at once.
struct Witness {
  std::string condition_id;
  long k = 0;
  bool holds = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  std::vector<Witness> witnesses;
  Tolerances tolerances;
  Verdict summary = Verdict::pass;

  /// fail if any entry or witness fails, else inconclusive if any entry is,
  /// else pass.
  void finalize();
  void append(const CheckReport& other);
};

/// Verdict for the requirement sign(value) == required_sign (+1 means
/// value >= 0, -1 means value <= 0).
Verdict sign_verdict(const EvalResult& r, int required_sign, const Real& local_scale, const Tolerances& tol);

} // namespace amlt
