#pragma once

// An evaluable function handle on (0, inf). Series-backed and closed-form
// handles support exact differentiation and multiplication by powers of x;
// a plain callable only supports pointwise values.

#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "amlt/closed_form.hpp"
#include "amlt/eval_result.hpp"
#include "amlt/laplace_image.hpp"

namespace amlt {

class Function {
public:
  using Callable = std::function<Real(const Real&)>;

  Function(InvPowerSeries s) : impl_(std::move(s)) {}
  Function(ClosedForm f) : impl_(std::move(f)) {}
  static Function from_callable(Callable f, std::string name = "callable");

  EvalResult eval(const Real& x) const;
  /// f^(m)(x); throws DerivativeUnavailable for callables when m > 0.
  EvalResult derivative(std::size_t m, const Real& x) const;

  Function derivative(std::size_t m) const;
  Function times_power(const Real& a) const;
  Function scaled(const Real& s) const;

  const InvPowerSeries* series() const { return std::get_if<InvPowerSeries>(&impl_); }
  const ClosedForm* closed_form() const { return std::get_if<ClosedForm>(&impl_); }
  bool differentiable() const { return !std::holds_alternative<Plain>(impl_); }

  std::string describe() const;

private:
  struct Plain {
    std::shared_ptr<const Callable> f;
    std::string name;
  };
  explicit Function(Plain p) : impl_(std::move(p)) {}

  std::variant<InvPowerSeries, ClosedForm, Plain> impl_;
};

} // namespace amlt
