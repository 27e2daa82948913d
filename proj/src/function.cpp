#include "amlt/function.hpp"

#include "amlt/error.hpp"

namespace amlt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void no_derivative(const std::string& name) {
  throw Error(ErrorKind::DerivativeUnavailable, "'" + name + "' only supports pointwise evaluation");
}

} // namespace

Function Function::from_callable(Callable f, std::string name) {
  return Function(Plain{std::make_shared<const Callable>(std::move(f)), std::move(name)});
}

EvalResult Function::eval(const Real& x) const {
  return std::visit(overloaded{
                        [&](const InvPowerSeries& s) { return eval_image(s, x); },
                        [&](const ClosedForm& f) { return f.eval(x); },
                        [&](const Plain& p) {
                          // No error model for a black box beyond its own rounding.
                          EvalResult r;
                          r.value = (*p.f)(x);
                          r.abs_error_bound = abs(r.value) * Real::epsilon();
                          return r;
                        },
                    },
                    impl_);
}

EvalResult Function::derivative(std::size_t m, const Real& x) const {
  if (m == 0) return eval(x);
  return derivative(m).eval(x);
}

Function Function::derivative(std::size_t m) const {
  if (m == 0) return *this;
  return std::visit(overloaded{
                        [&](const InvPowerSeries& s) { return Function(s.derivative(m)); },
                        [&](const ClosedForm& f) { return Function(f.derivative(m)); },
                        [&](const Plain& p) -> Function { no_derivative(p.name); },
                    },
                    impl_);
}

Function Function::times_power(const Real& a) const {
  return std::visit(overloaded{
                        [&](const InvPowerSeries& s) { return Function(s.times_power(a)); },
                        [&](const ClosedForm& f) { return Function(f.times_power(a)); },
                        [&](const Plain& p) {
                          auto inner = p.f;
                          return from_callable([inner, a](const Real& x) { return pow(x, a) * (*inner)(x); },
                                               "x^" + a.str(8) + "*" + p.name);
                        },
                    },
                    impl_);
}

Function Function::scaled(const Real& s) const {
  return std::visit(overloaded{
                        [&](const InvPowerSeries& ips) { return Function(ips.scaled(s)); },
                        [&](const ClosedForm& f) { return Function(f.scaled(s)); },
                        [&](const Plain& p) {
                          auto inner = p.f;
                          return from_callable([inner, s](const Real& x) { return s * (*inner)(x); },
                                               s.str(8) + "*" + p.name);
                        },
                    },
                    impl_);
}

std::string Function::describe() const {
  return std::visit(overloaded{
                        [](const InvPowerSeries& s) {
                          return "series(N=" + std::to_string(s.truncation_order()) + ", offset=" +
                                 s.offset().str(8) + ")";
                        },
                        [](const ClosedForm& f) { return f.str(); },
                        [](const Plain& p) { return p.name; },
                    },
                    impl_);
}

} // namespace amlt
