#include "amlt/random_series.hpp"

#include <random>

#include "amlt/hyper_gallery.hpp"

namespace amlt {

namespace {

// Raw engine output only, so a seed means the same thing on every standard library.
class Draw {
public:
  explicit Draw(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  /// p/q with p in [lo_num, hi_num], fixed q
  Real ratio(std::uint64_t lo_num, std::uint64_t hi_num, std::uint64_t q) {
    return Real(static_cast<long>(lo_num + below(hi_num - lo_num + 1))) / Real(static_cast<long>(q));
  }

private:
  std::mt19937_64 gen_;
};

std::vector<Real> hyper_piece(Draw& d, std::string& recipe) {
  HyperParams p{d.ratio(1, 16, 4), d.ratio(1, 16, 4), d.ratio(1, 16, 4), std::nullopt};
  const Real w = d.ratio(1, 64, 8);
  recipe += "w*1F2(" + p.a.str(6) + ";" + p.b.str(6) + "," + p.c.str(6) + ") ";
  std::vector<Real> c = phi_1f2(p).coeffs();
  for (auto& v : c) v *= w;
  return c;
}

std::vector<Real> damped_piece(Draw& d, std::string& recipe) {
  const Real beta = d.ratio(1, 12, 8);
  const Real s = d.ratio(2, 8, 4);
  recipe += "beta^n/(n!)^(1+s) ";
  std::vector<Real> c;
  Real log_fact(0);
  for (std::size_t n = 0; n <= kDefaultTruncation; ++n) {
    if (n > 0) log_fact += log(Real(n));
    c.push_back(pow(beta, static_cast<long>(n)) * exp(-(Real(1) + s) * log_fact));
  }
  return c;
}

std::vector<Real> polynomial_piece(Draw& d, std::string& recipe) {
  const std::size_t degree = 1 + d.below(10);
  recipe += "poly" + std::to_string(degree) + " ";
  std::vector<Real> c;
  for (std::size_t n = 0; n <= degree; ++n) c.push_back(d.ratio(0, 20, 5));
  return c;
}

} // namespace

std::vector<AMSeries> random_certified_series(std::uint64_t seed, std::size_t count) {
  Draw d(seed);
  std::vector<AMSeries> out;
  while (out.size() < count) {
    std::string recipe;
    std::vector<Real> sum(kDefaultTruncation + 1, Real(0));
    const std::size_t pieces = 1 + d.below(3);
    for (std::size_t i = 0; i < pieces; ++i) {
      std::vector<Real> c;
      switch (d.below(3)) {
      case 0: c = hyper_piece(d, recipe); break;
      case 1: c = damped_piece(d, recipe); break;
      default: c = polynomial_piece(d, recipe); break;
      }
      for (std::size_t n = 0; n < c.size() && n < sum.size(); ++n) sum[n] += c[n];
    }
    AMSeries s(std::move(sum));
    if (s.certificate() != TypeCertificate::certified_zero) continue;
    if (!recipe.empty()) recipe.pop_back();
    s.set_name("random#" + std::to_string(out.size()) + " " + recipe);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace amlt
