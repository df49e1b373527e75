#include "su21/gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace su21 {

namespace {

constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

cd lgamma_lanczos(cd z) {
  z -= 1.0;
  cd x = kCoef[0];
  for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + double(i));
  cd t = z + kG + 0.5;
  return 0.5 * std::log(2 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cd lgamma_c(cd z) {
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) - lgamma_lanczos(1.0 - z);
  }
  return lgamma_lanczos(z);
}

cd gamma_c(cd z) {
  double r = std::round(z.real());
  if (z.imag() == 0.0 && z.real() == r && r <= 0) return {std::numeric_limits<double>::infinity(), 0.0};
  if (z.imag() == 0.0 && z.real() == r && r <= 20) {
    double f = 1.0;
    for (int i = 2; i < r; ++i) f *= i;
    return f;
  }
  return std::exp(lgamma_c(z));
}

cd rgamma_c(cd z) {
  double r = std::round(z.real());
  if (z.imag() == 0.0 && z.real() == r && r <= 0) return 0.0;
  return 1.0 / gamma_c(z);
}

cd GammaArg::at(cd lambda) const {
  return a.get_d() + b.get_d() * lambda;
}

cd GammaValue::value() const {
  if (order > 0) return 0.0;
  if (order < 0) return {std::numeric_limits<double>::infinity(), 0.0};
  return leading;
}

GammaValue GammaRatio::evaluate(cd lambda, double tol) const {
  GammaValue out;
  out.leading = prefactor * std::pow(cd(2.0), pow2.at(lambda)) * std::pow(std::numbers::pi, pow_pi);
  auto factor = [&](const GammaArg& g, bool denominator) {
    cd z = g.at(lambda);
    double r = std::round(z.real());
    if (r <= 0 && std::abs(z - r) < tol && sgn(g.b) != 0) {
      // Gamma(-n + b eps) ~ (-1)^n / (n! b eps)
      long n = static_cast<long>(-r);
      double res = (n % 2 ? -1.0 : 1.0) / (std::tgamma(double(n) + 1.0) * g.b.get_d());
      out.order += denominator ? 1 : -1;
      out.leading *= denominator ? 1.0 / res : res;
      return;
    }
    cd v = gamma_c(z);
    out.leading *= denominator ? 1.0 / v : v;
  };
  for (const auto& g : num) factor(g, false);
  for (const auto& g : den) factor(g, true);
  return out;
}

}  // namespace su21
