#pragma once

#include <complex>
#include <vector>

#include "su21/surd.hpp"

namespace su21 {

using cd = std::complex<double>;

// Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2
cd lgamma_c(cd z);
cd gamma_c(cd z);
cd rgamma_c(cd z);  // 1/Gamma, zero at the poles

// a + b*lambda with delta already folded into a
struct GammaArg {
  Rational a, b;
  cd at(cd lambda) const;
};

// leading Laurent coefficient in (lambda - lambda0) and its order (> 0 zero, < 0 pole)
struct GammaValue {
  cd leading{0.0, 0.0};
  int order = 0;
  cd value() const;  // leading when order == 0, 0 for zeros, inf for poles
  bool finite() const { return order >= 0; }
};

// prefactor * 2^pow2 * pi^pow_pi * prod Gamma(num) / prod Gamma(den)
struct GammaRatio {
  cd prefactor{1.0, 0.0};
  GammaArg pow2{Rational(0), Rational(0)};
  int pow_pi = 0;
  std::vector<GammaArg> num, den;

  // an argument within tol of a nonpositive integer counts as a pole
  GammaValue evaluate(cd lambda, double tol = 1e-12) const;
};

}  // namespace su21
