#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "su21/compact.hpp"
#include "su21/gamma.hpp"

namespace su21 {

// Gamma-ratio form of [A(w0, delta, lambda)]_{m1}
GammaRatio a_closed_ratio(HalfInt j, HalfInt m1, int delta);
GammaValue a_closed(HalfInt j, HalfInt m1, int delta, cd lambda);

// the unreflected form with (-1)^{j-m1} Gamma((lambda-delta)/2) / Gamma(-j+m1+(lambda-delta)/2)
GammaValue a_unreflected(HalfInt j, HalfInt m1, int delta, cd lambda);

struct GammaSum {
  GammaValue prefactor;
  cd sum{0.0, 0.0};  // the bare triple sum
  long terms = 0;    // (K1, K2, p) with nonvanishing multinomials
  cd value() const;
};
GammaSum a_gammasum(HalfInt j, HalfInt m1, int delta, cd lambda);

// s^{lambda-1} t^0 coefficient, exact; throws DomainError for lambda < 1
Rational constant_term_oracle(HalfInt j, HalfInt m1, int delta, long lambda);
// binomial-theorem form of the same coefficient
GammaValue constant_term_closed(HalfInt j, HalfInt m1, int delta, cd lambda);

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-13;
  int max_subdivisions = 200;
  void validate() const;  // tolerance in (0, 1e-3]
};

struct QuadratureFailure : std::runtime_error {
  cd estimate;
  double error;
  QuadratureFailure(const std::string& what, cd est, double err)
      : std::runtime_error(what), estimate(est), error(err) {}
};

struct QuadratureResult {
  cd value{0.0, 0.0};
  double error = 0.0;
  long evaluations = 0;
};

// integrates W_{m1,m2}(w0 k(z, w)) against the kernel; needs 3 m2 - n = delta and Re lambda > 0
QuadratureResult a_quadrature(const WignerIndex& idx, int delta, cd lambda, const QuadratureSpec& spec = {});

// 2x2 block of the K-part of c nbar(z, w) c^-1 in closed form
Mat2 k_block_closed(cd z, double w);

}  // namespace su21
