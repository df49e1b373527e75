#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "su21/kernels.hpp"
#include "su21/surd.hpp"

namespace su21 {

using cd = std::complex<double>;

struct EulerAngles {
  double zeta = 0, psi = 0, theta = 0, phi = 0;
};

struct Mat2 {
  cd m[2][2]{};
  cd& operator()(int r, int c) { return m[r][c]; }
  const cd& operator()(int r, int c) const { return m[r][c]; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  Mat2 adjoint() const;
  cd det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  double max_abs_diff(const Mat2& o) const;
  static Mat2 identity();
};

Mat2 matrix_from_euler(const EulerAngles& a);
// (alpha, beta) are the first column of the SU(2) part; zeta the central angle
EulerAngles euler_from_matrix(cd alpha, cd beta, double zeta);
// any U(2) matrix; zeta = -Arg(det) in (-pi, pi]
EulerAngles euler_from_u2(const Mat2& g);
std::array<double, 4> quaternion_from_euler(const EulerAngles& a);
// [[alpha, -conj(beta)], [beta, conj(alpha)]] -> Re a + Im a i - Re b j + Im b k
std::array<double, 4> quaternion_from_su2(cd alpha, cd beta);

struct WignerIndex {
  HalfInt j, n, m1, m2;

  bool valid() const;
  void validate() const;  // throws DomainError
  std::string key() const;  // "2j,2n,2m1,2m2"
  auto operator<=>(const WignerIndex&) const = default;
};

// sum c_ab sin^a(theta/2) cos^b(theta/2)
class TrigPolynomial {
 public:
  using Key = std::pair<int, int>;
  void add(int a, int b, const SurdSum& c);
  const std::map<Key, SurdSum>& monomials() const { return mono_; }
  double eval(double theta) const;
  friend bool operator==(const TrigPolynomial& x, const TrigPolynomial& y) { return x.mono_ == y.mono_; }
  std::string str() const;

 private:
  std::map<Key, SurdSum> mono_;
};

// Rational Laurent polynomial in s = sin(theta/2), c = cos(theta/2); exponents may be negative.
class LaurentSC {
 public:
  using Key = std::pair<int, int>;
  void add(int a, int b, const Rational& q);
  const std::map<Key, Rational>& terms() const { return t_; }
  static LaurentSC from(const TrigPolynomial& p);  // requires rational coefficients
  // same function of theta, tested after clearing denominators and reducing c^2 = 1 - s^2
  static bool identical(const LaurentSC& x, const LaurentSC& y);

 private:
  std::map<Key, Rational> t_;
};

BigInt factorial(long n);

TrigPolynomial little_d(HalfInt j, HalfInt m1, HalfInt m2);
LaurentSC little_d_jacobi_exact(HalfInt j, HalfInt m1, HalfInt m2);
double little_d_value(HalfInt j, HalfInt m1, HalfInt m2, double theta);
double little_d_hyper(HalfInt j, HalfInt m1, HalfInt m2, double theta);
double little_d_jacobi(HalfInt j, HalfInt m1, HalfInt m2, double theta);
// Gamma ratios of the series read as Pochhammer symbols, so negative a, b are allowed
double jacobi_P(int n, double a, double b, double x);
// C(n+a, n) ((x+1)/2)^n 2F1(-n, -n-b; a+1; (x-1)/(x+1)); needs a > -1, x != -1
double jacobi_P_hyper(int n, double a, double b, double x);
// a must be a nonpositive integer
double hyp2f1_terminating(double a, double b, double c, double z);

// double-precision copy of little_d, cached
const kernels::TrigPolyF64& little_d_f64(HalfInt j, HalfInt m1, HalfInt m2);
SurdSum c_factor(HalfInt j, HalfInt m);

cd wigner_D(const WignerIndex& idx, const EulerAngles& a);
cd wigner_D(const WignerIndex& idx, const Mat2& g);

SurdSum cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);
SurdSum threej(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);
bool threej_selection(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

struct ProductTerm {
  SurdSum coef;
  WignerIndex idx;
};
std::vector<ProductTerm> product_expand(const WignerIndex& a, const WignerIndex& b);

}  // namespace su21
