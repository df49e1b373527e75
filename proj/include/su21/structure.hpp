#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "su21/compact.hpp"
#include "su21/surd.hpp"

namespace su21 {

// 3x3 over exact Gaussian surds
struct Matrix3X {
  std::array<CSurd, 9> e{};

  CSurd& operator()(int r, int c) { return e[3 * r + c]; }
  const CSurd& operator()(int r, int c) const { return e[3 * r + c]; }

  static Matrix3X zero() { return {}; }
  static Matrix3X identity();
  static Matrix3X unit(int r, int c);  // E_rc

  Matrix3X& operator+=(const Matrix3X& o);
  Matrix3X& operator-=(const Matrix3X& o);
  friend Matrix3X operator+(Matrix3X a, const Matrix3X& b) { return a += b; }
  friend Matrix3X operator-(Matrix3X a, const Matrix3X& b) { return a -= b; }
  friend Matrix3X operator*(const Matrix3X& a, const Matrix3X& b);
  friend Matrix3X operator*(const CSurd& s, const Matrix3X& a);
  friend bool operator==(const Matrix3X& a, const Matrix3X& b) { return a.e == b.e; }

  Matrix3X transpose() const;
  Matrix3X conj() const;
  bool is_zero() const;
  std::string str() const;
};

Matrix3X bracket(const Matrix3X& a, const Matrix3X& b);

struct Matrix3d {
  std::array<cd, 9> e{};

  cd& operator()(int r, int c) { return e[3 * r + c]; }
  const cd& operator()(int r, int c) const { return e[3 * r + c]; }

  static Matrix3d identity();
  static Matrix3d from(const Matrix3X& x);
  static Matrix3d diag(cd a, cd b, cd c);

  friend Matrix3d operator*(const Matrix3d& a, const Matrix3d& b);
  friend Matrix3d operator-(const Matrix3d& a, const Matrix3d& b);
  Matrix3d adjoint() const;
  cd det() const;
  double max_abs() const;
};

enum class Gen {
  U0, U1, U2, U3,
  Halpha1, Halpha2,
  Xa1, Xma1, Xa2, Xma2, Xa12, Xma12,
  Va2, Vma2, Va12, Vma12,
};

std::string gen_name(Gen g);
Gen gen_from_name(const std::string& s);  // throws DomainError
Matrix3X basis_matrix(Gen g);

// the kp basis order used by express_in_kp: U0..U3, v_a2, v_a12, v_-a2, v_-a12
const std::array<Gen, 8>& kp_basis();
std::array<CSurd, 8> express_in_kp(const Matrix3X& x);  // throws DomainError outside sl(3)

// X -> -J X^dagger J
Matrix3X sigma(const Matrix3X& x);

// exp(t(E31 - E13)) at t = pi/4, closed form
Matrix3X cayley_matrix();
Matrix3X cayley_inverse();
Matrix3X p_conj(const Matrix3X& x);  // c x c^-1
Matrix3X q_conj(const Matrix3X& x);  // c^-1 x c

Matrix3X n_matrix(const CSurd& z, const SurdSum& w);
Matrix3d n_matrix(cd z, double w);

// kp-part + a-part + n-part of one noncompact weight vector
struct IwasawaTerm {
  CSurd coef;
  CSurd z;
  SurdSum w;
};
struct IwasawaAlgebra {
  Gen v;
  std::array<CSurd, 4> k;  // coefficients of U0..U3
  CSurd a;                 // coefficient of X_a12 + X_-a12
  std::vector<IwasawaTerm> n;

  Matrix3X assemble() const;
};
IwasawaAlgebra iwasawa_valpha(Gen v);  // v in {Va2, Vma2, Va12, Vma12}

struct IwasawaFactors {
  Matrix3d k, a, n;
};
// c L c^-1 for the lower unipotent L(z, w)
Matrix3d nbar_matrix(cd z, double w);
IwasawaFactors iwasawa_group(cd z, double w);
// 2x2 block of the K factor, a U(2) element
Mat2 k_block(const IwasawaFactors& f);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};
std::vector<CheckResult> structure_verify(int random_trials = 100, unsigned seed = 7);

}  // namespace su21
