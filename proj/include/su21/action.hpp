#pragma once

#include <array>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "su21/compact.hpp"
#include "su21/structure.hpp"
#include "su21/surd.hpp"

namespace su21 {

struct InductionChar {
  int delta = 0;
  cd lambda{0.0, 0.0};
  bool integral = false;  // decomposition mode: lambda an integer with lambda +- delta even

  static InductionChar exact(int delta, long lambda);
  static InductionChar numeric(int delta, cd lambda);
  long lambda_int() const;  // throws unless integral
};

struct KType {
  HalfInt j, n;
  HalfInt m2(int delta) const;
  int k() const { return j.twice; }
  auto operator<=>(const KType&) const = default;
};

// 3 m2 - n = delta with |m2| <= j
bool in_principal_series(const WignerIndex& idx, int delta);
std::vector<KType> ktype_set(int delta, HalfInt jmax);
// (j, n) <-> (k, l) = (2j, 2 m2)
std::pair<int, int> lattice_of(const KType& t, int delta);
KType ktype_of_lattice(int k, int l, int delta);
std::vector<WignerIndex> basis_indices(int delta, HalfInt jmax);

struct ActionTerm {
  WignerIndex target;
  LambdaPoly coeff;
};

using Vec = std::map<WignerIndex, LambdaPoly>;

enum class Route { tables, before_cg };

// dl(v) for v in {Va2, Va12, Vma2, Vma12}; throws DomainError off the principal series
std::vector<ActionTerm> dl_valpha(Gen v, const WignerIndex& src, int delta, Route route = Route::tables);

enum class KGen { gamma0, gamma1, gamma2, gamma3, raise, lower };
std::vector<ActionTerm> dl_k(KGen g, const WignerIndex& src);

enum class RGen { a, va2, vma2, va12, vma12, gamma0, gamma1, gamma2, gamma3 };
std::vector<ActionTerm> dr_ops(RGen g, const WignerIndex& src);

// dl of a complexified element given by express_in_kp coordinates
Vec apply_dl(const std::array<CSurd, 8>& x, const Vec& v, int delta, Route route = Route::tables);
Vec apply_dl(const Matrix3X& x, const Vec& v, int delta, Route route = Route::tables);
Vec scale(const LambdaPoly& c, const Vec& v);
Vec& accumulate(Vec& acc, const Vec& v);
bool vec_equal(const Vec& a, const Vec& b);

// word of matrices, applied right to left
using Program = std::vector<Matrix3X>;
Program parse_program(const std::string& text);  // "v(a2)*v(-a2)", "U3", "H1*X(a1)"

struct OperatorMatrix {
  int delta = 0;
  HalfInt jmax;
  std::map<WignerIndex, Vec> rows;
  std::set<WignerIndex> leaking;
};
OperatorMatrix operator_matrix(const Program& program, int delta, HalfInt jmax, int threads = 1);

LambdaPoly casimir2_poly(int delta);
cd casimir2_scalar(int delta, cd lambda);
// cubic Casimir character value in its closed form; not Weyl invariant, see casimir3_hc
cd casimir3_scalar(int delta, cd lambda);
// the Harish-Chandra image with chi substituted directly
cd casimir3_hc(int delta, cd lambda);

struct IdentityReport {
  bool pass = true;
  long checked = 0;
  std::vector<std::string> failures;
};

// Omega2 = (1/9)(H1^2 + H1 H2 + H2^2 + 3(H1 + H2)) + c sum_alpha X_-alpha X_alpha
struct CasimirReport : IdentityReport {
  LambdaPoly value;  // common diagonal value when pass
  long leaking = 0;
};
CasimirReport casimir2_apply(int delta, HalfInt jmax, const Rational& root_coef = Rational(1, 3));

IdentityReport bracket_consistency(int delta, HalfInt jmax);
IdentityReport route_consistency(int delta, HalfInt jmax);

}  // namespace su21
