#include "su21/structure.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace su21 {

namespace {

const CSurd kI = CSurd::I();

CSurd half() { return CSurd(SurdSum(Rational(1, 2))); }

CSurd inv_sqrt2() { return CSurd(SurdSum::sqrt(Rational(1, 2))); }

}  // namespace

Matrix3X Matrix3X::identity() {
  Matrix3X m;
  for (int i = 0; i < 3; ++i) m(i, i) = CSurd(1);
  return m;
}

Matrix3X Matrix3X::unit(int r, int c) {
  Matrix3X m;
  m(r, c) = CSurd(1);
  return m;
}

Matrix3X& Matrix3X::operator+=(const Matrix3X& o) {
  for (int i = 0; i < 9; ++i) e[i] += o.e[i];
  return *this;
}

Matrix3X& Matrix3X::operator-=(const Matrix3X& o) {
  for (int i = 0; i < 9; ++i) e[i] -= o.e[i];
  return *this;
}

Matrix3X operator*(const Matrix3X& a, const Matrix3X& b) {
  Matrix3X r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CSurd acc;
      for (int k = 0; k < 3; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

Matrix3X operator*(const CSurd& s, const Matrix3X& a) {
  Matrix3X r;
  for (int i = 0; i < 9; ++i) r.e[i] = s * a.e[i];
  return r;
}

Matrix3X Matrix3X::transpose() const {
  Matrix3X r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Matrix3X Matrix3X::conj() const {
  Matrix3X r;
  for (int i = 0; i < 9; ++i) r.e[i] = e[i].conj();
  return r;
}

bool Matrix3X::is_zero() const {
  for (const auto& x : e)
    if (!x.is_zero()) return false;
  return true;
}

std::string Matrix3X::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix3X bracket(const Matrix3X& a, const Matrix3X& b) { return a * b - b * a; }

Matrix3d Matrix3d::identity() { return diag(1.0, 1.0, 1.0); }

Matrix3d Matrix3d::from(const Matrix3X& x) {
  Matrix3d r;
  for (int i = 0; i < 9; ++i) r.e[i] = x.e[i].eval();
  return r;
}

Matrix3d Matrix3d::diag(cd a, cd b, cd c) {
  Matrix3d r;
  r(0, 0) = a;
  r(1, 1) = b;
  r(2, 2) = c;
  return r;
}

Matrix3d operator*(const Matrix3d& a, const Matrix3d& b) {
  Matrix3d r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

Matrix3d operator-(const Matrix3d& a, const Matrix3d& b) {
  Matrix3d r;
  for (int i = 0; i < 9; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Matrix3d Matrix3d::adjoint() const {
  Matrix3d r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

cd Matrix3d::det() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double Matrix3d::max_abs() const {
  double d = 0;
  for (const auto& x : e) d = std::max(d, std::abs(x));
  return d;
}

namespace {

struct GenInfo {
  Gen g;
  const char* name;
};

constexpr GenInfo kGens[] = {
    {Gen::U0, "U0"},       {Gen::U1, "U1"},         {Gen::U2, "U2"},       {Gen::U3, "U3"},
    {Gen::Halpha1, "H1"},  {Gen::Halpha2, "H2"},    {Gen::Xa1, "X(a1)"},   {Gen::Xma1, "X(-a1)"},
    {Gen::Xa2, "X(a2)"},   {Gen::Xma2, "X(-a2)"},   {Gen::Xa12, "X(a12)"}, {Gen::Xma12, "X(-a12)"},
    {Gen::Va2, "v(a2)"},   {Gen::Vma2, "v(-a2)"},   {Gen::Va12, "v(a12)"}, {Gen::Vma12, "v(-a12)"},
};

}  // namespace

std::string gen_name(Gen g) {
  for (const auto& x : kGens)
    if (x.g == g) return x.name;
  return "?";
}

Gen gen_from_name(const std::string& s) {
  for (const auto& x : kGens)
    if (s == x.name) return x.g;
  throw DomainError("unknown generator '" + s + "'");
}

Matrix3X basis_matrix(Gen g) {
  using M = Matrix3X;
  const CSurd ih = kI * half();
  switch (g) {
    case Gen::U0: {
      M m;
      m(0, 0) = ih;
      m(1, 1) = ih;
      m(2, 2) = -kI;
      return m;
    }
    case Gen::U1: {
      M m;
      m(0, 1) = ih;
      m(1, 0) = ih;
      return m;
    }
    case Gen::U2: {
      M m;
      m(0, 1) = half();
      m(1, 0) = -half();
      return m;
    }
    case Gen::U3: {
      M m;
      m(0, 0) = ih;
      m(1, 1) = -ih;
      return m;
    }
    case Gen::Halpha1: return M::unit(0, 0) - M::unit(1, 1);
    case Gen::Halpha2: return M::unit(1, 1) - M::unit(2, 2);
    case Gen::Xa1: return M::unit(0, 1);
    case Gen::Xma1: return M::unit(1, 0);
    case Gen::Xa2: return M::unit(1, 2);
    case Gen::Xma2: return M::unit(2, 1);
    case Gen::Xa12: return M::unit(0, 2);
    case Gen::Xma12: return M::unit(2, 0);
    case Gen::Va2: return CSurd(-1) * M::unit(1, 2);
    case Gen::Vma2: return M::unit(2, 1);
    case Gen::Va12: return M::unit(0, 2);
    case Gen::Vma12: return M::unit(2, 0);
  }
  throw DomainError("bad generator");
}

const std::array<Gen, 8>& kp_basis() {
  static const std::array<Gen, 8> b = {Gen::U0, Gen::U1, Gen::U2, Gen::U3, Gen::Va2, Gen::Va12, Gen::Vma2, Gen::Vma12};
  return b;
}

std::array<CSurd, 8> express_in_kp(const Matrix3X& x) {
  std::array<CSurd, 8> c;
  c[0] = kI * x(2, 2);
  c[3] = CSurd(-2) * kI * x(0, 0) - c[0];
  c[1] = -kI * (x(0, 1) + x(1, 0));
  c[2] = x(0, 1) - x(1, 0);
  c[4] = -x(1, 2);
  c[5] = x(0, 2);
  c[6] = x(2, 1);
  c[7] = x(2, 0);
  Matrix3X back;
  for (int i = 0; i < 8; ++i)
    if (!c[i].is_zero()) back += c[i] * basis_matrix(kp_basis()[i]);
  if (!(back == x)) throw DomainError("matrix is not in the span of the kp basis");
  return c;
}

Matrix3X sigma(const Matrix3X& x) {
  Matrix3X j = Matrix3X::identity();
  j(2, 2) = CSurd(-1);
  return CSurd(-1) * (j * x.transpose().conj() * j);
}

Matrix3X cayley_matrix() {
  // G = E31 - E13 satisfies G^3 = -G, so exp(tG) = 1 + sin t G + (1 - cos t) G^2
  Matrix3X g = Matrix3X::unit(2, 0) - Matrix3X::unit(0, 2);
  CSurd s = inv_sqrt2();
  CSurd c = inv_sqrt2();
  return Matrix3X::identity() + s * g + (CSurd(1) - c) * (g * g);
}

Matrix3X cayley_inverse() { return cayley_matrix().transpose(); }

Matrix3X p_conj(const Matrix3X& x) { return cayley_matrix() * x * cayley_inverse(); }

Matrix3X q_conj(const Matrix3X& x) { return cayley_inverse() * x * cayley_matrix(); }

Matrix3X n_matrix(const CSurd& z, const SurdSum& w) {
  Matrix3X m;
  CSurd iw = kI * CSurd(w);
  m(0, 0) = iw;
  m(0, 1) = z;
  m(0, 2) = -iw;
  m(1, 0) = -z.conj();
  m(1, 2) = z.conj();
  m(2, 0) = iw;
  m(2, 1) = z;
  m(2, 2) = -iw;
  return m;
}

Matrix3d n_matrix(cd z, double w) {
  Matrix3d m;
  cd iw(0, w);
  m(0, 0) = iw;
  m(0, 1) = z;
  m(0, 2) = -iw;
  m(1, 0) = -std::conj(z);
  m(1, 2) = std::conj(z);
  m(2, 0) = iw;
  m(2, 1) = z;
  m(2, 2) = -iw;
  return m;
}

Matrix3X IwasawaAlgebra::assemble() const {
  Matrix3X out;
  for (int i = 0; i < 4; ++i)
    if (!k[i].is_zero()) out += k[i] * basis_matrix(kp_basis()[i]);
  out += a * (basis_matrix(Gen::Xa12) + basis_matrix(Gen::Xma12));
  for (const auto& t : n) out += t.coef * n_matrix(t.z, t.w);
  return out;
}

IwasawaAlgebra iwasawa_valpha(Gen v) {
  const CSurd ih = kI * half();
  IwasawaAlgebra r;
  r.v = v;
  switch (v) {
    case Gen::Va12:
      r.k = {-ih, CSurd(), CSurd(), -ih};
      r.a = half();
      r.n = {{ih, CSurd(), SurdSum(1)}};
      return r;
    case Gen::Vma12:
      r.k = {ih, CSurd(), CSurd(), ih};
      r.a = half();
      r.n = {{-ih, CSurd(), SurdSum(1)}};
      return r;
    case Gen::Va2:
      // i(U1 - i U2)
      r.k = {CSurd(), kI, CSurd(1), CSurd()};
      r.n = {{-half(), CSurd(1), SurdSum()}, {-ih, kI, SurdSum()}};
      return r;
    case Gen::Vma2:
      r.k = {CSurd(), kI, CSurd(-1), CSurd()};
      r.n = {{half(), CSurd(1), SurdSum()}, {-ih, kI, SurdSum()}};
      return r;
    default:
      throw DomainError("iwasawa_valpha needs a noncompact weight vector, got " + gen_name(v));
  }
}

Matrix3d nbar_matrix(cd z, double w) {
  const double r2 = std::sqrt(2.0);
  double a2 = std::norm(z);
  Matrix3d l = Matrix3d::identity();
  l(1, 0) = r2 * z;
  l(2, 0) = cd(a2, -2 * w);
  l(2, 1) = r2 * std::conj(z);
  Matrix3d c = Matrix3d::from(cayley_matrix()), ci = Matrix3d::from(cayley_inverse());
  return c * l * ci;
}

IwasawaFactors iwasawa_group(cd z, double w) {
  const double r2 = std::sqrt(2.0);
  double a2 = std::norm(z);
  double S = std::sqrt((a2 + 1) * (a2 + 1) + 4 * w * w);
  cd den(a2 + 1, -2 * w);
  IwasawaFactors f;
  f.k(0, 0) = -cd(a2 - 1, -2 * w) / S;
  f.k(0, 1) = -2.0 * std::conj(z) / den;
  f.k(1, 0) = 2.0 * z / S;
  f.k(1, 1) = -cd(a2 - 1, 2 * w) / den;
  f.k(2, 2) = den / S;
  Matrix3d c = Matrix3d::from(cayley_matrix()), ci = Matrix3d::from(cayley_inverse());
  f.a = c * Matrix3d::diag(S, 1.0, 1.0 / S) * ci;
  Matrix3d n = Matrix3d::identity();
  n(0, 1) = r2 * std::conj(z) / den;
  n(0, 2) = cd(a2, 2 * w) / (S * S);
  n(1, 2) = r2 * z / cd(a2 + 1, 2 * w);
  f.n = c * n * ci;
  return f;
}

Mat2 k_block(const IwasawaFactors& f) {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = f.k(i, j);
  return m;
}

std::vector<CheckResult> structure_verify(int random_trials, unsigned seed) {
  std::vector<CheckResult> out;
  auto B = basis_matrix;
  auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back({name, ok, detail});
  };

  // u(2) brackets: [g_i, g_j] = -eps_ijk g_k for g_i = (i/2) sigma_i
  add("bracket U1 U2", bracket(B(Gen::U1), B(Gen::U2)) == CSurd(-1) * B(Gen::U3));
  add("bracket U2 U3", bracket(B(Gen::U2), B(Gen::U3)) == CSurd(-1) * B(Gen::U1));
  add("bracket U3 U1", bracket(B(Gen::U3), B(Gen::U1)) == CSurd(-1) * B(Gen::U2));
  bool central = true;
  for (Gen g : {Gen::U1, Gen::U2, Gen::U3}) central = central && bracket(B(Gen::U0), B(g)).is_zero();
  add("U0 central in k", central);
  add("i H1 = 2 U3", kI * B(Gen::Halpha1) == CSurd(2) * B(Gen::U3));
  add("i H2 = U0 - U3", kI * B(Gen::Halpha2) == B(Gen::U0) - B(Gen::U3));
  add("X(a12) = [X(a1), X(a2)]", bracket(B(Gen::Xa1), B(Gen::Xa2)) == B(Gen::Xa12));

  // sigma fixes su(2,1)
  bool fixed = true;
  for (Gen g : {Gen::U0, Gen::U1, Gen::U2, Gen::U3}) fixed = fixed && sigma(B(g)) == B(g);
  add("sigma fixes k", fixed);
  add("sigma(v(a12)) = v(-a12)", sigma(B(Gen::Va12)) == B(Gen::Vma12));
  add("sigma(v(a2)) = -v(-a2)", sigma(B(Gen::Va2)) == CSurd(-1) * B(Gen::Vma2));

  // Cayley
  Matrix3X c = cayley_matrix();
  add("cayley c c^-1 = 1", c * cayley_inverse() == Matrix3X::identity());
  add("cayley generator from sigma", (sigma(B(Gen::Va12)) - B(Gen::Va12)) ==
                                         Matrix3X::unit(2, 0) - Matrix3X::unit(0, 2));
  Matrix3X aGen = B(Gen::Xa12) + B(Gen::Xma12);
  add("q(X(a12) + X(-a12)) = H1 + H2", q_conj(aGen) == B(Gen::Halpha1) + B(Gen::Halpha2));

  // restricted root grading on n and its opposite
  bool grading = true;
  for (const CSurd& z : {CSurd(1), kI}) {
    Matrix3X n1 = n_matrix(z, SurdSum());
    grading = grading && bracket(aGen, n1) == n1;
    Matrix3X gm = p_conj(z.conj() * B(Gen::Xma1) + z * B(Gen::Xma2));
    grading = grading && bracket(aGen, gm) == CSurd(-1) * gm;
    Matrix3X gp = p_conj(z * B(Gen::Xa1) + z.conj() * B(Gen::Xa2));
    grading = grading && bracket(aGen, gp) == gp;
  }
  Matrix3X n2 = n_matrix(CSurd(), SurdSum(1));
  grading = grading && bracket(aGen, n2) == CSurd(2) * n2;
  Matrix3X g2m = p_conj(kI * B(Gen::Xma12));
  grading = grading && bracket(aGen, g2m) == CSurd(-2) * g2m;
  add("restricted root grading", grading);
  add("[n(1,0), n(i,0)] in g(2 alpha0)",
      bracket(n_matrix(CSurd(1), SurdSum()), n_matrix(kI, SurdSum())) == n_matrix(CSurd(), SurdSum(2)));

  for (Gen v : {Gen::Va12, Gen::Vma12, Gen::Va2, Gen::Vma2}) {
    IwasawaAlgebra r = iwasawa_valpha(v);
    add("iwasawa " + gen_name(v), r.assemble() == B(v));
  }

  // ad(U1 +- i U2) v_alpha = -i v_(alpha +- alpha1)
  Matrix3X up = B(Gen::U1) + kI * B(Gen::U2), dn = B(Gen::U1) - kI * B(Gen::U2);
  bool ladder = bracket(up, B(Gen::Va2)) == CSurd(-1) * kI * B(Gen::Va12) &&
                bracket(up, B(Gen::Vma12)) == CSurd(-1) * kI * B(Gen::Vma2) &&
                bracket(dn, B(Gen::Va12)) == CSurd(-1) * kI * B(Gen::Va2) &&
                bracket(dn, B(Gen::Vma2)) == CSurd(-1) * kI * B(Gen::Vma12) &&
                bracket(up, B(Gen::Va12)).is_zero() && bracket(dn, B(Gen::Va2)).is_zero();
  add("ladder action on p", ladder);

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(-2.0, 2.0);

  // weights: Ad(exp(a U0 + b U3)) v = exp(i(n a + m b)) v
  struct Wt {
    Gen g;
    double m, n;
  };
  const Wt wts[] = {{Gen::Va2, -0.5, 1.5}, {Gen::Va12, 0.5, 1.5}, {Gen::Vma2, 0.5, -1.5}, {Gen::Vma12, -0.5, -1.5}};
  double werr = 0;
  for (int t = 0; t < random_trials; ++t) {
    double a = U(rng), b = U(rng);
    cd e0 = std::exp(cd(0, 0.5 * (a + b))), e1 = std::exp(cd(0, 0.5 * (a - b))), e2 = std::exp(cd(0, -a));
    Matrix3d g = Matrix3d::diag(e0, e1, e2), gi = g.adjoint();
    for (const auto& w : wts) {
      Matrix3d v = Matrix3d::from(B(w.g));
      Matrix3d lhs = g * v * gi;
      cd ph = std::exp(cd(0, w.n * a + w.m * b));
      Matrix3d rhs;
      for (int i = 0; i < 9; ++i) rhs.e[i] = ph * v.e[i];
      werr = std::max(werr, (lhs - rhs).max_abs());
    }
  }
  add("weight table", werr < 1e-12, "max err " + std::to_string(werr));

  double gerr = 0, kerr = 0;
  Matrix3d J = Matrix3d::diag(1.0, 1.0, -1.0);
  for (int t = 0; t < random_trials; ++t) {
    cd z(U(rng), U(rng));
    double w = U(rng);
    IwasawaFactors f = iwasawa_group(z, w);
    gerr = std::max(gerr, (f.k * f.a * f.n - nbar_matrix(z, w)).max_abs());
    kerr = std::max(kerr, std::abs(f.k.det() - 1.0));
    kerr = std::max(kerr, (f.k.adjoint() * f.k - Matrix3d::identity()).max_abs());
    kerr = std::max(kerr, (f.k.adjoint() * J * f.k - J).max_abs());
  }
  std::ostringstream d1, d2;
  d1 << "max err " << gerr;
  d2 << "max err " << kerr;
  add("group iwasawa reassembly", gerr <= 1e-10, d1.str());
  add("K factor in SU(2,1) and U(3)", kerr <= 1e-10, d2.str());
  return out;
}

}  // namespace su21
