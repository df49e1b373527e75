#include "su21/compact.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

namespace su21 {

namespace {

constexpr double kPi = std::numbers::pi;

// (j +- m) style sums of doubled values, checked to be integral
long half_sum(int twice_a, int twice_b) {
  int t = twice_a + twice_b;
  if (t % 2) throw DomainError("parity violation");
  return t / 2;
}

double wrap_psi(double psi) {
  // into (-pi, 3pi]
  double x = std::fmod(psi + kPi, 4 * kPi);
  if (x <= 0) x += 4 * kPi;
  return x - kPi;
}

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
  return r;
}

Mat2 Mat2::adjoint() const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = std::conj(m[j][i]);
  return r;
}

double Mat2::max_abs_diff(const Mat2& o) const {
  double d = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(m[i][j] - o.m[i][j]));
  return d;
}

Mat2 Mat2::identity() {
  Mat2 r;
  r.m[0][0] = r.m[1][1] = 1.0;
  return r;
}

Mat2 matrix_from_euler(const EulerAngles& a) {
  const cd I(0, 1);
  double c = std::cos(a.theta / 2), s = std::sin(a.theta / 2);
  Mat2 r;
  r(0, 0) = std::exp(0.5 * I * (-a.zeta - a.phi - a.psi)) * c;
  r(0, 1) = -std::exp(0.5 * I * (-a.zeta + a.phi - a.psi)) * s;
  r(1, 0) = std::exp(0.5 * I * (-a.zeta - a.phi + a.psi)) * s;
  r(1, 1) = std::exp(0.5 * I * (-a.zeta + a.phi + a.psi)) * c;
  return r;
}

EulerAngles euler_from_matrix(cd alpha, cd beta, double zeta) {
  double na = std::abs(alpha), nb = std::abs(beta);
  if (std::abs(na * na + nb * nb - 1.0) > 1e-10) throw DomainError("(alpha, beta) is not a unit vector");
  EulerAngles out;
  out.zeta = zeta;
  // arccos(1 - 2|beta|^2), evaluated stably
  out.theta = 2 * std::atan2(nb, na);
  constexpr double kDegenerate = 1e-13;
  if (nb < kDegenerate) {
    out.phi = 0;
    out.psi = wrap_psi(-2 * std::arg(alpha));
    return out;
  }
  if (na < kDegenerate) {
    out.phi = 0;
    out.psi = wrap_psi(2 * std::arg(beta));
    return out;
  }
  auto arctan2 = [](double x, double y) { return std::arg(cd(x, y)); };
  double ra = alpha.real(), ia = alpha.imag(), rb = beta.real(), ib = beta.imag();
  out.phi = arctan2(ra * rb - ia * ib, -ib * ra - ia * rb);
  cd ab = beta * std::conj(alpha);
  double psi0 = arctan2(2 * ab.real(), 2 * (ra * ib - rb * ia));
  double e = std::arg(std::conj(alpha) * beta) - 2 * std::arg(std::conj(alpha)) + std::arg(std::conj(alpha * beta));
  long k = std::lround(e / (2 * kPi));
  double eps = (k % 2 == 0) ? 1.0 : -1.0;
  out.psi = wrap_psi(psi0 + kPi * (1 - eps));
  return out;
}

EulerAngles euler_from_u2(const Mat2& g) {
  cd d = g.det();
  double zeta = -std::arg(d);
  cd f = std::exp(cd(0, zeta / 2));
  return euler_from_matrix(g(0, 0) * f, g(1, 0) * f, zeta);
}

std::array<double, 4> quaternion_from_euler(const EulerAngles& a) {
  double c = std::cos(a.theta / 2), s = std::sin(a.theta / 2);
  return {c * std::cos((a.psi + a.phi) / 2), -c * std::sin((a.psi + a.phi) / 2), -s * std::cos((a.phi - a.psi) / 2),
          s * std::sin((-a.phi + a.psi) / 2)};
}

std::array<double, 4> quaternion_from_su2(cd alpha, cd beta) {
  return {alpha.real(), alpha.imag(), -beta.real(), beta.imag()};
}

bool WignerIndex::valid() const {
  if (j.twice < 0) return false;
  if (!same_parity(j, n) || !same_parity(j, m1) || !same_parity(j, m2)) return false;
  if (std::abs(m1.twice) > j.twice || std::abs(m2.twice) > j.twice) return false;
  return true;
}

void WignerIndex::validate() const {
  if (!valid()) throw DomainError("invalid Wigner index " + key());
}

std::string WignerIndex::key() const {
  std::ostringstream os;
  os << j.twice << "," << n.twice << "," << m1.twice << "," << m2.twice;
  return os.str();
}

void TrigPolynomial::add(int a, int b, const SurdSum& c) {
  if (c.is_zero()) return;
  auto& slot = mono_[{a, b}];
  slot += c;
  if (slot.is_zero()) mono_.erase({a, b});
}

double TrigPolynomial::eval(double theta) const {
  double s = std::sin(theta / 2), c = std::cos(theta / 2), acc = 0;
  for (const auto& [k, v] : mono_) acc += v.eval() * std::pow(s, k.first) * std::pow(c, k.second);
  return acc;
}

std::string TrigPolynomial::str() const {
  if (mono_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : mono_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")*s^" << k.first << "*c^" << k.second;
  }
  return os.str();
}

void LaurentSC::add(int a, int b, const Rational& q) {
  if (q == 0) return;
  auto& slot = t_[{a, b}];
  slot += q;
  if (slot == 0) t_.erase({a, b});
}

LaurentSC LaurentSC::from(const TrigPolynomial& p) {
  LaurentSC out;
  for (const auto& [k, v] : p.monomials()) {
    if (!v.is_rational()) throw DomainError("irrational trig coefficient");
    out.add(k.first, k.second, v.rational_part());
  }
  return out;
}

bool LaurentSC::identical(const LaurentSC& x, const LaurentSC& y) {
  LaurentSC d = x;
  for (const auto& [k, v] : y.t_) d.add(k.first, k.second, -v);
  if (d.t_.empty()) return true;
  int amin = 0, bmin = 0;
  for (const auto& [k, v] : d.t_) {
    amin = std::min(amin, k.first);
    bmin = std::min(bmin, k.second);
  }
  // canonical form P0(s) + c*P1(s) after s^-amin c^-bmin scaling
  std::map<std::pair<int, int>, Rational> red;
  for (const auto& [k, v] : d.t_) {
    int a = k.first - amin, b = k.second - bmin;
    int half = b / 2, odd = b % 2;
    // c^(2 half) = (1 - s^2)^half
    for (int i = 0; i <= half; ++i) {
      Rational binom(factorial(half), factorial(i) * factorial(half - i));
      if (i % 2) binom = -binom;
      red[{a + 2 * i, odd}] += v * binom;
    }
  }
  for (const auto& [k, v] : red)
    if (v != 0) return false;
  return true;
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

TrigPolynomial little_d(HalfInt j, HalfInt m1, HalfInt m2) {
  WignerIndex{j, j, m1, m2}.validate();
  TrigPolynomial out;
  long jpm1 = half_sum(j.twice, m1.twice), jmm2 = half_sum(j.twice, -m2.twice);
  long m2m1 = half_sum(m2.twice, -m1.twice);
  long twoj = j.twice;
  long pmin = std::max(0L, -m2m1), pmax = std::min(jmm2, jpm1);
  for (long p = pmin; p <= pmax; ++p) {
    Rational q(BigInt(1), factorial(jpm1 - p) * factorial(p) * factorial(m2m1 + p) * factorial(jmm2 - p));
    q.canonicalize();
    if ((m2m1 + p) % 2) q = -q;
    out.add(static_cast<int>(m2m1 + 2 * p), static_cast<int>(twoj - m2m1 - 2 * p), SurdSum(q));
  }
  return out;
}

LaurentSC little_d_jacobi_exact(HalfInt j, HalfInt m1, HalfInt m2) {
  WignerIndex{j, j, m1, m2}.validate();
  long n = half_sum(j.twice, -m1.twice);
  long a = half_sum(m1.twice, -m2.twice), b = half_sum(m1.twice, m2.twice);
  Rational pre(BigInt(1), factorial(half_sum(j.twice, m2.twice)) * factorial(half_sum(j.twice, -m2.twice)) * factorial(n));
  pre.canonicalize();
  auto poch = [](long x, long k) {
    BigInt r = 1;
    for (long i = 0; i < k; ++i) r *= (x + i);
    return r;
  };
  LaurentSC out;
  for (long m = 0; m <= n; ++m) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, m);
    // ((cos theta - 1)/2)^m = (-s^2)^m
    Rational t = pre * Rational(binom * poch(a + m + 1, n - m) * poch(a + b + n + 1, m));
    if (m % 2) t = -t;
    out.add(static_cast<int>(a + 2 * m), static_cast<int>(b), t);
  }
  return out;
}

namespace {

std::mutex g_f64_mutex;
std::map<std::tuple<int, int, int>, kernels::TrigPolyF64> g_f64_cache;

}  // namespace

const kernels::TrigPolyF64& little_d_f64(HalfInt j, HalfInt m1, HalfInt m2) {
  auto key = std::make_tuple(j.twice, m1.twice, m2.twice);
  std::lock_guard<std::mutex> lock(g_f64_mutex);
  auto it = g_f64_cache.find(key);
  if (it != g_f64_cache.end()) return it->second;
  kernels::TrigPolyF64 p;
  TrigPolynomial exact = little_d(j, m1, m2);
  for (const auto& [k, v] : exact.monomials()) p.push(k.first, k.second, v.eval());
  return g_f64_cache.emplace(key, std::move(p)).first->second;
}

double little_d_value(HalfInt j, HalfInt m1, HalfInt m2, double theta) {
  const auto& p = little_d_f64(j, m1, m2);
  double s = std::sin(theta / 2), c = std::cos(theta / 2), out = 0;
  kernels::eval_trig_poly_scalar(p, &s, &c, &out, 1);
  return out;
}

double little_d_hyper(HalfInt j, HalfInt m1, HalfInt m2, double theta) {
  WignerIndex{j, j, m1, m2}.validate();
  double s = std::sin(theta / 2), c = std::cos(theta / 2);
  long A, B, C;  // 2F1(A, B; C; -tan^2)
  long sp, cp;
  double pre;
  if (m1 > m2) {
    A = half_sum(-j.twice, m1.twice);
    B = half_sum(-j.twice, -m2.twice);
    C = 1 + half_sum(m1.twice, -m2.twice);
    sp = half_sum(m1.twice, -m2.twice);
    cp = j.twice - sp;
    pre = 1.0 / BigInt(factorial(half_sum(j.twice, -m1.twice)) * factorial(sp) * factorial(half_sum(j.twice, m2.twice))).get_d();
  } else {
    A = half_sum(-j.twice, -m1.twice);
    B = half_sum(-j.twice, m2.twice);
    C = 1 + half_sum(m2.twice, -m1.twice);
    sp = half_sum(m2.twice, -m1.twice);
    cp = j.twice - sp;
    pre = 1.0 / BigInt(factorial(half_sum(j.twice, m1.twice)) * factorial(sp) * factorial(half_sum(j.twice, -m2.twice))).get_d();
    if (sp % 2) pre = -pre;
  }
  // series terms t_k (-tan^2)^k folded into the cos power so theta = pi stays finite
  long kmax = std::min(-A, -B);
  double tk = 1.0, acc = 0.0;
  for (long k = 0; k <= kmax; ++k) {
    double sign = (k % 2) ? -1.0 : 1.0;
    acc += tk * sign * std::pow(s, static_cast<double>(sp + 2 * k)) * std::pow(c, static_cast<double>(cp - 2 * k));
    tk *= static_cast<double>(A + k) * static_cast<double>(B + k) / (static_cast<double>(C + k) * (k + 1));
  }
  return pre * acc;
}

double jacobi_P(int n, double a, double b, double x) {
  if (n < 0) throw DomainError("negative Jacobi degree");
  auto poch = [](double v, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r *= v + i;
    return r;
  };
  double acc = 0, binom = 1, z = (x - 1) / 2, zm = 1;
  for (int m = 0; m <= n; ++m) {
    acc += binom * poch(a + m + 1, n - m) * poch(a + b + n + 1, m) * zm;
    binom = binom * (n - m) / (m + 1);
    zm *= z;
  }
  double nf = 1;
  for (int i = 2; i <= n; ++i) nf *= i;
  return acc / nf;
}

double hyp2f1_terminating(double a, double b, double c, double z) {
  if (a > 0 || a != std::floor(a)) throw DomainError("2F1 does not terminate");
  long kmax = static_cast<long>(-a);
  double tk = 1, acc = 0, zk = 1;
  for (long k = 0; k <= kmax; ++k) {
    acc += tk * zk;
    tk *= (a + k) * (b + k) / ((c + k) * (k + 1));
    zk *= z;
  }
  return acc;
}

double jacobi_P_hyper(int n, double a, double b, double x) {
  if (a <= -1) throw DomainError("Jacobi2 route needs a > -1");
  double binom = std::exp(std::lgamma(n + a + 1) - std::lgamma(n + 1.0) - std::lgamma(a + 1));
  return binom * std::pow((x + 1) / 2, n) * hyp2f1_terminating(-n, -n - b, a + 1, (x - 1) / (x + 1));
}

double little_d_jacobi(HalfInt j, HalfInt m1, HalfInt m2, double theta) {
  WignerIndex{j, j, m1, m2}.validate();
  // d_{m1,m2} = d_{-m2,-m1} keeps the cos exponent nonnegative
  if (m1.twice + m2.twice < 0) {
    HalfInt t = m1;
    m1 = -m2;
    m2 = -t;
  }
  long n = half_sum(j.twice, -m1.twice);
  long a = half_sum(m1.twice, -m2.twice), b = half_sum(m1.twice, m2.twice);
  double s = std::sin(theta / 2), c = std::cos(theta / 2), x = std::cos(theta);
  double pre = 1.0 / BigInt(factorial(half_sum(j.twice, m2.twice)) * factorial(half_sum(j.twice, -m2.twice))).get_d();
  if (a >= 0) return pre * std::pow(s, static_cast<double>(a)) * std::pow(c, static_cast<double>(b)) * jacobi_P(n, a, b, x);
  // a < 0: the low-order terms vanish, so expand termwise
  auto poch = [](double v, long k) {
    double r = 1;
    for (long i = 0; i < k; ++i) r *= v + i;
    return r;
  };
  double acc = 0, binom = 1, nf = 1;
  for (long i = 2; i <= n; ++i) nf *= i;
  for (long m = 0; m <= n; ++m) {
    double coef = binom * poch(a + m + 1, n - m) * poch(a + b + n + 1, m);
    if (coef != 0) {
      double sign = (m % 2) ? -1.0 : 1.0;
      acc += coef * sign * std::pow(s, static_cast<double>(a + 2 * m));
    }
    binom = binom * (n - m) / (m + 1);
  }
  return pre * std::pow(c, static_cast<double>(b)) * acc / nf;
}

SurdSum c_factor(HalfInt j, HalfInt m) {
  return SurdSum::sqrt(Rational(factorial(half_sum(j.twice, m.twice)) * factorial(half_sum(j.twice, -m.twice))));
}

namespace {

double c_factor_f64(HalfInt j, HalfInt m) {
  return std::sqrt(BigInt(factorial(half_sum(j.twice, m.twice)) * factorial(half_sum(j.twice, -m.twice))).get_d());
}

}  // namespace

cd wigner_D(const WignerIndex& idx, const EulerAngles& a) {
  idx.validate();
  const auto& p = little_d_f64(idx.j, idx.m1, idx.m2);
  double s = std::sin(a.theta / 2), c = std::cos(a.theta / 2), d = 0;
  kernels::eval_trig_poly(p, &s, &c, &d, 1);
  double pref = c_factor_f64(idx.j, idx.m1) * c_factor_f64(idx.j, idx.m2);
  double phase = idx.n.value() * a.zeta + idx.m1.value() * a.psi + idx.m2.value() * a.phi;
  return pref * d * std::exp(cd(0, phase));
}

cd wigner_D(const WignerIndex& idx, const Mat2& g) { return wigner_D(idx, euler_from_u2(g)); }

namespace {

struct CGTable {
  // (2 m1, 2 M) -> value
  std::map<std::pair<int, int>, SurdSum> v;
};

std::mutex g_cg_mutex;
std::map<std::tuple<int, int, int>, CGTable> g_cg_cache;

SurdSum sqrt_ratio(const Rational& num, const Rational& den) {
  Rational q = num / den;
  q.canonicalize();
  return SurdSum::sqrt(q);
}

CGTable build_cg(int j1t, int j2t, int Jt) {
  CGTable t;
  Rational j1(j1t, 2), j2(j2t, 2), J(Jt, 2);
  j1.canonicalize();
  j2.canonicalize();
  J.canonicalize();
  auto a_up = [&](int mt) -> Rational {  // (j1 - m)(j1 + m + 1)
    Rational m(mt, 2);
    m.canonicalize();
    return (j1 - m) * (j1 + m + 1);
  };
  auto b_up = [&](int mt) -> Rational {
    Rational m(mt, 2);
    m.canonicalize();
    return (j2 - m) * (j2 + m + 1);
  };
  // stretched state M = J; J_+ annihilates it, coefficients fixed up to norm with c(j1) > 0
  int m1min = std::max(-j1t, Jt - j2t);
  std::map<int, SurdSum> top;
  top[j1t] = SurdSum(1);
  Rational norm2 = 1;
  for (int m1 = j1t - 2; m1 >= m1min; m1 -= 2) {
    int m2next = Jt - m1 - 2;  // m2 of the (m1+1) state minus one
    SurdSum c = -(top[m1 + 2] * sqrt_ratio(b_up(m2next), a_up(m1)));
    Rational sq = (c * c).rational_part();
    norm2 += sq;
    top[m1] = c;
  }
  Rational inv = Rational(1) / norm2;
  inv.canonicalize();
  SurdSum scale = SurdSum::sqrt(inv);
  for (auto& [m1, c] : top) t.v[{m1, Jt}] = c * scale;
  // lower with J_-
  for (int M = Jt; M > -Jt; M -= 2) {
    Rational Mq(M, 2);
    Mq.canonicalize();
    SurdSum inv_norm = SurdSum::sqrt(Rational(1) / ((J + Mq) * (J - Mq + 1)));
    int Mn = M - 2;
    for (int m1 = -j1t; m1 <= j1t; m1 += 2) {
      int m2 = Mn - m1;
      if (std::abs(m2) > j2t) continue;
      SurdSum acc;
      auto it1 = t.v.find({m1 + 2, M});
      if (it1 != t.v.end()) acc += it1->second * SurdSum::sqrt(a_up(m1));
      auto it2 = t.v.find({m1, M});
      if (it2 != t.v.end()) acc += it2->second * SurdSum::sqrt(b_up(m2));
      acc *= inv_norm;
      if (!acc.is_zero()) t.v[{m1, Mn}] = acc;
    }
  }
  return t;
}

void check_pair(HalfInt j, HalfInt m) {
  if (j.twice < 0 || !same_parity(j, m)) throw DomainError("parity violation in (" + j.str() + ", " + m.str() + ")");
}

}  // namespace

SurdSum cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  check_pair(j1, m1);
  check_pair(j2, m2);
  check_pair(J, M);
  if (!same_parity(J, j1 + j2)) throw DomainError("j1 + j2 + J not an integer");
  if (M != m1 + m2) return SurdSum();
  if (std::abs(m1.twice) > j1.twice || std::abs(m2.twice) > j2.twice || std::abs(M.twice) > J.twice) return SurdSum();
  if (J.twice > j1.twice + j2.twice || J.twice < std::abs(j1.twice - j2.twice)) return SurdSum();
  auto key = std::make_tuple(j1.twice, j2.twice, J.twice);
  std::lock_guard<std::mutex> lock(g_cg_mutex);
  auto it = g_cg_cache.find(key);
  if (it == g_cg_cache.end()) it = g_cg_cache.emplace(key, build_cg(j1.twice, j2.twice, J.twice)).first;
  auto v = it->second.v.find({m1.twice, M.twice});
  return v == it->second.v.end() ? SurdSum() : v->second;
}

bool threej_selection(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  HalfInt js[3] = {j1, j2, j3}, ms[3] = {m1, m2, m3};
  for (int i = 0; i < 3; ++i) {
    if (js[i].twice < 0 || !same_parity(js[i], ms[i]) || std::abs(ms[i].twice) > js[i].twice) return false;
  }
  if (m1.twice + m2.twice + m3.twice != 0) return false;
  if (j3.twice < std::abs(j1.twice - j2.twice) || j3.twice > j1.twice + j2.twice) return false;
  if ((j1.twice + j2.twice + j3.twice) % 2) return false;
  return true;
}

SurdSum threej(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  if (!threej_selection(j1, j2, j3, m1, m2, m3)) return SurdSum();
  HalfInt M = -m3;
  int e = (j2.twice - j1.twice - M.twice) / 2;
  SurdSum v = cg(j1, m1, j2, m2, j3, M) * SurdSum::sqrt(Rational(1) / Rational(j3.twice + 1));
  return (e % 2) ? -v : v;
}

std::vector<ProductTerm> product_expand(const WignerIndex& a, const WignerIndex& b) {
  a.validate();
  b.validate();
  std::vector<ProductTerm> out;
  HalfInt M1 = a.m1 + b.m1, M2 = a.m2 + b.m2;
  for (int Jt = std::abs(a.j.twice - b.j.twice); Jt <= a.j.twice + b.j.twice; Jt += 2) {
    HalfInt J(Jt);
    if (std::abs(M1.twice) > Jt || std::abs(M2.twice) > Jt) continue;
    SurdSum c = cg(a.j, a.m1, b.j, b.m1, J, M1) * cg(a.j, a.m2, b.j, b.m2, J, M2);
    if (c.is_zero()) continue;
    out.push_back({c, WignerIndex{J, a.n + b.n, M1, M2}});
  }
  return out;
}

}  // namespace su21
