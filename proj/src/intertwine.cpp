#include "su21/intertwine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <queue>

namespace su21 {

namespace {

Rational half(long twice) {
  Rational q(twice, 2);
  q.canonicalize();
  return q;
}

GammaArg arg(const Rational& a, const Rational& b) { return {a, b}; }

Rational falling(const Rational& x, long n) {
  Rational out = 1;
  for (long i = 0; i < n; ++i) out *= x - i;
  return out;
}

// exact complex rationals; a double lambda is a dyadic rational, so the triple sum is exact
struct CQ {
  Rational re, im;
  CQ(const Rational& r = 0, const Rational& i = 0) : re(r), im(i) {}
  CQ operator+(const CQ& o) const { return {re + o.re, im + o.im}; }
  CQ operator*(const CQ& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
};

CQ falling(const CQ& x, long n) {
  CQ out(1);
  for (long i = 0; i < n; ++i) out = out * CQ(x.re - i, x.im);
  return out;
}

Rational fact(long n) { return Rational(factorial(n)); }

void check_parity(HalfInt j, HalfInt m1) {
  if (j.twice < 0 || std::abs(m1.twice) > j.twice || !same_parity(j, m1)) {
    throw DomainError("need |m1| <= j with j - m1 integral");
  }
}

}  // namespace

GammaRatio a_closed_ratio(HalfInt j, HalfInt m1, int delta) {
  check_parity(j, m1);
  const Rational J = j.rational(), M = m1.rational(), d2 = half(delta);
  const Rational h(1, 2);
  GammaRatio g;
  g.pow2 = arg(-1, -1);
  g.pow_pi = 2;
  g.num = {arg(0, 1), arg(J + M - d2 + 1, -h), arg(J - M + d2 + 1, -h)};
  g.den = {arg(1 + d2, -h), arg(1 - d2, -h), arg(J + M - d2 + 1, h), arg(J - M + d2 + 1, h)};
  return g;
}

GammaValue a_closed(HalfInt j, HalfInt m1, int delta, cd lambda) {
  return a_closed_ratio(j, m1, delta).evaluate(lambda);
}

GammaValue a_unreflected(HalfInt j, HalfInt m1, int delta, cd lambda) {
  check_parity(j, m1);
  const Rational J = j.rational(), M = m1.rational(), d2 = half(delta);
  const Rational h(1, 2);
  GammaRatio g;
  g.prefactor = ((j.twice - m1.twice) / 2) % 2 ? -1.0 : 1.0;
  g.pow2 = arg(-1, -1);
  g.pow_pi = 2;
  g.num = {arg(0, 1), arg(-d2, h), arg(J + M - d2 + 1, -h)};
  g.den = {arg(1 - d2, -h), arg(-J + M - d2, h), arg(J + M - d2 + 1, h), arg(J - M + d2 + 1, h)};
  return g.evaluate(lambda);
}

cd GammaSum::value() const {
  if (prefactor.order > 0) return 0.0;
  return prefactor.value() * sum;
}

GammaSum a_gammasum(HalfInt j, HalfInt m1, int delta, cd lambda) {
  check_parity(j, m1);
  const long k = j.twice, l = m1.twice;
  const long dm = (k - l) / 2, dp = (k + l) / 2;
  GammaRatio pre;
  pre.prefactor = dp % 2 ? -1.0 : 1.0;
  pre.pow2 = arg(-1, -1);
  pre.pow_pi = 2;
  const Rational h(1, 2);
  pre.num = {arg(dp + 1, 0), arg(dm + 1, 0), arg(0, 1)};
  pre.den = {arg(half(k + l - delta) + 1, h), arg(half(k - l + delta) + 1, h)};
  GammaSum out;
  out.prefactor = pre.evaluate(lambda);
  const CQ L(Rational(lambda.real()), Rational(lambda.imag()));
  const CQ N((L.re + (k - l + delta)) / 2, L.im / 2);
  CQ sum;
  for (long p = 0; p <= std::min(dm, dp); ++p) {
    for (long K1 = 0; p + K1 <= dm; ++K1) {
      for (long K2 = 0; p + K2 <= dp; ++K2) {
        const long a = dm - p - K1, b = dp - p - K2;
        Rational c = fact(K2 + p) / (fact(K1) * fact(p) * fact(K2) * fact(p) * fact(a) * fact(b));
        if ((K1 + K2) % 2) c = -c;
        sum = sum + falling(CQ(L.re + (K1 + p - 1), L.im), K1 + p) * falling(N, a + b) * CQ(c);
        ++out.terms;
      }
    }
  }
  out.sum = cd(sum.re.get_d(), sum.im.get_d());
  return out;
}

Rational constant_term_oracle(HalfInt j, HalfInt m1, int delta, long lambda) {
  check_parity(j, m1);
  if (lambda < 1) throw DomainError("constant term needs an integer lambda >= 1");
  const long k = j.twice, l = m1.twice;
  const long dm = (k - l) / 2, dp = (k + l) / 2;
  const Rational N = half(k - l + lambda + delta);
  auto binom_row = [](long n) {
    std::vector<BigInt> row{1};
    for (long i = 0; i < n; ++i) {
      std::vector<BigInt> next(row.size() + 1, 0);
      for (size_t c = 0; c < row.size(); ++c) {
        next[c] += row[c];
        next[c + 1] += row[c];
      }
      row = std::move(next);
    }
    return row;
  };
  Rational total = 0;
  for (long a = 0; a <= dm; ++a) {
    for (long b = 0; b <= dp; ++b) {
      Rational c = falling(N, a + b);
      c /= Rational(factorial(a) * factorial(b));
      if ((a + b) % 2) c = -c;
      const long e1 = dm - a, e2 = dp - b;
      // (1+s)^{lambda-1+e1}: coefficient of s^{lambda-1}
      auto srow = binom_row(lambda - 1 + e1);
      // (1+t)^{e1} (1+1/t)^{e2} as a Laurent polynomial, exponent offset e2
      auto trow = binom_row(e1), urow = binom_row(e2);
      std::map<long, BigInt> laurent;
      for (long x = 0; x <= e1; ++x) {
        for (long y = 0; y <= e2; ++y) laurent[x - y] += trow[x] * urow[y];
      }
      total += c * Rational(srow[lambda - 1] * laurent[0]);
    }
  }
  return total;
}

GammaValue constant_term_closed(HalfInt j, HalfInt m1, int delta, cd lambda) {
  check_parity(j, m1);
  const long k = j.twice, l = m1.twice;
  const Rational h(1, 2), d2 = half(delta);
  GammaRatio g;
  g.prefactor = k % 2 ? -1.0 : 1.0;
  g.num = {arg(1 + half(k + l) - d2, -h), arg(-d2, h)};
  g.den = {arg(half(k + l) + 1, 0), arg(half(k - l) + 1, 0), arg(1 - d2, -h),
           arg(half(l - k) - d2, h)};
  return g.evaluate(lambda);
}

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0 && rel_tol <= 1e-3)) throw DomainError("tolerance must lie in (0, 1e-3]");
  if (!(abs_tol >= 0)) throw DomainError("absolute floor must be nonnegative");
  if (max_subdivisions < 1) throw DomainError("max subdivisions must be positive");
}

Mat2 k_block_closed(cd z, double w) {
  const double r2 = std::norm(z);
  const double S = std::sqrt((r2 + 1) * (r2 + 1) + 4 * w * w);
  const cd I(0.0, 1.0);
  const cd den = r2 - 2.0 * I * w + 1.0;
  Mat2 k;
  k(0, 0) = -(r2 - 2.0 * I * w - 1.0) / S;
  k(0, 1) = -2.0 * std::conj(z) / den;
  k(1, 0) = 2.0 * z / S;
  k(1, 1) = -(r2 + 2.0 * I * w - 1.0) / den;
  return k;
}

namespace {

// 15-point Gauss-Kronrod nodes and weights on [-1, 1]
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  cd value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<cd(double)>& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  cd fc = f(c);
  cd kron = fc * kWgk[7], gauss = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = hw * kXgk[i];
    cd s = f(c - dx) + f(c + dx);
    kron += kWgk[i] * s;
    if (i % 2 == 1) gauss += kWg[i / 2] * s;
  }
  evals += 15;
  return {a, b, kron * hw, std::abs((kron - gauss) * hw)};
}

struct Adaptive {
  cd value;
  double error;
  bool converged;
};

Adaptive integrate(const std::function<cd(double)>& f, double a, double b, double abs_tol, double rel_tol,
                   int max_sub, long& evals) {
  std::priority_queue<Segment> q;
  Segment s0 = gk15(f, a, b, evals);
  cd total = s0.value;
  double err = s0.error;
  q.push(s0);
  int n = 1;
  while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (n >= max_sub) return {total, err, false};
    Segment s = q.top();
    q.pop();
    const double m = 0.5 * (s.a + s.b);
    Segment l = gk15(f, s.a, m, evals), r = gk15(f, m, s.b, evals);
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    q.push(l);
    q.push(r);
    ++n;
  }
  // re-sum to shed the rounding of the running updates
  total = 0.0;
  err = 0.0;
  for (; !q.empty(); q.pop()) {
    total += q.top().value;
    err += q.top().error;
  }
  return {total, err, true};
}

}  // namespace

QuadratureResult a_quadrature(const WignerIndex& idx, int delta, cd lambda, const QuadratureSpec& spec) {
  spec.validate();
  idx.validate();
  if (idx.n.twice != 3 * idx.m2.twice - 2 * delta) throw DomainError("index is not in the principal series");
  if (!(lambda.real() > 0)) throw DomainError("the defining integral needs Re lambda > 0");
  const bool diagonal = idx.m1 == idx.m2;
  // the z-angle integral is trivial on the diagonal; otherwise a periodic trapezoid rule,
  // exact for the trigonometric degree that occurs
  const int n_theta = diagonal ? 1 : 4 * (idx.j.twice + 2);
  QuadratureResult out;
  auto integrand = [&](double v, double tau) -> cd {
    const double r = std::sqrt(v / (1 - v));
    const double w = std::tan(tau) * (1 + r * r) / 2;
    cd acc = 0.0;
    for (int t = 0; t < n_theta; ++t) {
      const double th = 2 * std::numbers::pi * t / n_theta;
      Mat2 kb = k_block_closed(std::polar(r, th), w);
      for (auto& row : kb.m)
        for (auto& e : row) e = -e;  // w0
      acc += wigner_D(idx, kb);
    }
    acc /= double(n_theta);
    return acc * std::pow(std::cos(tau), lambda);
  };
  double inner_err = 0.0;
  bool ok = true;
  auto outer = [&](double v) -> cd {
    auto in = integrate([&](double tau) { return integrand(v, tau); }, -std::numbers::pi / 2,
                        std::numbers::pi / 2, 0.1 * spec.abs_tol, 0.1 * spec.rel_tol, spec.max_subdivisions,
                        out.evaluations);
    ok = ok && in.converged;
    const cd wv = std::pow(cd(1 - v), lambda - 1.0);
    inner_err = std::max(inner_err, in.error * std::abs(wv));
    return in.value * wv;
  };
  auto res = integrate(outer, 0.0, 1.0, spec.abs_tol, spec.rel_tol, spec.max_subdivisions, out.evaluations);
  const double scale = std::numbers::pi / 2;
  out.value = scale * res.value;
  out.error = scale * (res.error + inner_err);
  if (!res.converged || !ok) {
    throw QuadratureFailure("quadrature did not reach the requested tolerance", out.value, out.error);
  }
  return out;
}

}  // namespace su21
