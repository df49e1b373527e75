// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "su21/action.hpp"
#include "su21/compact.hpp"
#include "su21/decomposition.hpp"
#include "su21/intertwine.hpp"
#include "su21/structure.hpp"

using namespace su21;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<HalfInt> ms(HalfInt j) {
  std::vector<HalfInt> out;
  for (int m = -j.twice; m <= j.twice; m += 2) out.emplace_back(m);
  return out;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

SurdSum sq(const Rational& r) { return SurdSum::sqrt(r); }

Outcome wigner_paths() {
  Outcome o;
  double worst = 0;
  int exact = 0;
  for (int jt = 0; jt <= 6; ++jt) {
    HalfInt j(jt);
    for (HalfInt m1 : ms(j))
      for (HalfInt m2 : ms(j)) {
        if (LaurentSC::identical(LaurentSC::from(little_d(j, m1, m2)), little_d_jacobi_exact(j, m1, m2)))
          ++exact;
        else
          o.pass = false;
        for (int k = 0; k <= 36; ++k) {
          double t = kPi * k / 36, ref = little_d_value(j, m1, m2, t);
          worst = std::max({worst, std::abs(little_d_hyper(j, m1, m2, t) - ref), std::abs(little_d_jacobi(j, m1, m2, t) - ref)});
        }
      }
  }
  o.pass = o.pass && worst <= 1e-11;
  o.detail = std::to_string(exact) + " exact polynomial matches, pointwise max " + fmt("%.2e", worst) + " (tol 1e-11)";
  return o;
}

Outcome unitarity() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> z(-2 * kPi, 2 * kPi), p(-kPi, 3 * kPi), t(0, kPi), f(-kPi, kPi);
  double wu = 0, wm = 0;
  for (int it = 0; it < 100; ++it) {
    EulerAngles a{z(rng), p(rng), t(rng), f(rng)}, b{z(rng), p(rng), t(rng), f(rng)};
    Mat2 gab = matrix_from_euler(a) * matrix_from_euler(b);
    for (int jt = 0; jt <= 5; ++jt) {
      HalfInt j(jt);
      for (int nt = -jt - 4; nt <= jt + 4; nt += 2)
        for (HalfInt m1 : ms(j))
          for (HalfInt m2 : ms(j)) {
            HalfInt n(nt);
            cd u = 0, m = 0;
            for (HalfInt m3 : ms(j)) {
              u += wigner_D({j, n, m1, m3}, a) * std::conj(wigner_D({j, n, m2, m3}, a));
              m += wigner_D({j, n, m1, m3}, a) * wigner_D({j, n, m3, m2}, b);
            }
            wu = std::max(wu, std::abs(u - double(m1 == m2)));
            wm = std::max(wm, std::abs(m - wigner_D({j, n, m1, m2}, gab)));
          }
    }
  }
  return {wu <= 1e-10 && wm <= 1e-9, "unitarity " + fmt("%.2e", wu) + " (tol 1e-10), multiplicativity " + fmt("%.2e", wm) + " (tol 1e-9)"};
}

Outcome cg_tables() {
  int entries = 0, bad = 0;
  auto check = [&](const SurdSum& got, const SurdSum& want) {
    ++entries;
    if (!(got == want)) ++bad;
  };
  const HalfInt h(1), one(2), zero(0);
  for (int jt = 1; jt <= 5; ++jt) {
    HalfInt j(jt);
    Rational J = j.rational();
    for (HalfInt m1 : ms(j)) {
      Rational m = m1.rational();
      check(cg(j, m1, h, -h, j - h, m1 - h), sq((J + m) / (2 * J + 1)));
      check(cg(j, m1, h, h, j - h, m1 + h), -sq((J - m) / (2 * J + 1)));
      check(cg(j, m1, h, -h, j + h, m1 - h), sq((J - m + 1) / (2 * J + 1)));
      check(cg(j, m1, h, h, j + h, m1 + h), sq((J + m + 1) / (2 * J + 1)));
      if (jt >= 2) {
        check(cg(j, m1, one, -one, j - one, m1 - one), sq((J + m) * (J + m - 1) / (2 * J * (2 * J + 1))));
        check(cg(j, m1, one, zero, j - one, m1), -sq((J - m) * (J + m) / (J * (2 * J + 1))));
        check(cg(j, m1, one, one, j - one, m1 + one), sq((J - m) * (J - m - 1) / (2 * J * (2 * J + 1))));
      }
      check(cg(j, m1, one, -one, j, m1 - one), sq((J + m) * (J - m + 1) / (2 * J * (J + 1))));
      check(cg(j, m1, one, zero, j, m1), SurdSum(m) * sq(1 / (J * (J + 1))));
      check(cg(j, m1, one, one, j, m1 + one), -sq((J - m) * (J + m + 1) / (2 * J * (J + 1))));
      check(cg(j, m1, one, -one, j + one, m1 - one), sq((J - m + 1) * (J - m + 2) / ((2 * J + 2) * (2 * J + 1))));
      check(cg(j, m1, one, zero, j + one, m1), sq((J - m + 1) * (J + m + 1) / ((J + 1) * (2 * J + 1))));
      check(cg(j, m1, one, one, j + one, m1 + one), sq((J + m + 1) * (J + m + 2) / ((2 * J + 2) * (2 * J + 1))));
    }
  }
  return {bad == 0, std::to_string(entries - bad) + "/" + std::to_string(entries) + " table entries equal"};
}

Outcome structure() {
  Outcome o;
  int n = 0;
  for (const auto& c : structure_verify(100, 7)) {
    ++n;
    if (!c.pass) {
      o.pass = false;
      if (o.detail.empty()) o.detail = "failed: " + c.name + " " + c.detail + "; ";
    }
  }
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> U(-3, 3);
  double worst = 0;
  for (int it = 0; it < 100; ++it) {
    cd z(U(rng), U(rng));
    double w = U(rng);
    auto f = iwasawa_group(z, w);
    worst = std::max(worst, (f.k * f.a * f.n - nbar_matrix(z, w)).max_abs());
  }
  o.pass = o.pass && worst <= 1e-10;
  o.detail += std::to_string(n) + " identity checks, reassembly max " + fmt("%.2e", worst) + " (tol 1e-10)";
  return o;
}

Outcome consistency() {
  Outcome o;
  long routes = 0, brackets = 0;
  for (int d = -6; d <= 6; ++d) {
    auto r = route_consistency(d, HalfInt(4));
    routes += r.checked;
    if (!r.pass) o.pass = false;
  }
  for (int d : {-3, 0, 2, 5}) {
    auto r = bracket_consistency(d, HalfInt(6));
    brackets += r.checked;
    if (!r.pass) {
      o.pass = false;
      if (!r.failures.empty()) o.detail += r.failures.front() + "; ";
    }
  }
  o.pass = o.pass && routes > 0 && brackets > 0;
  o.detail += std::to_string(routes) + " route checks (j <= 2, delta -6..6), " + std::to_string(brackets) +
              " bracket checks (jmax 3)";
  return o;
}

Outcome casimir() {
  Outcome o;
  const LambdaPoly L = LambdaPoly::lambda();
  for (int d = -4; d <= 4; ++d) {
    auto rep = casimir2_apply(d, HalfInt(4));
    Rational c0(d * d - 12, 36), c2(1, 12);
    c0.canonicalize();
    LambdaPoly want = LambdaPoly(CSurd(SurdSum(c0))) + LambdaPoly(CSurd(SurdSum(c2))) * L * L;
    if (!rep.pass || !(rep.value == want) || !(casimir2_poly(d) == want)) o.pass = false;
  }
  cd v = casimir2_scalar(0, 4);
  o.pass = o.pass && std::abs(v - cd(1, 0)) < 1e-12;
  o.detail = "formal scalar on jmax 2 for delta -4..4, value at (0,4) = " + fmt("%.15g", v.real());
  return o;
}

const std::vector<std::pair<long, long>> kSamples = {{0, 4}, {6, 2}, {6, -2}, {0, -4}, {-6, 2}, {-6, -2}};

Outcome decomposition() {
  Outcome o;
  long terms = 0;
  for (auto [d, l] : kSamples) {
    auto rep = verify_closure(d, l, 12);
    terms += rep.terms;
    if (!rep.pass) {
      o.pass = false;
      o.detail += "closure fails at (" + std::to_string(d) + "," + std::to_string(l) + "); ";
    }
  }
  std::string dims;
  for (auto [d, l, want] : std::vector<std::tuple<long, long, long>>{{0, 4, 8}, {0, -4, 8}, {2, 4, 6}}) {
    auto c = finite_dim_check(d, l);
    if (c.enumerated != want || c.weyl != want) o.pass = false;
    dims += " " + std::to_string(c.enumerated) + "/" + std::to_string(c.weyl);
  }
  o.detail += "closure k <= 12 on 6 samples (" + std::to_string(terms) + " terms), finite dims (enumerated/Weyl)" + dims;
  return o;
}

Outcome intertwining() {
  Outcome o;
  auto rel = [](cd a, cd b) { return std::abs(a - b) / std::abs(b); };
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> jd(0, 5), dd(-4, 4);
  std::uniform_real_distribution<double> ld(0.5, 6.0), im(-2.0, 2.0);
  double wsum = 0;
  int nsum = 0;
  for (int it = 0; it < 220; ++it) {
    HalfInt j(jd(rng));
    HalfInt m1(j.twice - 2 * std::uniform_int_distribution<int>(0, j.twice)(rng));
    int d = dd(rng);
    cd l(ld(rng), it < 200 ? 0.0 : im(rng));
    auto c = a_closed(j, m1, d, l);
    if (c.order != 0) continue;
    ++nsum;
    wsum = std::max(wsum, rel(a_gammasum(j, m1, d, l).value(), c.value()));
  }

  // rows whose closed value vanishes are compared against the largest row at the same character
  double wq = 0, woff = 0;
  int nq = 0;
  for (int d : {0, 1, 2})
    for (double lam : {2.0, 2.5, 3.5}) {
      double scale = 0;
      for (int jt = 0; jt <= 3; ++jt)
        for (HalfInt m : ms(HalfInt(jt))) scale = std::max(scale, std::abs(a_closed(HalfInt(jt), m, d, lam).value()));
      for (int jt = 0; jt <= 3; ++jt) {
        HalfInt j(jt);
        for (HalfInt m1 : ms(j)) {
          WignerIndex idx{j, HalfInt(3 * m1.twice - 2 * d), m1, m1};
          if (!idx.valid()) continue;
          cd c = a_closed(j, m1, d, lam).value();
          cd q = a_quadrature(idx, d, lam).value;
          wq = std::max(wq, std::abs(q - c) / std::max(std::abs(c), scale));
          ++nq;
          for (HalfInt m2 : ms(j)) {
            if (m2 == m1) continue;
            WignerIndex off{j, HalfInt(3 * m2.twice - 2 * d), m1, m2};
            if (!off.valid()) continue;
            woff = std::max(woff, std::abs(a_quadrature(off, d, lam).value) / scale);
          }
        }
      }
    }
  double spot = std::abs(a_quadrature({HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0)}, 0, 2.0).value - kPi * kPi / 8);
  o.pass = wsum <= 1e-10 && wq <= 1e-6 && spot <= 1e-8 && woff <= 1e-8 && nsum >= 200;
  o.detail = "closed/sum " + fmt("%.2e", wsum) + " on " + std::to_string(nsum) + " tuples, closed/quadrature " + fmt("%.2e", wq) +
             " on " + std::to_string(nq) + " rows, pi^2/8 off by " + fmt("%.1e", spot) + ", off-diagonal " + fmt("%.1e", woff);
  return o;
}

Outcome ledger() {
  Outcome o;
  for (auto [d, l] : kSamples) {
    bool reducible = chamber_classify(d, l).has_value();
    int hits = 0;
    for (int k = 0; k <= 12; ++k)
      for (int m = -k; m <= k; m += 2)
        if (a_closed(HalfInt(k), HalfInt(m), static_cast<int>(d), double(l)).order != 0) ++hits;
    if (!reducible || hits == 0) o.pass = false;
    o.detail += "(" + std::to_string(d) + "," + std::to_string(l) + "):" + std::to_string(hits) + " ";
  }
  o.detail += "rows with nonzero order, j <= 6";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Wigner little-d paths", wigner_paths},
      {"unitarity and multiplicativity", unitarity},
      {"Clebsch-Gordan tables", cg_tables},
      {"structure identities", structure},
      {"action route and bracket consistency", consistency},
      {"quadratic Casimir", casimir},
      {"decomposition closure and dimensions", decomposition},
      {"intertwining three paths", intertwining},
      {"zero/pole ledger", ledger},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("criterion %zu %-38s %s  %s [%.1fs]\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
