#include <doctest.h>

#include <random>
#include <set>

#include "su21/action.hpp"
#include "su21/decomposition.hpp"

using namespace su21;

namespace {

WignerIndex W(int j, int n, int m1, int m2) { return {HalfInt(j), HalfInt(n), HalfInt(m1), HalfInt(m2)}; }

const CSurd kI = CSurd::I();
const LambdaPoly L = LambdaPoly::lambda();

LambdaPoly lin(const Rational& c0, const Rational& c1) {
  return LambdaPoly(CSurd(SurdSum(c0)), CSurd(SurdSum(c1)));
}

Vec to_vec(const std::vector<ActionTerm>& ts) {
  Vec v;
  for (const auto& t : ts) accumulate(v, Vec{{t.target, t.coeff}});
  return v;
}

const Gen kP[4] = {Gen::Va2, Gen::Va12, Gen::Vma2, Gen::Vma12};

}  // namespace

TEST_SUITE("action") {
  TEST_CASE("K-type enumeration") {
    std::set<std::pair<int, int>> got, want{{0, 0}, {1, 3}, {1, -3}, {2, 0}, {2, 6}, {2, -6}};
    for (const auto& t : ktype_set(0, HalfInt(2))) got.insert({t.j.twice, t.n.twice});
    CHECK(got == want);
    CHECK(lattice_of({HalfInt(2), HalfInt(0)}, 0) == std::pair<int, int>{2, 0});

    for (int delta = -5; delta <= 5; ++delta) {
      std::set<std::pair<int, int>> pts;
      for (const auto& t : ktype_set(delta, HalfInt(8))) {
        HalfInt m2 = t.m2(delta);
        CHECK(std::abs(m2.twice) <= t.j.twice);
        CHECK(same_parity(m2, t.j));
        CHECK(3 * m2.twice - t.n.twice == 2 * delta);
        int hits = 0;
        for (int m = -t.j.twice; m <= t.j.twice; m += 2)
          if (in_principal_series({t.j, t.n, t.j, HalfInt(m)}, delta)) ++hits;
        CHECK(hits == 1);
        auto kl = lattice_of(t, delta);
        CHECK(ktype_of_lattice(kl.first, kl.second, delta) == t);
        pts.insert(kl);
      }
      std::set<std::pair<int, int>> cone;
      for (int k = 0; k <= 8; ++k)
        for (int l = -k; l <= k; l += 2) cone.insert({k, l});
      CHECK(pts == cone);
    }
  }

  TEST_CASE("InductionChar") {
    CHECK(InductionChar::exact(0, 4).lambda_int() == 4);
    CHECK(InductionChar::exact(2, 4).integral);
    CHECK_FALSE(InductionChar::exact(1, 4).integral);
    CHECK_THROWS(InductionChar::exact(1, 4).lambda_int());
    CHECK_THROWS(InductionChar::numeric(0, {2.5, 0}).lambda_int());
  }

  TEST_CASE("dl of noncompact weight vectors") {
    // q-factor sqrt(j - m2) vanishes on the j0 = -1/2 target
    auto t = dl_valpha(Gen::Va12, W(1, 3, 1, 1), 0);
    for (const auto& x : t) CHECK(x.target.j == HalfInt(2));

    std::set<int> ns;
    for (Gen v : kP) {
      auto terms = dl_valpha(v, W(0, 0, 0, 0), 0);
      CHECK(terms.size() == 1);
      for (const auto& x : terms) {
        CHECK(x.target.j == HalfInt(1));
        ns.insert(x.target.n.twice);
      }
      CHECK(vec_equal(to_vec(terms), to_vec(dl_valpha(v, W(0, 0, 0, 0), 0, Route::before_cg))));
    }
    CHECK(ns == std::set<int>{-3, 3});

    CHECK_THROWS_AS(dl_valpha(Gen::Va2, W(0, 0, 0, 0), 1), DomainError);

    for (int delta = -3; delta <= 3; ++delta)
      for (const auto& src : basis_indices(delta, HalfInt(6)))
        for (Gen v : kP) {
          auto terms = dl_valpha(v, src, delta);
          CHECK(terms.size() <= 2);
          for (const auto& x : terms) {
            CHECK(std::abs(x.target.j.twice - src.j.twice) == 1);
            CHECK(in_principal_series(x.target, delta));
            CHECK(x.coeff.degree() <= 1);
          }
        }
  }

  TEST_CASE("tables agree with the unsimplified route for j <= 2") {
    for (int delta = -6; delta <= 6; ++delta) {
      auto rep = route_consistency(delta, HalfInt(4));
      INFO("delta " << delta);
      CHECK(rep.pass);
      CHECK(rep.checked > 0);
    }
  }

  TEST_CASE("compact left action") {
    auto g3 = dl_k(KGen::gamma3, W(2, 0, 2, 0));
    REQUIRE(g3.size() == 1);
    CHECK(g3[0].target == W(2, 0, 2, 0));
    CHECK(g3[0].coeff == LambdaPoly(kI));
    auto g0 = dl_k(KGen::gamma0, W(1, 3, 1, 1));
    CHECK(g0[0].coeff == LambdaPoly(kI * CSurd(SurdSum(Rational(3, 2)))));
    CHECK(dl_k(KGen::raise, W(2, 0, 2, 0)).empty());
    CHECK(dl_k(KGen::lower, W(2, 0, -2, 0)).empty());

    auto up = dl_k(KGen::raise, W(2, 0, 0, 0));
    REQUIRE(up.size() == 1);
    auto back = dl_k(KGen::lower, up[0].target);
    REQUIRE(back.size() == 1);
    CHECK(back[0].target == W(2, 0, 0, 0));
    CHECK(up[0].coeff * back[0].coeff == LambdaPoly(-2));
  }

  TEST_CASE("right actions") {
    for (const auto& src : basis_indices(1, HalfInt(4))) {
      auto a = dr_ops(RGen::a, src);
      REQUIRE(a.size() == 1);
      CHECK(a[0].target == src);
      CHECK(a[0].coeff == lin(-2, -1));
    }
    CHECK(dr_ops(RGen::va2, W(2, 0, 0, 2)).empty());
    auto s = dr_ops(RGen::va12, W(1, 3, 1, 1));
    REQUIRE(s.size() == 1);
    CHECK(s[0].coeff == lin(-2, Rational(-1, 2)));
    auto m = dr_ops(RGen::vma2, W(2, 0, 0, 2));
    REQUIRE(m.size() == 1);
    CHECK(m[0].target == W(2, 0, 0, 0));
    CHECK(m[0].coeff == LambdaPoly(CSurd(SurdSum::sqrt(2) * SurdSum(-1))));
  }

  TEST_CASE("operator matrices") {
    auto id = operator_matrix(parse_program("id"), 0, HalfInt(3), 2);
    for (const auto& [src, row] : id.rows) CHECK(vec_equal(row, Vec{{src, LambdaPoly(1)}}));
    CHECK(id.leaking.empty());

    auto one = operator_matrix(parse_program("v(a2)"), 1, HalfInt(3));
    for (const auto& [src, row] : one.rows) {
      CHECK(row.size() <= 2);
      CHECK(one.leaking.count(src) == (src.j == HalfInt(3) && !row.empty() ? 1u : 0u));
    }

    // [dl(v(a2)), dl(v(-a2))] = dl([v(a2), v(-a2)]) on interior rows
    for (int delta : {-2, 0, 3}) {
      auto ab = operator_matrix(parse_program("v(a2)*v(-a2)"), delta, HalfInt(4), 3);
      auto ba = operator_matrix(parse_program("v(-a2)*v(a2)"), delta, HalfInt(4));
      Matrix3X br = bracket(basis_matrix(Gen::Va2), basis_matrix(Gen::Vma2));
      for (const auto& [src, row] : ab.rows) {
        if (src.j.twice > 6) continue;
        Vec diff = row;
        accumulate(diff, scale(LambdaPoly(-1), ba.rows.at(src)));
        CHECK(vec_equal(diff, apply_dl(br, Vec{{src, LambdaPoly(1)}}, delta)));
      }
    }

    auto serial = operator_matrix(parse_program("v(a12)*v(-a2)*U1"), 2, HalfInt(3), 1);
    auto parallel = operator_matrix(parse_program("v(a12)*v(-a2)*U1"), 2, HalfInt(3), 4);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (const auto& [src, row] : serial.rows) CHECK(vec_equal(row, parallel.rows.at(src)));
    CHECK(serial.leaking == parallel.leaking);

    CHECK_THROWS_AS(parse_program("v(a3)"), DomainError);
    CHECK_THROWS_AS(parse_program("v(a2)**U1"), DomainError);
  }

  TEST_CASE("bracket consistency") {
    for (int delta : {-3, 0, 1, 4}) {
      auto rep = bracket_consistency(delta, HalfInt(4));
      INFO("delta " << delta << (rep.failures.empty() ? "" : " " + rep.failures.front()));
      CHECK(rep.pass);
      CHECK(rep.checked > 0);
    }
  }

  TEST_CASE("quadratic Casimir") {
    CHECK(casimir2_scalar(0, 4) == cd(1, 0));
    CHECK(std::abs(casimir2_scalar(0, 2)) == 0.0);
    for (int delta : {-2, 0, 1, 3}) {
      auto rep = casimir2_apply(delta, HalfInt(4));
      INFO("delta " << delta);
      CHECK(rep.pass);
      Rational c0(3 * -4 + delta * delta, 36);
      c0.canonicalize();
      CHECK(rep.value == LambdaPoly(CSurd(SurdSum(c0))) + LambdaPoly(CSurd(SurdSum(Rational(1, 12)))) * L * L);
      CHECK(rep.value == casimir2_poly(delta));
    }
    CHECK(casimir2_poly(0).at(4) == CSurd(1));
    // the 1/18 root coefficient does not give a scalar
    CHECK_FALSE(casimir2_apply(0, HalfInt(3), Rational(1, 18)).pass);
  }

  TEST_CASE("cubic Casimir character values") {
    for (double l : {-3.0, 0.5, 2.0, 7.0}) CHECK(std::abs(casimir3_scalar(3, l)) < 1e-15);
    CHECK(std::abs(casimir3_hc(3, 1.7)) < 1e-15);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-9, 9);
    bool closed_form_invariant = true;
    for (int it = 0; it < 50; ++it) {
      int delta = d(rng);
      long lambda = delta + 2 * d(rng);
      for (Reflection w : {Reflection::a1, Reflection::a2}) {
        auto r = weyl_reflect(w, Rational(delta), Rational(lambda));
        REQUIRE(r.delta.get_den() == 1);
        int rd = static_cast<int>(r.delta.get_d());
        cd rl = r.lambda.get_d();
        CHECK(std::abs(casimir2_scalar(rd, rl) - casimir2_scalar(delta, double(lambda))) < 1e-12);
        CHECK(std::abs(casimir3_hc(rd, rl) - casimir3_hc(delta, double(lambda))) < 1e-12);
        if (std::abs(casimir3_scalar(rd, rl) - casimir3_scalar(delta, double(lambda))) > 1e-12) closed_form_invariant = false;
      }
    }
    CHECK_FALSE(closed_form_invariant);
  }
}
