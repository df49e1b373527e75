#include <doctest.h>

#include <random>

#include "su21/decomposition.hpp"

using namespace su21;

namespace {

struct Sample {
  long delta, lambda;
  Chamber c;
};

const Sample kSamples[] = {
    {0, 4, Chamber::I1},  {6, 2, Chamber::II1},   {6, -2, Chamber::II2},
    {0, -4, Chamber::I2}, {-6, 2, Chamber::III1}, {-6, -2, Chamber::III2},
};

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// lowest (j, n) of each subquotient, as exact rationals
struct JN {
  Rational j, n;
};

KType ktype(const JN& x) {
  Rational j2 = 2 * x.j, n2 = 2 * x.n;
  REQUIRE(j2.get_den() == 1);
  REQUIRE(n2.get_den() == 1);
  return {HalfInt(static_cast<int>(j2.get_num().get_si())), HalfInt(static_cast<int>(n2.get_num().get_si()))};
}

std::vector<std::pair<Sub, JN>> legend(Chamber c, long d, long l) {
  const Rational D(d), L(l);
  const JN bottom{0, -D};
  switch (c) {
    case Chamber::I1:
      return {{Sub::V_fin, bottom},
              {Sub::Q_plus, {(L + D) / 4, (3 * L - D) / 4}},
              {Sub::Q_minus, {(L - D) / 4, (-3 * L - D) / 4}},
              {Sub::V_H, {L / 2, D / 2}}};
    case Chamber::I2:
      return {{Sub::V_fin, bottom},
              {Sub::Q_plus, {-(L - D) / 4, -(3 * L + D) / 4}},
              {Sub::Q_minus, {-(L + D) / 4, -(-3 * L + D) / 4}},
              {Sub::V_H, {-L / 2, D / 2}}};
    case Chamber::II1:
      return {{Sub::V_disc_minus, bottom}, {Sub::Q_minus, {(-L + D) / 4, (-3 * L - D) / 4}}, {Sub::V_H, {(L + D) / 4, (3 * L - D) / 4}}};
    case Chamber::II2:
      return {{Sub::V_disc_minus, bottom}, {Sub::Q_minus, {(L + D) / 4, (3 * L - D) / 4}}, {Sub::V_H, {(-L + D) / 4, (-3 * L - D) / 4}}};
    case Chamber::III1:
      return {{Sub::V_disc_plus, bottom}, {Sub::Q_plus, {(-L - D) / 4, (3 * L - D) / 4}}, {Sub::V_H, {(L - D) / 4, (-3 * L - D) / 4}}};
    case Chamber::III2:
      return {{Sub::V_disc_plus, bottom}, {Sub::Q_plus, {(L - D) / 4, (-3 * L - D) / 4}}, {Sub::V_H, {(-L - D) / 4, (3 * L - D) / 4}}};
  }
  return {};
}

// chambers straight from the sign conditions on lambda, lambda + delta, lambda - delta
std::optional<Chamber> chamber_oracle(long d, long l) {
  if ((l + d) % 2 != 0 || l == 0) return std::nullopt;
  const long p = l + d, m = l - d;
  if (m >= 2 && p >= 2) return Chamber::I1;
  if (m <= -2 && p <= -2) return Chamber::I2;
  if (l > 0 && m <= -2) return Chamber::II1;
  if (l < 0 && p >= 2) return Chamber::II2;
  if (l > 0 && p <= -2) return Chamber::III1;
  if (l < 0 && m >= 2) return Chamber::III2;
  return std::nullopt;
}

long weyl_dim(long a, long b) { return (a + 1) * (b + 1) * (a + b + 2) / 2; }

}  // namespace

TEST_SUITE("decomposition") {
  TEST_CASE("simple reflections") {
    auto r = weyl_reflect(Reflection::a1, 0, 4);
    CHECK(r.delta == -6);
    CHECK(r.lambda == 2);
    r = weyl_reflect(Reflection::a2, 0, 4);
    CHECK(r.delta == 6);
    CHECK(r.lambda == 2);
    CHECK_FALSE(weyl_reflect(Reflection::a1, 1, 2).integral());
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> u(-50, 50);
    for (int it = 0; it < 100; ++it) {
      Rational d = q(u(rng), 3), l = q(u(rng), 7);
      for (Reflection w : {Reflection::a1, Reflection::a2}) {
        auto once = weyl_reflect(w, d, l);
        auto twice = weyl_reflect(w, once.delta, once.lambda);
        CHECK(twice.delta == d);
        CHECK(twice.lambda == l);
      }
      // braid relation of A2
      auto b1 = weyl_word(parse_word("a1 a2 a1"), d, l), b2 = weyl_word(parse_word("a2 a1 a2"), d, l);
      CHECK(b1.delta == b2.delta);
      CHECK(b1.lambda == b2.lambda);
    }
    CHECK(parse_word("w1*wa2,a1").size() == 3);
    CHECK_THROWS_AS(parse_word("a3"), DomainError);
  }

  TEST_CASE("chamber classification") {
    CHECK(chamber_classify(0, 4) == Chamber::I1);
    CHECK(chamber_classify(6, 2) == Chamber::II1);
    CHECK(chamber_classify(-6, -2) == Chamber::III2);
    CHECK_FALSE(chamber_classify(0, 1).has_value());
    CHECK_FALSE(chamber_classify(2, 0).has_value());
    CHECK_FALSE(chamber_classify(1, 1).has_value());
    for (long d = -20; d <= 20; ++d)
      for (long l = -20; l <= 20; ++l) CHECK(chamber_classify(d, l) == chamber_oracle(d, l));
    for (const auto& s : kSamples) CHECK(chamber_classify(s.delta, s.lambda) == s.c);
  }

  TEST_CASE("chamber words send every sample to (0, 4)") {
    for (const auto& s : kSamples) {
      auto r = weyl_word(chamber_word(s.c), s.delta, s.lambda);
      CHECK(r.delta == 0);
      CHECK(r.lambda == 4);
    }
    CHECK(chamber_word(Chamber::I1).empty());
    // and any character of a chamber lands in I1
    for (long d = -14; d <= 14; ++d)
      for (long l = -14; l <= 14; ++l) {
        auto c = chamber_classify(d, l);
        if (!c) continue;
        auto r = weyl_word(chamber_word(*c), d, l);
        REQUIRE(r.integral());
        CHECK(chamber_classify(r.delta.get_num().get_si(), r.lambda.get_num().get_si()) == Chamber::I1);
      }
  }

  TEST_CASE("subquotient K-types") {
    std::set<LatticePoint> want{{0, 0}, {1, -1}, {1, 1}, {2, 0}};
    CHECK(subquotient_ktypes(Sub::V_fin, 0, 4, 12) == want);
    auto low = lowest_ktype(Sub::V_disc_minus, 6, 2, 12);
    REQUIRE(low);
    CHECK(ktype_of_lattice(low->k, low->l, 6) == KType{HalfInt(0), HalfInt(-12)});
    for (Sub s : {Sub::Q_plus, Sub::Q_minus}) {
      auto p = lowest_ktype(s, 0, 4, 12);
      REQUIRE(p);
      KType t = ktype_of_lattice(p->k, p->l, 0);
      CHECK(t.j == HalfInt(2));
      CHECK(t.n == HalfInt(s == Sub::Q_plus ? 6 : -6));
    }
    CHECK_THROWS_AS(in_sub(Sub::V_disc_plus, 0, 0, 0, 4), DomainError);
    CHECK_THROWS_AS(subquotient_ktypes(Sub::V_fin, 6, 2, 4), DomainError);
  }

  TEST_CASE("subquotients partition the lattice") {
    for (long d = -16; d <= 16; ++d)
      for (long l = -16; l <= 16; ++l) {
        auto c = chamber_classify(d, l);
        if (!c) continue;
        for (int kmax : {0, 5, 16}) {
          std::set<LatticePoint> all;
          std::size_t total = 0;
          for (Sub s : chamber_subs(*c)) {
            auto pts = subquotient_ktypes(s, d, l, kmax);
            total += pts.size();
            all.insert(pts.begin(), pts.end());
            for (const auto& p : pts) CHECK(region_of(p.k, p.l, d, l) == s);
          }
          std::size_t cone = std::size_t(kmax + 1) * (kmax + 2) / 2;
          CHECK(total == cone);
          CHECK(all.size() == cone);
        }
      }
  }

  TEST_CASE("lowest K-types of the subquotients") {
    for (long d = -12; d <= 12; ++d)
      for (long l = -12; l <= 12; ++l) {
        auto c = chamber_classify(d, l);
        if (!c) continue;
        for (const auto& [s, jn] : legend(*c, d, l)) {
          auto p = lowest_ktype(s, d, l, 40);
          INFO(chamber_name(*c) << " (" << d << "," << l << ") " << sub_name(s));
          REQUIRE(p);
          CHECK(ktype_of_lattice(p->k, p->l, static_cast<int>(d)) == ktype(jn));
        }
      }
  }

  TEST_CASE("I2 quotient j entries with lambda + delta and lambda - delta exchanged leave the cone") {
    bool outside = false;
    for (long d = -12; d <= 12; ++d)
      for (long l = -12; l <= 12; ++l) {
        if (chamber_classify(d, l) != Chamber::I2) continue;
        const Rational D(d), L(l);
        for (const JN& jn : {JN{-(L + D) / 4, -(3 * L + D) / 4}, JN{-(L - D) / 4, -(-3 * L + D) / 4}}) {
          auto kl = lattice_of(ktype(jn), static_cast<int>(d));
          if (std::abs(kl.second) > kl.first) outside = true;
        }
      }
    CHECK(outside);
  }

  TEST_CASE("composition series") {
    auto members = [](const CompositionSeries& cs) {
      std::vector<std::set<Sub>> out;
      for (const auto& lv : cs.levels) out.push_back(lv.members);
      return out;
    };
    auto i1 = composition_series(0, 4);
    CHECK(i1.chamber == Chamber::I1);
    CHECK(members(i1) == std::vector<std::set<Sub>>{{Sub::V_H}, {Sub::V_H, Sub::Q_plus, Sub::Q_minus}});
    CHECK(members(composition_series(0, -4)) ==
          std::vector<std::set<Sub>>{{Sub::V_fin}, {Sub::V_fin, Sub::Q_plus, Sub::Q_minus}});
    CHECK(members(composition_series(-6, 2)) == std::vector<std::set<Sub>>{{Sub::V_H, Sub::V_disc_plus}});
    CHECK(members(composition_series(6, 2)) == std::vector<std::set<Sub>>{{Sub::V_H, Sub::V_disc_minus}});
    CHECK(members(composition_series(6, -2)) == std::vector<std::set<Sub>>{{Sub::Q_minus}});
    CHECK(members(composition_series(-6, -2)) == std::vector<std::set<Sub>>{{Sub::Q_plus}});
    CHECK_THROWS(composition_series(0, 1));
    for (const auto& s : kSamples)
      for (const auto& lv : composition_series(s.delta, s.lambda).levels) CHECK_FALSE(lv.quotient.empty());
  }

  TEST_CASE("closure on the sample characters") {
    for (const auto& s : kSamples) {
      auto rep = verify_closure(s.delta, s.lambda, 12);
      INFO(chamber_name(s.c) << (rep.counterexamples.empty() ? "" : " " + rep.counterexamples.front()));
      CHECK(rep.pass);
      CHECK(rep.sources > 0);
      CHECK(rep.terms > 0);
    }
    for (auto [d, l] : std::vector<std::pair<long, long>>{{2, 4}, {4, -6}, {3, 7}, {8, 2}, {-8, -4}, {1, -9}})
      CHECK(verify_closure(d, l, 10).pass);
  }

  TEST_CASE("closure rejects a wrong filtration") {
    // V_fin is a quotient in I1, not a submodule
    CompositionSeries wrong{Chamber::I1, {{{Sub::V_fin}, "rest"}}};
    auto rep = verify_closure(wrong, 0, 4, 8);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.counterexamples.empty());
    // the I2 series applied to an I2 point with the roles of V_fin and V_H swapped
    CompositionSeries swapped{Chamber::I2, {{{Sub::V_H}, "rest"}}};
    CHECK_FALSE(verify_closure(swapped, 0, -4, 8).pass);
    CompositionSeries q{Chamber::II1, {{{Sub::Q_minus}, "rest"}}};
    CHECK_FALSE(verify_closure(q, 6, 2, 8).pass);
  }

  TEST_CASE("finite-dimensional subquotient") {
    auto c = finite_dim_check(0, 4);
    CHECK(c.enumerated == 8);
    CHECK(c.weyl == 8);
    CHECK(finite_dim_check(2, 4).enumerated == 6);
    CHECK(finite_dim_check(0, -4).enumerated == 8);
    CHECK(finite_dim_check(3, 7).enumerated == 35);
    CHECK(finite_dim_check(4, -6).enumerated == 15);
    for (long d = -12; d <= 12; ++d)
      for (long l = -12; l <= 12; ++l) {
        auto ch = chamber_classify(d, l);
        if (ch != Chamber::I1 && ch != Chamber::I2) continue;
        auto r = finite_dim_check(d, l);
        long a = ch == Chamber::I1 ? (l + d) / 2 - 1 : (-l - d) / 2 - 1, b = ch == Chamber::I1 ? (l - d) / 2 - 1 : (d - l) / 2 - 1;
        CHECK(r.weyl == weyl_dim(a, b));
        CHECK(r.pass());
      }
    CHECK_THROWS(finite_dim_check(6, 2));
  }
}
