#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "su21/surd.hpp"

using namespace su21;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

SurdSum random_surd(std::mt19937& rng) {
  static const long radicands[] = {1, 2, 3, 5, 6, 7, 10, 15};
  std::uniform_int_distribution<int> nterms(0, 3), pick(0, 7), num(-9, 9), den(1, 6);
  SurdSum s;
  for (int t = nterms(rng); t > 0; --t) s += SurdSum::normalize(q(num(rng), den(rng)), Rational(radicands[pick(rng)]));
  return s;
}

}  // namespace

TEST_SUITE("surd") {
  TEST_CASE("normalize examples") {
    CHECK(SurdSum::normalize(1, 8) == SurdSum::normalize(2, 2));
    CHECK(SurdSum::normalize(1, 8).str() == "2*sqrt(2)");
    CHECK(SurdSum::normalize(1, q(9, 4)) == SurdSum(q(3, 2)));
    CHECK(SurdSum::normalize(1, 0).is_zero());
    CHECK(SurdSum::sqrt(q(1, 2)) == SurdSum::normalize(q(1, 2), 2));
    CHECK_THROWS_AS(SurdSum::normalize(1, -3), DomainError);
  }

  TEST_CASE("radicands square-free and no zero coefficients") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
      SurdSum s = random_surd(rng) * random_surd(rng);
      for (const auto& [r, c] : s.terms()) {
        CHECK(c != 0);
        BigInt sq, rest;
        squarefree_split(r, sq, rest);
        CHECK(sq == 1);
        CHECK(rest == r);
      }
    }
  }

  TEST_CASE("add and mul examples") {
    CHECK(SurdSum::sqrt(2) + SurdSum::sqrt(2) == SurdSum::normalize(2, 2));
    CHECK(SurdSum::sqrt(6) * SurdSum::sqrt(10) == SurdSum::normalize(2, 15));
    SurdSum a = SurdSum(1) + SurdSum::sqrt(2), b = SurdSum(1) - SurdSum::sqrt(2);
    CHECK(a * b == SurdSum(-1));
    CHECK(SurdSum::normalize(3, 5).inverse() == SurdSum::normalize(q(1, 15), 5));
    CHECK_THROWS(a.inverse());
  }

  TEST_CASE("eval examples") {
    CHECK(SurdSum::normalize(2, 2).eval() == 2.8284271247461903);
    CHECK(SurdSum().eval() == 0.0);
    CHECK(SurdSum(q(3, 2)).eval() == 1.5);
    CHECK(SurdSum::sqrt(2).eval(53) == std::sqrt(2.0));
    CHECK(SurdSum::sqrt(q(1, 3)).eval(200) == 0.5773502691896257);
    CHECK(SurdSum::sqrt(3).eval() == std::sqrt(3.0));
    CHECK(SurdSum::sqrt(q(2, 3)).eval() == 0.816496580927726);
  }

  TEST_CASE("text round trip") {
    CHECK(SurdSum::parse("3/2*sqrt(5) + 1/4") == SurdSum::normalize(q(3, 2), 5) + SurdSum(q(1, 4)));
    CHECK(SurdSum::parse("-sqrt(8)") == SurdSum::normalize(-2, 2));
    CHECK(SurdSum::parse("0").is_zero());
    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
      SurdSum s = random_surd(rng);
      CHECK(SurdSum::parse(s.str()) == s);
    }
    CSurd z(SurdSum::sqrt(3), SurdSum(q(-1, 2)));
    CHECK(CSurd::parse(z.str()) == z);
  }

  TEST_CASE("normalize is idempotent") {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
      SurdSum s = random_surd(rng);
      Rational c;
      BigInt r;
      if (s.single_term(c, r)) {
        SurdSum again = SurdSum::normalize(c, Rational(r));
        CHECK(again == s);
        Rational c2;
        BigInt r2;
        REQUIRE(again.single_term(c2, r2));
        CHECK(SurdSum::normalize(c2, Rational(r2)) == again);
      }
      // rewriting under the root: c*sqrt(r) = sqrt(c^2 r) for c > 0
      Rational num(std::uniform_int_distribution<int>(1, 40)(rng), std::uniform_int_distribution<int>(1, 40)(rng));
      num.canonicalize();
      SurdSum x = SurdSum::sqrt(num);
      REQUIRE(x.single_term(c, r));
      CHECK(SurdSum::sqrt(c * c * Rational(r)) == x);
      CHECK(x * x == SurdSum(num));
    }
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 300; ++it) {
      SurdSum a = random_surd(rng), b = random_surd(rng), c = random_surd(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK(a * SurdSum(1) == a);
    }
  }

  TEST_CASE("eval is additive within 4 ulp") {
    std::mt19937 rng(99);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < 500; ++it) {
      SurdSum a = random_surd(rng), b = random_surd(rng);
      double ea = a.eval(), eb = b.eval(), es = (a + b).eval();
      CHECK(std::abs(es - (ea + eb)) <= 4 * eps * std::max({std::abs(ea), std::abs(eb), std::abs(es)}));
    }
  }

  TEST_CASE("HalfInt") {
    CHECK(HalfInt::parse("3/2").twice == 3);
    CHECK(HalfInt::parse("-1").twice == -2);
    CHECK(HalfInt::parse("0.5").twice == 1);
    CHECK(HalfInt::parse("-5/2").str() == "-5/2");
    CHECK_THROWS(HalfInt::parse("1/3"));
    CHECK_THROWS(HalfInt::parse("x"));
    CHECK(same_parity(HalfInt(3), HalfInt(-1)));
    CHECK_FALSE(same_parity(HalfInt(3), HalfInt(2)));
    CHECK(HalfInt(4).as_int() == 2);
    CHECK_THROWS(HalfInt(3).as_int());
  }

  TEST_CASE("LambdaPoly examples") {
    const LambdaPoly L = LambdaPoly::lambda();
    CHECK((L + LambdaPoly(2)) + (-L) == LambdaPoly(2));
    LambdaPoly p = (L + LambdaPoly(2)) * (L - LambdaPoly(2));
    CHECK(p == L * L - LambdaPoly(4));
    CHECK(p.degree() == 2);
    CHECK(p.at(4) == CSurd(12));
    CHECK(p.eval_at(4.0) == std::complex<double>(12.0, 0.0));
    CHECK(LambdaPoly().degree() == -1);
    CHECK_THROWS_AS(p * L, DegreeOverflow);
    LambdaPoly q2(CSurd::I(), CSurd(SurdSum::sqrt(2)));
    auto v = q2.eval_at({1.0, 1.0});
    CHECK(v.real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(v.imag() == doctest::Approx(1 + std::sqrt(2.0)));
  }

  TEST_CASE("CSurd arithmetic") {
    CSurd i = CSurd::I();
    CHECK(i * i == CSurd(-1));
    CSurd z(SurdSum(1), SurdSum::sqrt(3));
    CHECK(z * z.conj() == CSurd(4));
    CHECK(z * z.inverse() == CSurd(1));
  }
}
