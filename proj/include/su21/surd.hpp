#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace su21 {

using Rational = mpq_class;
using BigInt = mpz_class;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// 2x the value, so j, m and n stay integral.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int twice_) : twice(twice_) {}
  static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }
  static HalfInt parse(const std::string& s);  // "3/2", "-1", "0.5"

  constexpr bool is_integer() const { return twice % 2 == 0; }
  double value() const { return twice / 2.0; }
  Rational rational() const;
  int as_int() const;  // throws if not integral
  std::string str() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
  constexpr auto operator<=>(const HalfInt&) const = default;
};

constexpr HalfInt operator""_h(unsigned long long twice) { return HalfInt(static_cast<int>(twice)); }

// true iff a - b is an integer
constexpr bool same_parity(HalfInt a, HalfInt b) { return ((a.twice - b.twice) % 2) == 0; }

// Finite sum  sum_r c_r sqrt(r)  over square-free r >= 1.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(long v) : SurdSum(Rational(v)) {}  // NOLINT
  SurdSum(const Rational& q);                // NOLINT

  static SurdSum normalize(const Rational& coef, const Rational& radicand);
  static SurdSum sqrt(const Rational& radicand) { return normalize(Rational(1), radicand); }
  static SurdSum parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;
  // single-term value c*sqrt(r); returns false for sums of several radicands
  bool single_term(Rational& coef, BigInt& radicand) const;
  const std::map<BigInt, Rational>& terms() const { return terms_; }

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  SurdSum& operator*=(const SurdSum& o);
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
  friend bool operator==(const SurdSum& a, const SurdSum& b) { return a.terms_ == b.terms_; }

  // exact inverse; only for single-term values
  SurdSum inverse() const;
  SurdSum operator/(const SurdSum& o) const { return *this * o.inverse(); }

  // rounded to double from a computation carried at `bits` of precision
  double eval(unsigned bits = 64) const;
  std::string str() const;

 private:
  std::map<BigInt, Rational> terms_;
};

// Square-free decomposition n = s^2 * r.
void squarefree_split(const BigInt& n, BigInt& s, BigInt& r);

// re + i*im with SurdSum parts.
struct CSurd {
  SurdSum re, im;

  CSurd() = default;
  CSurd(const SurdSum& r) : re(r) {}  // NOLINT
  CSurd(long v) : re(v) {}            // NOLINT
  CSurd(SurdSum r, SurdSum i) : re(std::move(r)), im(std::move(i)) {}
  static CSurd I() { return CSurd(SurdSum(), SurdSum(1)); }
  static CSurd parse(const std::string& text);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CSurd conj() const { return {re, -im}; }
  CSurd operator-() const { return {-re, -im}; }
  CSurd& operator+=(const CSurd& o) { re += o.re; im += o.im; return *this; }
  CSurd& operator-=(const CSurd& o) { re -= o.re; im -= o.im; return *this; }
  friend CSurd operator+(CSurd a, const CSurd& b) { return a += b; }
  friend CSurd operator-(CSurd a, const CSurd& b) { return a -= b; }
  friend CSurd operator*(const CSurd& a, const CSurd& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  CSurd& operator*=(const CSurd& o) { return *this = *this * o; }
  friend bool operator==(const CSurd& a, const CSurd& b) { return a.re == b.re && a.im == b.im; }
  // exact inverse when |z|^2 is a single-term surd
  CSurd inverse() const;

  std::complex<double> eval() const { return {re.eval(), im.eval()}; }
  std::string str() const;
};

struct DegreeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// c0 + c1*lambda + c2*lambda^2, exact.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(const CSurd& c0) { c_[0] = c0; }  // NOLINT
  LambdaPoly(long v) { c_[0] = CSurd(v); }     // NOLINT
  LambdaPoly(const CSurd& c0, const CSurd& c1) { c_[0] = c0; c_[1] = c1; }
  static LambdaPoly lambda() { return LambdaPoly(CSurd(), CSurd(1)); }

  int degree() const;  // -1 for zero
  bool is_zero() const { return degree() < 0; }
  const CSurd& coef(int k) const { return c_.at(k); }

  LambdaPoly operator-() const;
  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c_ == b.c_; }

  std::complex<double> eval_at(std::complex<double> lambda) const;
  // exact value at an integer lambda
  CSurd at(long lambda) const;
  std::string str() const;

 private:
  std::array<CSurd, 3> c_;
};

}  // namespace su21
