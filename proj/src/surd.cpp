#include "su21/surd.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace su21 {

HalfInt HalfInt::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      int num = std::stoi(s.substr(0, slash));
      int den = std::stoi(s.substr(slash + 1));
      if (den == 1) return HalfInt(2 * num);
      if (den == 2) return HalfInt(num);
      throw DomainError("not a half-integer: " + s);
    }
    if (s.find('.') != std::string::npos) {
      double v = std::stod(s);
      double t = 2 * v;
      if (t != static_cast<double>(static_cast<long>(t))) throw DomainError("not a half-integer: " + s);
      return HalfInt(static_cast<int>(t));
    }
    return HalfInt(2 * std::stoi(s));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a half-integer: " + s);
  }
}

Rational HalfInt::rational() const {
  Rational q(twice, 2);
  q.canonicalize();
  return q;
}

int HalfInt::as_int() const {
  if (!is_integer()) throw DomainError("half-integer where integer expected: " + str());
  return twice / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

void squarefree_split(const BigInt& n, BigInt& s, BigInt& r) {
  if (n < 0) throw DomainError("negative radicand");
  s = 1;
  r = 1;
  if (n == 0) {
    s = 0;
    return;
  }
  BigInt m = n;
  auto strip = [&](unsigned long p) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) r *= p;
  };
  strip(2);
  for (unsigned long p = 3;; p += 2) {
    BigInt cube = BigInt(p) * p * p;
    if (cube > m) break;
    strip(p);
  }
  // m has no prime factor below its cube root: m is 1, p, p^2 or p*q
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
      s *= root;
    } else {
      r *= m;
    }
  }
}

SurdSum::SurdSum(const Rational& q) {
  if (q != 0) terms_[BigInt(1)] = q;
}

SurdSum SurdSum::normalize(const Rational& coef, const Rational& radicand) {
  if (radicand < 0) throw DomainError("negative radicand");
  SurdSum out;
  if (coef == 0 || radicand == 0) return out;
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt pq = radicand.get_num() * radicand.get_den();
  BigInt s, r;
  squarefree_split(pq, s, r);
  Rational c = coef * Rational(s) / Rational(radicand.get_den());
  c.canonicalize();
  out.terms_[r] = c;
  return out;
}

bool SurdSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdSum::rational_part() const {
  auto it = terms_.find(BigInt(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

bool SurdSum::single_term(Rational& coef, BigInt& radicand) const {
  if (terms_.empty()) {
    coef = 0;
    radicand = 1;
    return true;
  }
  if (terms_.size() != 1) return false;
  radicand = terms_.begin()->first;
  coef = terms_.begin()->second;
  return true;
}

SurdSum SurdSum::operator-() const {
  SurdSum out = *this;
  for (auto& [r, c] : out.terms_) c = -c;
  return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [r, c] : o.terms_) {
    auto it = terms_.find(r);
    if (it == terms_.end()) {
      terms_.emplace(r, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) { return *this += -o; }

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      // sqrt(ra)*sqrt(rb) = g*sqrt(ra*rb/g^2), g = gcd
      BigInt g;
      mpz_gcd(g.get_mpz_t(), ra.get_mpz_t(), rb.get_mpz_t());
      BigInt r = (ra / g) * (rb / g);
      SurdSum t;
      t.terms_[r] = ca * cb * Rational(g);
      out += t;
    }
  }
  return out;
}

SurdSum& SurdSum::operator*=(const SurdSum& o) { return *this = *this * o; }

SurdSum SurdSum::inverse() const {
  Rational c;
  BigInt r;
  if (!single_term(c, r)) throw DomainError("inverse of a multi-radicand surd");
  if (c == 0) throw DomainError("division by zero");
  // 1/(c sqrt r) = sqrt(r)/(c r)
  SurdSum out;
  out.terms_[r] = Rational(1) / (c * Rational(r));
  return out;
}

double SurdSum::eval(unsigned bits) const {
  if (bits < 53) bits = 53;
  mpf_class acc(0, bits + 32);
  for (const auto& [r, c] : terms_) {
    mpf_class root(r, bits + 32);
    root = ::sqrt(root);
    mpf_class cf(c, bits + 32);
    acc += cf * root;
  }
  // get_d truncates; pick the nearer neighbour
  double d = acc.get_d();
  if (acc == d) return d;
  double other = std::nextafter(d, acc > 0 ? INFINITY : -INFINITY);
  mpf_class e0 = abs(acc - mpf_class(d, bits + 32)), e1 = abs(acc - mpf_class(other, bits + 32));
  return e1 < e0 ? other : d;
}

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace

std::string SurdSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // irrational terms by descending radicand, rational part last
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const BigInt& r = it->first;
    Rational c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (r == 1) {
      os << rat_str(c);
    } else if (c == 1) {
      os << "sqrt(" << r.get_str() << ")";
    } else {
      os << rat_str(c) << "*sqrt(" << r.get_str() << ")";
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    ws();
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }
  bool at_end() {
    ws();
    return i >= s.size();
  }
  std::string digits() {
    ws();
    size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) throw DomainError("expected digits in surd text: " + s);
    return s.substr(b, i - b);
  }
  Rational rational() {
    std::string num = digits();
    if (eat('/')) {
      std::string den = digits();
      Rational q{BigInt(num), BigInt(den)};
      q.canonicalize();
      return q;
    }
    return Rational(BigInt(num));
  }
  Rational sqrt_arg() {
    if (!eat('(')) throw DomainError("expected '(' after sqrt");
    Rational q = rational();
    if (!eat(')')) throw DomainError("expected ')'");
    return q;
  }
  SurdSum term() {
    if (eat_word("sqrt")) return SurdSum::sqrt(sqrt_arg());
    Rational c = rational();
    if (eat('*')) {
      if (!eat_word("sqrt")) throw DomainError("expected sqrt after '*'");
      return SurdSum::normalize(c, sqrt_arg());
    }
    return SurdSum(c);
  }
  SurdSum sum() {
    SurdSum out;
    bool neg = eat('-');
    if (!neg) eat('+');
    SurdSum t = term();
    out += neg ? -t : t;
    while (true) {
      ws();
      if (i >= s.size() || s[i] == ')') break;
      if (eat('+')) {
        out += term();
      } else if (eat('-')) {
        out -= term();
      } else {
        break;
      }
    }
    return out;
  }
};

}  // namespace

SurdSum SurdSum::parse(const std::string& text) {
  Cursor c{text};
  SurdSum v = c.sum();
  if (!c.at_end()) throw DomainError("trailing characters in surd text: " + text);
  return v;
}

CSurd CSurd::inverse() const {
  SurdSum n2 = re * re + im * im;
  SurdSum inv = n2.inverse();
  return {re * inv, -(im * inv)};
}

std::string CSurd::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return "I*(" + im.str() + ")";
  return re.str() + " + I*(" + im.str() + ")";
}

CSurd CSurd::parse(const std::string& text) {
  auto pos = text.find("I*(");
  if (pos == std::string::npos) return CSurd(SurdSum::parse(text));
  auto close = text.rfind(')');
  if (close == std::string::npos || close < pos) throw DomainError("unbalanced complex surd: " + text);
  SurdSum im = SurdSum::parse(text.substr(pos + 3, close - pos - 3));
  std::string head = text.substr(0, pos);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
  if (head.empty()) return CSurd(SurdSum(), im);
  if (head.back() != '+') throw DomainError("expected '+' before imaginary part: " + text);
  head.pop_back();
  return CSurd(SurdSum::parse(head), im);
}

int LambdaPoly::degree() const {
  for (int k = 2; k >= 0; --k)
    if (!c_[k].is_zero()) return k;
  return -1;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly out;
  for (int k = 0; k < 3; ++k) out.c_[k] = -c_[k];
  return out;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  for (int k = 0; k < 3; ++k) c_[k] += o.c_[k];
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  for (int k = 0; k < 3; ++k) c_[k] -= o.c_[k];
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  int da = a.degree(), db = b.degree();
  LambdaPoly out;
  if (da < 0 || db < 0) return out;
  if (da + db > 2) throw DegreeOverflow("LambdaPoly product exceeds degree 2");
  for (int i = 0; i <= da; ++i)
    for (int j = 0; j <= db; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  return out;
}

std::complex<double> LambdaPoly::eval_at(std::complex<double> lambda) const {
  return c_[0].eval() + lambda * (c_[1].eval() + lambda * c_[2].eval());
}

CSurd LambdaPoly::at(long lambda) const {
  CSurd l(lambda);
  return c_[0] + l * (c_[1] + l * c_[2]);
}

std::string LambdaPoly::str() const {
  int d = degree();
  if (d < 0) return "0";
  std::string out;
  for (int k = 0; k <= d; ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = "(" + c_[k].str() + ")";
    if (k == 0) out += cs;
    else if (k == 1) out += cs + "*L";
    else out += cs + "*L^2";
  }
  return out;
}

}  // namespace su21
