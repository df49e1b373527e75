#include "su21/decomposition.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <tuple>

namespace su21 {

std::string chamber_name(Chamber c) {
  switch (c) {
    case Chamber::I1: return "I1";
    case Chamber::I2: return "I2";
    case Chamber::II1: return "II1";
    case Chamber::II2: return "II2";
    case Chamber::III1: return "III1";
    case Chamber::III2: return "III2";
  }
  return "?";
}

std::string sub_name(Sub s) {
  switch (s) {
    case Sub::V_fin: return "V_fin";
    case Sub::V_disc_plus: return "V_disc+";
    case Sub::V_disc_minus: return "V_disc-";
    case Sub::V_H: return "V_H";
    case Sub::Q_plus: return "Q+";
    case Sub::Q_minus: return "Q-";
  }
  return "?";
}

bool WeylResult::integral() const {
  return delta.get_den() == 1 && lambda.get_den() == 1;
}

WeylResult weyl_reflect(Reflection w, const Rational& delta, const Rational& lambda) {
  if (w == Reflection::a1) return {Rational(-(3 * lambda + delta) / 2), Rational((lambda - delta) / 2)};
  return {Rational((3 * lambda - delta) / 2), Rational((lambda + delta) / 2)};
}

WeylResult weyl_word(const std::vector<Reflection>& word, const Rational& delta, const Rational& lambda) {
  WeylResult r{delta, lambda};
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = weyl_reflect(*it, r.delta, r.lambda);
  return r;
}

std::vector<Reflection> parse_word(const std::string& text) {
  std::vector<Reflection> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    for (std::string part; !tok.empty();) {
      auto pos = tok.find_first_of("*,");
      part = tok.substr(0, pos);
      tok = pos == std::string::npos ? "" : tok.substr(pos + 1);
      if (part.empty()) continue;
      if (part == "a1" || part == "w1" || part == "wa1") out.push_back(Reflection::a1);
      else if (part == "a2" || part == "w2" || part == "wa2") out.push_back(Reflection::a2);
      else throw DomainError("unknown reflection '" + part + "'");
    }
  }
  return out;
}

std::optional<Chamber> chamber_classify(long delta, long lambda) {
  const long p = lambda + delta, m = lambda - delta;
  if (p % 2 != 0 || lambda == 0) return std::nullopt;
  if (m >= 2 && p >= 2) return Chamber::I1;
  if (m <= -2 && p <= -2) return Chamber::I2;
  if (lambda > 0 && m <= -2) return Chamber::II1;
  if (lambda < 0 && p >= 2) return Chamber::II2;
  if (lambda > 0 && p <= -2) return Chamber::III1;
  if (lambda < 0 && m >= 2) return Chamber::III2;
  return std::nullopt;
}

std::vector<Reflection> chamber_word(Chamber c) {
  using R = Reflection;
  switch (c) {
    case Chamber::I1: return {};
    case Chamber::I2: return {R::a1, R::a2, R::a1};
    case Chamber::II1: return {R::a2};
    case Chamber::II2: return {R::a1, R::a2};
    case Chamber::III1: return {R::a1};
    case Chamber::III2: return {R::a2, R::a1};
  }
  return {};
}

bool lattice_cond(int k, int l) {
  return k >= 0 && std::abs(l) <= k && (k - l) % 2 == 0;
}

std::vector<Sub> chamber_subs(Chamber c) {
  switch (c) {
    case Chamber::I1:
    case Chamber::I2: return {Sub::V_fin, Sub::Q_plus, Sub::Q_minus, Sub::V_H};
    case Chamber::II1:
    case Chamber::II2: return {Sub::V_disc_minus, Sub::Q_minus, Sub::V_H};
    case Chamber::III1:
    case Chamber::III2: return {Sub::V_disc_plus, Sub::Q_plus, Sub::V_H};
  }
  return {};
}

namespace {

Chamber classify_or_throw(long delta, long lambda) {
  auto c = chamber_classify(delta, lambda);
  if (!c) {
    throw DomainError("character (delta=" + std::to_string(delta) + ", lambda=" + std::to_string(lambda) +
                      ") lies in no chamber");
  }
  return *c;
}

// s = k + l, d = k - l
bool member(Chamber c, Sub s, long sp, long dm, long delta, long lambda) {
  const long p = lambda + delta, m = lambda - delta;
  switch (c) {
    case Chamber::I1:
      switch (s) {
        case Sub::V_H: return dm >= m && sp >= p;
        case Sub::Q_plus: return dm < m && sp >= p;
        case Sub::Q_minus: return sp < p && dm >= m;
        case Sub::V_fin: return sp < p && dm < m;
        default: break;
      }
      break;
    case Chamber::I2:
      switch (s) {
        // delta enters with the sign fixed by the generators of V_1 and the lowest K-types
        case Sub::V_H: return dm >= -p && sp >= -m;
        case Sub::Q_plus: return dm < -p && sp >= -m;
        case Sub::Q_minus: return sp < -m && dm >= -p;
        case Sub::V_fin: return dm < -p && sp < -m;
        default: break;
      }
      break;
    case Chamber::II1:
      switch (s) {
        case Sub::V_H: return sp >= p;
        case Sub::Q_minus: return -m <= sp && sp < p;
        case Sub::V_disc_minus: return sp < -m;
        default: break;
      }
      break;
    case Chamber::II2:
      switch (s) {
        case Sub::V_H: return sp >= -m;
        case Sub::Q_minus: return p <= sp && sp < -m;
        case Sub::V_disc_minus: return sp < p;
        default: break;
      }
      break;
    case Chamber::III1:
      switch (s) {
        case Sub::V_H: return dm >= m;
        case Sub::Q_plus: return -p <= dm && dm < m;
        case Sub::V_disc_plus: return dm < -p;
        default: break;
      }
      break;
    case Chamber::III2:
      switch (s) {
        case Sub::V_H: return dm >= -p;
        case Sub::Q_plus: return m <= dm && dm < -p;
        case Sub::V_disc_plus: return dm < m;
        default: break;
      }
      break;
  }
  throw DomainError(sub_name(s) + " does not occur in chamber " + chamber_name(c));
}

}  // namespace

bool in_sub(Sub s, int k, int l, long delta, long lambda) {
  return member(classify_or_throw(delta, lambda), s, k + l, k - l, delta, lambda);
}

std::optional<Sub> region_of(int k, int l, long delta, long lambda) {
  auto c = chamber_classify(delta, lambda);
  if (!c || !lattice_cond(k, l)) return std::nullopt;
  for (Sub s : chamber_subs(*c)) {
    if (member(*c, s, k + l, k - l, delta, lambda)) return s;
  }
  return std::nullopt;
}

std::set<LatticePoint> subquotient_ktypes(Sub s, long delta, long lambda, int kmax) {
  Chamber c = classify_or_throw(delta, lambda);
  std::set<LatticePoint> out;
  for (int k = 0; k <= kmax; ++k) {
    for (int l = -k; l <= k; l += 2) {
      if (member(c, s, k + l, k - l, delta, lambda)) out.insert({k, l});
    }
  }
  return out;
}

std::optional<LatticePoint> lowest_ktype(Sub s, long delta, long lambda, int kmax) {
  auto pts = subquotient_ktypes(s, delta, lambda, kmax);
  if (pts.empty()) return std::nullopt;
  return *std::min_element(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return std::tuple(a.k, std::abs(a.l), a.l) < std::tuple(b.k, std::abs(b.l), b.l);
  });
}

CompositionSeries composition_series(long delta, long lambda) {
  Chamber c = classify_or_throw(delta, lambda);
  CompositionSeries out{c, {}};
  switch (c) {
    case Chamber::I1:
      out.levels = {{{Sub::V_H}, "Q- + Q+"}, {{Sub::V_H, Sub::Q_plus, Sub::Q_minus}, "V_fin"}};
      break;
    case Chamber::I2:
      out.levels = {{{Sub::V_fin}, "Q- + Q+"}, {{Sub::V_fin, Sub::Q_plus, Sub::Q_minus}, "V_H"}};
      break;
    case Chamber::II1:
      out.levels = {{{Sub::V_H, Sub::V_disc_minus}, "Q-"}};
      break;
    case Chamber::II2:
      out.levels = {{{Sub::Q_minus}, "V_H + V_disc-"}};
      break;
    case Chamber::III1:
      out.levels = {{{Sub::V_H, Sub::V_disc_plus}, "Q+"}};
      break;
    case Chamber::III2:
      out.levels = {{{Sub::Q_plus}, "V_H + V_disc+"}};
      break;
  }
  return out;
}

ClosureReport verify_closure(long delta, long lambda, int kmax) {
  return verify_closure(composition_series(delta, lambda), delta, lambda, kmax);
}

ClosureReport verify_closure(const CompositionSeries& series, long delta, long lambda, int kmax) {
  Chamber c = classify_or_throw(delta, lambda);
  ClosureReport rep;
  const int d = static_cast<int>(delta);
  const Gen vs[] = {Gen::Va2, Gen::Va12, Gen::Vma2, Gen::Vma12};
  // a direct sum of submodules: each summand must be closed on its own
  std::vector<std::set<Sub>> closed;
  for (const auto& lv : series.levels) {
    closed.push_back(lv.members);
    if (lv.members.size() == 2 && lv.members.count(Sub::V_H) &&
        (lv.members.count(Sub::V_disc_minus) || lv.members.count(Sub::V_disc_plus))) {
      for (Sub s : lv.members) closed.push_back({s});
    }
  }
  auto region = [&](int k, int l) {
    for (Sub s : chamber_subs(c)) {
      if (member(c, s, k + l, k - l, delta, lambda)) return s;
    }
    throw DomainError("lattice point outside every region");
  };
  for (int k = 0; k <= kmax; ++k) {
    for (int l = -k; l <= k; l += 2) {
      Sub from = region(k, l);
      KType t = ktype_of_lattice(k, l, d);
      for (int tm1 = -k; tm1 <= k; tm1 += 2) {
        WignerIndex src{t.j, t.n, HalfInt{tm1}, t.m2(d)};
        ++rep.sources;
        for (Gen v : vs) {
          for (const auto& term : dl_valpha(v, src, d)) {
            ++rep.terms;
            auto [tk, tl] = std::pair<int, int>{term.target.j.twice, term.target.m2.twice};
            Sub to = region(tk, tl);
            bool zero = term.coeff.at(lambda).is_zero();
            for (const auto& S : closed) {
              if (!S.count(from) || S.count(to)) continue;
              if (zero) {
                ++rep.zero_crossings;
                continue;
              }
              rep.pass = false;
              if (rep.counterexamples.size() < 20) {
                std::ostringstream os;
                os << gen_name(v) << " maps (k,l)=(" << k << "," << l << ") m1x2=" << tm1 << " in "
                   << sub_name(from) << " to (" << tk << "," << tl << ") in " << sub_name(to)
                   << " with coefficient " << term.coeff.at(lambda).str();
                rep.counterexamples.push_back(os.str());
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

DimensionCheck finite_dim_check(long delta, long lambda) {
  Chamber c = classify_or_throw(delta, lambda);
  if (c != Chamber::I1 && c != Chamber::I2) throw DomainError("no finite-dimensional subquotient in " + chamber_name(c));
  long a = 0, b = 0;
  if (c == Chamber::I1) {
    a = (lambda + delta) / 2 - 1;
    b = (lambda - delta) / 2 - 1;
  } else {
    a = (-lambda - delta) / 2 - 1;
    b = (-lambda + delta) / 2 - 1;
  }
  DimensionCheck out;
  out.weyl = (a + 1) * (b + 1) * (a + b + 2) / 2;
  const long bound = std::abs(lambda) + std::abs(delta) + 2;
  for (long k = 0; k <= bound; ++k) {
    for (long l = -k; l <= k; l += 2) {
      if (member(c, Sub::V_fin, k + l, k - l, delta, lambda)) out.enumerated += k + 1;
    }
  }
  return out;
}

}  // namespace su21
