#include "su21/action.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

namespace su21 {

namespace {

const CSurd kI = CSurd::I();

Rational q_of(HalfInt h) { return h.rational(); }

LambdaPoly linear(const Rational& c0, long c1) { return LambdaPoly(CSurd(SurdSum(c0)), CSurd(c1)); }

LambdaPoly half_lambda() { return LambdaPoly(CSurd(), CSurd(SurdSum(Rational(1, 2)))); }

LambdaPoly constant(const SurdSum& s) { return LambdaPoly(CSurd(s)); }

LambdaPoly constant(const CSurd& s) { return LambdaPoly(s); }

SurdSum root(const Rational& r) {
  if (r < 0) throw DomainError("negative radicand in action coefficient");
  return SurdSum::sqrt(r);
}

void push(std::vector<ActionTerm>& out, const WignerIndex& t, const LambdaPoly& c) {
  if (!c.is_zero()) out.push_back({t, c});
}

struct RootData {
  int sg;     // +1 for positive noncompact roots
  int ma_x2;  // twice m_alpha
};

RootData root_data(Gen v) {
  switch (v) {
    case Gen::Va2: return {+1, -1};
    case Gen::Va12: return {+1, +1};
    case Gen::Vma2: return {-1, +1};
    case Gen::Vma12: return {-1, -1};
    default: throw DomainError("not a noncompact weight vector: " + gen_name(v));
  }
}

}  // namespace

InductionChar InductionChar::exact(int delta, long lambda) {
  InductionChar c;
  c.delta = delta;
  c.lambda = cd(static_cast<double>(lambda), 0.0);
  c.integral = ((lambda - delta) % 2 == 0);
  return c;
}

InductionChar InductionChar::numeric(int delta, cd lambda) {
  InductionChar c;
  c.delta = delta;
  c.lambda = lambda;
  return c;
}

long InductionChar::lambda_int() const {
  if (!integral) throw DomainError("character is not in decomposition mode");
  return std::lround(lambda.real());
}

HalfInt KType::m2(int delta) const {
  int t = n.twice + 2 * delta;
  if (t % 3) throw DomainError("K-type (" + j.str() + ", " + n.str() + ") has no m2 for delta " + std::to_string(delta));
  return HalfInt(t / 3);
}

bool in_principal_series(const WignerIndex& idx, int delta) {
  return idx.valid() && 3 * idx.m2.twice - idx.n.twice == 2 * delta;
}

std::vector<KType> ktype_set(int delta, HalfInt jmax) {
  std::vector<KType> out;
  for (int jt = 0; jt <= jmax.twice; ++jt)
    for (int m2t = -jt; m2t <= jt; m2t += 2) out.push_back({HalfInt(jt), HalfInt(3 * m2t - 2 * delta)});
  return out;
}

std::pair<int, int> lattice_of(const KType& t, int delta) { return {t.j.twice, t.m2(delta).twice}; }

KType ktype_of_lattice(int k, int l, int delta) {
  if (k < 0 || std::abs(l) > k || (k - l) % 2) throw DomainError("lattice point outside the cone");
  return {HalfInt(k), HalfInt(3 * l - 2 * delta)};
}

std::vector<WignerIndex> basis_indices(int delta, HalfInt jmax) {
  std::vector<WignerIndex> out;
  for (const auto& t : ktype_set(delta, jmax)) {
    HalfInt m2 = t.m2(delta);
    for (int m1 = -t.j.twice; m1 <= t.j.twice; m1 += 2) out.push_back({t.j, t.n, HalfInt(m1), m2});
  }
  return out;
}

std::vector<ActionTerm> dl_valpha(Gen v, const WignerIndex& src, int delta, Route route) {
  RootData rd = root_data(v);
  if (!in_principal_series(src, delta))
    throw DomainError("source " + src.key() + " is not in the principal series for delta " + std::to_string(delta));
  const HalfInt ma(rd.ma_x2), half(1);
  const Rational J = q_of(src.j), N = q_of(src.n), M2 = q_of(src.m2);
  const int sg = rd.sg;
  std::vector<ActionTerm> out;
  for (int j0 : {-1, +1}) {
    HalfInt Jt = src.j + HalfInt(j0);
    if (Jt.twice < 0) continue;
    HalfInt m1t = src.m1 + ma;
    HalfInt m2t = src.m2 + HalfInt(sg);
    if (std::abs(m1t.twice) > Jt.twice) continue;
    WignerIndex target{Jt, src.n + HalfInt(3 * sg), m1t, m2t};
    SurdSum outer = cg(src.j, src.m1, half, ma, Jt, m1t);
    if (outer.is_zero()) continue;
    LambdaPoly coef;
    if (route == Route::tables) {
      Rational q2;
      LambdaPoly kappa;
      if (sg < 0) {
        if (j0 < 0) {
          q2 = J + M2;
          kappa = linear(-(2 * J - M2 + N), 1);
        } else {
          q2 = J - M2 + 1;
          kappa = linear(2 * J + M2 - N + 2, 1);
        }
      } else {
        if (j0 < 0) {
          q2 = J - M2;
          kappa = linear(2 * J + M2 - N, -1);
        } else {
          q2 = J + M2 + 1;
          kappa = linear(2 * J - M2 + N + 2, 1);
        }
      }
      if (q2 == 0) continue;
      Rational norm = Rational(1) / (4 * (2 * J + 1));
      norm.canonicalize();
      coef = constant(outer * root(q2) * SurdSum::sqrt(norm)) * kappa;
    } else {
      // right action of v_beta after expanding Ad(k^-1) v_alpha, then the product rule
      HalfInt sgh(sg);
      SurdSum shift;
      HalfInt m2s = src.m2 + HalfInt(2 * sg);
      if (std::abs(m2s.twice) <= src.j.twice) {
        Rational r = (J - sg * M2) * (J + sg * M2 + 1);
        shift = root(r) * cg(src.j, m2s, half, HalfInt(-sg), Jt, src.m2 + sgh);
      }
      LambdaPoly scal = linear(-sg * N - sg * M2 - 2, -1);
      LambdaPoly inner = constant(shift) - constant(SurdSum(Rational(1, 2))) * scal *
                                               constant(cg(src.j, src.m2, half, sgh, Jt, src.m2 + sgh));
      coef = constant(outer) * inner;
    }
    if (coef.is_zero()) continue;
    if (!target.valid() || !in_principal_series(target, delta))
      throw std::logic_error("action produced an invalid target " + target.key());
    out.push_back({target, coef});
  }
  return out;
}

std::vector<ActionTerm> dl_k(KGen g, const WignerIndex& src) {
  src.validate();
  const Rational J = q_of(src.j), M1 = q_of(src.m1);
  std::vector<ActionTerm> out;
  auto raise = [&](int dir, const CSurd& scale) {
    HalfInt m1t = src.m1 + HalfInt(2 * dir);
    if (std::abs(m1t.twice) > src.j.twice) return;
    Rational r = (J - dir * M1) * (J + dir * M1 + 1);
    push(out, {src.j, src.n, m1t, src.m2}, constant(scale * -kI * CSurd(root(r))));
  };
  switch (g) {
    case KGen::gamma0: push(out, src, constant(kI * CSurd(SurdSum(q_of(src.n))))); break;
    case KGen::gamma3: push(out, src, constant(kI * CSurd(SurdSum(M1)))); break;
    case KGen::raise: raise(+1, CSurd(1)); break;
    case KGen::lower: raise(-1, CSurd(1)); break;
    case KGen::gamma1:
      raise(+1, CSurd(SurdSum(Rational(1, 2))));
      raise(-1, CSurd(SurdSum(Rational(1, 2))));
      break;
    case KGen::gamma2: {
      // (up - dn)/(2i)
      CSurd h = CSurd(SurdSum(), SurdSum(Rational(-1, 2)));
      raise(+1, h);
      raise(-1, -h);
      break;
    }
  }
  return out;
}

std::vector<ActionTerm> dr_ops(RGen g, const WignerIndex& src) {
  src.validate();
  const Rational J = q_of(src.j), N = q_of(src.n), M2 = q_of(src.m2);
  std::vector<ActionTerm> out;
  auto shift = [&](int dir, const CSurd& scale) {
    HalfInt m2t = src.m2 + HalfInt(2 * dir);
    if (std::abs(m2t.twice) > src.j.twice) return;
    Rational r = (J - dir * M2) * (J + dir * M2 + 1);
    push(out, {src.j, src.n, src.m1, m2t}, constant(scale * CSurd(root(r))));
  };
  switch (g) {
    case RGen::a: push(out, src, linear(Rational(-2), -1)); break;
    case RGen::va12: push(out, src, linear(Rational(1, 2) * (-N - M2 - 2), 0) - half_lambda()); break;
    case RGen::vma12: push(out, src, linear(Rational(1, 2) * (N + M2 - 2), 0) - half_lambda()); break;
    case RGen::va2: shift(+1, CSurd(-1)); break;
    case RGen::vma2: shift(-1, CSurd(-1)); break;
    case RGen::gamma0: push(out, src, constant(-kI * CSurd(SurdSum(N)))); break;
    case RGen::gamma3: push(out, src, constant(-kI * CSurd(SurdSum(M2)))); break;
    case RGen::gamma1:
      // dr(g1 + i g2) lowers m2, dr(g1 - i g2) raises it, both with factor i
      shift(-1, kI * CSurd(SurdSum(Rational(1, 2))));
      shift(+1, kI * CSurd(SurdSum(Rational(1, 2))));
      break;
    case RGen::gamma2:
      // (R+ - R-)/(2i), R+ = i sqrt(..) at m2-1
      shift(-1, CSurd(SurdSum(Rational(1, 2))));
      shift(+1, CSurd(SurdSum(Rational(-1, 2))));
      break;
  }
  return out;
}

Vec& accumulate(Vec& acc, const Vec& v) {
  for (const auto& [k, p] : v) {
    auto it = acc.find(k);
    if (it == acc.end()) {
      if (!p.is_zero()) acc.emplace(k, p);
      continue;
    }
    it->second += p;
    if (it->second.is_zero()) acc.erase(it);
  }
  return acc;
}

Vec scale(const LambdaPoly& c, const Vec& v) {
  Vec out;
  for (const auto& [k, p] : v) {
    LambdaPoly q = c * p;
    if (!q.is_zero()) out.emplace(k, q);
  }
  return out;
}

bool vec_equal(const Vec& a, const Vec& b) {
  Vec d = a;
  accumulate(d, scale(LambdaPoly(-1), b));
  return d.empty();
}

Vec apply_dl(const std::array<CSurd, 8>& x, const Vec& v, int delta, Route route) {
  static const KGen kgens[4] = {KGen::gamma0, KGen::gamma1, KGen::gamma2, KGen::gamma3};
  Vec out;
  for (const auto& [idx, p] : v) {
    for (int i = 0; i < 8; ++i) {
      if (x[i].is_zero()) continue;
      std::vector<ActionTerm> terms = i < 4 ? dl_k(kgens[i], idx) : dl_valpha(kp_basis()[i], idx, delta, route);
      LambdaPoly cp = LambdaPoly(x[i]) * p;
      Vec part;
      for (const auto& t : terms) accumulate(part, Vec{{t.target, cp * t.coeff}});
      accumulate(out, part);
    }
  }
  return out;
}

Vec apply_dl(const Matrix3X& x, const Vec& v, int delta, Route route) {
  return apply_dl(express_in_kp(x), v, delta, route);
}

Program parse_program(const std::string& text) {
  Program prog;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, '*')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
              tok.end());
    if (tok.empty()) throw DomainError("empty factor in operator program '" + text + "'");
    if (tok == "1" || tok == "id") continue;
    prog.push_back(basis_matrix(gen_from_name(tok)));
  }
  return prog;
}

OperatorMatrix operator_matrix(const Program& program, int delta, HalfInt jmax, int threads) {
  OperatorMatrix om;
  om.delta = delta;
  om.jmax = jmax;
  std::vector<std::array<CSurd, 8>> coords;
  for (const auto& m : program) coords.push_back(express_in_kp(m));
  std::vector<WignerIndex> rows = basis_indices(delta, jmax);
  struct Row {
    Vec v;
    bool leak = false;
  };
  auto work = [&](std::size_t lo, std::size_t hi) {
    std::vector<Row> res(hi - lo);
    for (std::size_t r = lo; r < hi; ++r) {
      Vec v{{rows[r], LambdaPoly(1)}};
      bool leak = false;
      for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
        v = apply_dl(*it, v, delta);
        for (const auto& kv : v)
          if (kv.first.j > jmax) leak = true;
      }
      res[r - lo] = {std::move(v), leak};
    }
    return res;
  };
  threads = std::max(1, threads);
  std::size_t chunk = (rows.size() + threads - 1) / threads;
  std::vector<std::future<std::vector<Row>>> futs;
  for (std::size_t lo = 0; lo < rows.size(); lo += chunk)
    futs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, work, lo,
                              std::min(rows.size(), lo + chunk)));
  std::size_t r = 0;
  for (auto& f : futs)
    for (auto& row : f.get()) {
      if (row.leak) om.leaking.insert(rows[r]);
      om.rows.emplace(rows[r], std::move(row.v));
      ++r;
    }
  return om;
}

LambdaPoly casimir2_poly(int delta) {
  Rational c0(delta * delta - 12, 36);
  c0.canonicalize();
  LambdaPoly l = LambdaPoly::lambda();
  return LambdaPoly(CSurd(SurdSum(c0))) + LambdaPoly(CSurd(SurdSum(Rational(1, 12)))) * l * l;
}

cd casimir2_scalar(int delta, cd lambda) { return (3.0 * (lambda * lambda - 4.0) + double(delta * delta)) / 36.0; }

cd casimir3_scalar(int delta, cd lambda) {
  double d = delta;
  return (d - 3.0) * (d - 3.0 * (lambda - 2.0)) * (d + 3.0 * (lambda - 2.0)) / (32.0 * 243.0);
}

cd casimir3_hc(int delta, cd lambda) {
  double d = delta;
  cd h1 = (lambda + d) / 2.0, h2 = (lambda - d) / 2.0;
  return -(h1 + 2.0 * h2 - 3.0) * (2.0 * h1 + h2 + 3.0) * (h1 - h2 - 3.0) / (8.0 * 243.0);
}

namespace {

bool interior(const WignerIndex& idx, HalfInt jmax) { return idx.j.twice + 2 <= jmax.twice; }

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  for (const auto& [k, p] : v) os << "[" << k.key() << "]: " << p.str() << "; ";
  return os.str();
}

}  // namespace

CasimirReport casimir2_apply(int delta, HalfInt jmax, const Rational& root_coef) {
  using M = Matrix3X;
  M h1 = basis_matrix(Gen::Halpha1), h2 = basis_matrix(Gen::Halpha2);
  struct Word {
    Rational c;
    std::vector<std::array<CSurd, 8>> ops;  // applied right to left
  };
  auto X = [](Gen g) { return express_in_kp(basis_matrix(g)); };
  auto H1 = express_in_kp(h1), H2 = express_in_kp(h2);
  std::vector<Word> words = {
      {Rational(1, 9), {H1, H1}}, {Rational(1, 9), {H1, H2}}, {Rational(1, 9), {H2, H2}},
      {Rational(1, 3), {H1}},     {Rational(1, 3), {H2}},
      {root_coef, {X(Gen::Xma1), X(Gen::Xa1)}},
      {root_coef, {X(Gen::Xma2), X(Gen::Xa2)}},
      {root_coef, {X(Gen::Xma12), X(Gen::Xa12)}},
  };
  CasimirReport rep;
  LambdaPoly expected = casimir2_poly(delta);
  rep.value = expected;
  for (const auto& row : basis_indices(delta, jmax)) {
    if (!interior(row, jmax)) {
      ++rep.leaking;
      continue;
    }
    Vec total;
    for (const auto& w : words) {
      Vec v{{row, LambdaPoly(1)}};
      for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it) v = apply_dl(*it, v, delta);
      accumulate(total, scale(LambdaPoly(CSurd(SurdSum(w.c))), v));
    }
    ++rep.checked;
    Vec want{{row, expected}};
    if (!vec_equal(total, want)) {
      rep.pass = false;
      if (rep.failures.size() < 8) rep.failures.push_back(row.key() + " -> " + vec_str(total));
    }
  }
  return rep;
}

IdentityReport bracket_consistency(int delta, HalfInt jmax) {
  IdentityReport rep;
  const auto& kb = kp_basis();
  std::vector<WignerIndex> rows;
  for (const auto& r : basis_indices(delta, jmax))
    if (interior(r, jmax)) rows.push_back(r);
  for (std::size_t a = 0; a < kb.size(); ++a)
    for (std::size_t b = a + 1; b < kb.size(); ++b) {
      Matrix3X A = basis_matrix(kb[a]), B = basis_matrix(kb[b]);
      auto ca = express_in_kp(A), cb = express_in_kp(B), cab = express_in_kp(bracket(A, B));
      for (const auto& r : rows) {
        Vec v{{r, LambdaPoly(1)}};
        Vec lhs = apply_dl(ca, apply_dl(cb, v, delta), delta);
        accumulate(lhs, scale(LambdaPoly(-1), apply_dl(cb, apply_dl(ca, v, delta), delta)));
        Vec rhs = apply_dl(cab, v, delta);
        ++rep.checked;
        if (!vec_equal(lhs, rhs)) {
          rep.pass = false;
          if (rep.failures.size() < 8)
            rep.failures.push_back("[" + gen_name(kb[a]) + ", " + gen_name(kb[b]) + "] on " + r.key());
        }
      }
    }
  return rep;
}

IdentityReport route_consistency(int delta, HalfInt jmax) {
  IdentityReport rep;
  for (const auto& r : basis_indices(delta, jmax))
    for (Gen v : {Gen::Va2, Gen::Va12, Gen::Vma2, Gen::Vma12}) {
      Vec a, b;
      for (const auto& t : dl_valpha(v, r, delta, Route::tables)) accumulate(a, Vec{{t.target, t.coeff}});
      for (const auto& t : dl_valpha(v, r, delta, Route::before_cg)) accumulate(b, Vec{{t.target, t.coeff}});
      ++rep.checked;
      if (!vec_equal(a, b)) {
        rep.pass = false;
        if (rep.failures.size() < 8) rep.failures.push_back(gen_name(v) + " on " + r.key());
      }
    }
  return rep;
}

}  // namespace su21
