#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <regex>

#include "su21/action.hpp"
#include "su21/compact.hpp"
#include "su21/decomposition.hpp"
#include "su21/diagram.hpp"
#include "su21/intertwine.hpp"
#include "su21/structure.hpp"

using json = nlohmann::json;
using namespace su21;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericFailure : std::runtime_error {
  json report;
  NumericFailure(const std::string& what, json r) : std::runtime_error(what), report(std::move(r)) {}
};

// 15 significant digits, then shortest round-trip printing
json num(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? json("nan") : json(x > 0 ? "inf" : "-inf");
  return std::stod(fmt::format("{:.15g}", x));
}

json cnum(cd z) { return {{"re", num(z.real())}, {"im", num(z.imag())}}; }

json half(HalfInt h) { return h.twice; }

HalfInt parse_half(const std::string& s, const std::string& flag) {
  try {
    return HalfInt::parse(s);
  } catch (const std::exception&) {
    throw UsageError("--" + flag + ": expected an integer or half-integer, got '" + s + "'");
  }
}

cd parse_complex(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  static const std::regex re_only(R"(^([+-]?[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)$)");
  static const std::regex im_only(R"(^([+-]?[0-9]*\.?[0-9]*(?:[eE][+-]?[0-9]+)?)[ij]$)");
  static const std::regex both(
      R"(^([+-]?[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)([+-][0-9]*\.?[0-9]*(?:[eE][+-]?[0-9]+)?)[ij]$)");
  auto coef = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return std::stod(t);
  };
  std::smatch m;
  if (std::regex_match(s, m, re_only)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(s, m, both)) return {std::stod(m[1]), coef(m[2])};
  if (std::regex_match(s, m, im_only)) return {0.0, coef(m[1])};
  throw UsageError("--lambda: cannot parse '" + s + "' as a complex number");
}

long parse_integer(const std::string& s, const std::string& flag) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + flag + ": expected an integer, got '" + s + "'");
}

int default_threads() {
  if (const char* env = std::getenv("SU21_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json index_json(const WignerIndex& i) {
  return {{"j_x2", half(i.j)}, {"n_x2", half(i.n)}, {"m1_x2", half(i.m1)}, {"m2_x2", half(i.m2)}};
}

// ---- subcommands ----

struct DfunArgs {
  std::string j, m1, m2;
  std::vector<double> theta;
};

json run_dfun(const DfunArgs& a) {
  HalfInt j = parse_half(a.j, "j"), m1 = parse_half(a.m1, "m1"), m2 = parse_half(a.m2, "m2");
  if (!same_parity(j, m1) || !same_parity(j, m2) || std::abs(m1.twice) > j.twice || std::abs(m2.twice) > j.twice) {
    throw UsageError("need |m1|, |m2| <= j with matching parity");
  }
  json floats = json::array(), paths = json::array();
  for (double t : a.theta) {
    floats.push_back(num(little_d_value(j, m1, m2, t)));
    paths.push_back({{"theta", num(t)},
                     {"trig", num(little_d_value(j, m1, m2, t))},
                     {"jacobi", num(little_d_jacobi(j, m1, m2, t))},
                     {"hyper", num(little_d_hyper(j, m1, m2, t))}});
  }
  // W = c_m1 c_m2 e^{i(...)} d; d carries no c-factors
  SurdSum c1 = c_factor(j, m1), c2 = c_factor(j, m2);
  return {{"index", {{"j_x2", half(j)}, {"m1_x2", half(m1)}, {"m2_x2", half(m2)}}},
          {"value", {{"exact", little_d(j, m1, m2).str()}, {"float", floats}}},
          {"variables", "s = sin(theta/2), c = cos(theta/2)"},
          {"theta", paths},
          {"c_factors", {{"m1", {{"exact", c1.str()}, {"float", num(c1.eval())}}}, {"m2", {{"exact", c2.str()}, {"float", num(c2.eval())}}}}}};
}

struct CgArgs {
  std::string j1, m1, j2, m2, j, m;
};

json run_cg(const CgArgs& a) {
  HalfInt j1 = parse_half(a.j1, "j1"), m1 = parse_half(a.m1, "m1"), j2 = parse_half(a.j2, "j2"),
          m2 = parse_half(a.m2, "m2"), J = parse_half(a.j, "j"), M = parse_half(a.m, "m");
  SurdSum v = cg(j1, m1, j2, m2, J, M);
  return {{"index",
           {{"j1_x2", half(j1)}, {"m1_x2", half(m1)}, {"j2_x2", half(j2)}, {"m2_x2", half(m2)}, {"j_x2", half(J)}, {"m_x2", half(M)}}},
          {"value", {{"exact", v.str()}, {"float", num(v.eval())}}}};
}

struct ThreejArgs {
  std::string j1, j2, j3, m1, m2, m3;
};

json run_threej(const ThreejArgs& a) {
  HalfInt j1 = parse_half(a.j1, "j1"), j2 = parse_half(a.j2, "j2"), j3 = parse_half(a.j3, "j3"),
          m1 = parse_half(a.m1, "m1"), m2 = parse_half(a.m2, "m2"), m3 = parse_half(a.m3, "m3");
  SurdSum v = threej(j1, j2, j3, m1, m2, m3);
  return {{"index",
           {{"j1_x2", half(j1)}, {"j2_x2", half(j2)}, {"j3_x2", half(j3)}, {"m1_x2", half(m1)}, {"m2_x2", half(m2)}, {"m3_x2", half(m3)}}},
          {"selection", threej_selection(j1, j2, j3, m1, m2, m3)},
          {"value", {{"exact", v.str()}, {"float", num(v.eval())}}}};
}

struct WignerArgs {
  std::string j, n, m1, m2;
  std::vector<double> euler;
  std::vector<double> matrix;
};

json run_wigner(const WignerArgs& a) {
  WignerIndex idx{parse_half(a.j, "j"), parse_half(a.n, "n"), parse_half(a.m1, "m1"), parse_half(a.m2, "m2")};
  try {
    idx.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  EulerAngles e;
  cd v;
  if (!a.euler.empty()) {
    if (a.euler.size() != 4) throw UsageError("--euler takes zeta,psi,theta,phi");
    e = {a.euler[0], a.euler[1], a.euler[2], a.euler[3]};
    v = wigner_D(idx, e);
  } else if (!a.matrix.empty()) {
    if (a.matrix.size() != 8) throw UsageError("--matrix takes 8 reals: re/im of g00,g01,g10,g11");
    Mat2 g;
    for (int k = 0; k < 4; ++k) g(k / 2, k % 2) = cd(a.matrix[2 * k], a.matrix[2 * k + 1]);
    Mat2 u = g.adjoint() * g;
    if (u.max_abs_diff(Mat2::identity()) > 1e-9) throw UsageError("--matrix is not unitary");
    e = euler_from_u2(g);
    v = wigner_D(idx, g);
  } else {
    throw UsageError("give --euler or --matrix");
  }
  SurdSum c = c_factor(idx.j, idx.m1) * c_factor(idx.j, idx.m2);
  std::string exact = "(" + c.str() + ")*exp(i*(" + idx.n.str() + "*zeta + " + idx.m1.str() + "*psi + " + idx.m2.str() +
                      "*phi))*(" + little_d(idx.j, idx.m1, idx.m2).str() + ")";
  return {{"index", index_json(idx)},
          {"euler", {num(e.zeta), num(e.psi), num(e.theta), num(e.phi)}},
          {"value", {{"exact", exact}, {"float", cnum(v)}}}};
}

json run_structure_verify(int trials, unsigned seed) {
  json checks = json::array();
  bool pass = true;
  for (const auto& c : structure_verify(trials, seed)) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    pass = pass && c.pass;
  }
  json out = {{"checks", checks}, {"pass", pass}};
  if (!pass) throw NumericFailure("structure identities failed", out);
  return out;
}

struct ActionArgs {
  std::string program, jmax, format = "json", lambda;
  long delta = 0;
  int threads = 0;
};

std::string run_action_matrix(const ActionArgs& a) {
  Program prog;
  try {
    prog = parse_program(a.program);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--program: ") + e.what());
  }
  HalfInt jmax = parse_half(a.jmax, "jmax");
  if (jmax.twice < 0 || jmax.twice > 16) throw UsageError("--jmax must lie in [0, 8]");
  std::optional<cd> lam;
  if (!a.lambda.empty()) lam = parse_complex(a.lambda);
  auto om = operator_matrix(prog, static_cast<int>(a.delta), jmax, a.threads > 0 ? a.threads : default_threads());
  if (a.format == "csv") {
    std::string out = lam ? "source,target,coefficient,re,im,leaks\n" : "source,target,coefficient,leaks\n";
    for (const auto& [src, row] : om.rows) {
      for (const auto& [tgt, c] : row) {
        out += "\"" + src.key() + "\",\"" + tgt.key() + "\",\"" + c.str() + "\",";
        if (lam) {
          cd v = c.eval_at(*lam);
          out += fmt::format("{:.15g},{:.15g},", v.real(), v.imag());
        }
        out += om.leaking.count(src) ? "1\n" : "0\n";
      }
    }
    return out;
  }
  if (a.format != "json") throw UsageError("--format must be json or csv");
  // rows and entries keyed by "j,n,m1,m2" in doubled integers
  json rows = json::object();
  for (const auto& [src, row] : om.rows) {
    json entries = json::object();
    for (const auto& [tgt, c] : row) {
      json e = {{"coefficient", c.str()}};
      if (lam) e["value"] = cnum(c.eval_at(*lam));
      entries[tgt.key()] = e;
    }
    rows[src.key()] = {{"entries", entries}, {"leaks", om.leaking.count(src) > 0}};
  }
  json out = {{"program", a.program}, {"delta", a.delta}, {"jmax_x2", half(jmax)}, {"key", "j_x2,n_x2,m1_x2,m2_x2"}, {"rows", rows}};
  if (lam) out["lambda"] = cnum(*lam);
  return dump(out);
}

json series_json(const CompositionSeries& s) {
  json levels = json::array();
  for (const auto& lv : s.levels) {
    json members = json::array();
    for (Sub m : lv.members) members.push_back(sub_name(m));
    levels.push_back({{"submodule", members}, {"quotient_above", lv.quotient}});
  }
  return levels;
}

struct ClassifyArgs {
  std::string delta, lambda, diagram, output;
  int kmax = 8;
};

std::string run_classify(const ClassifyArgs& a) {
  long d = parse_integer(a.delta, "delta"), l = parse_integer(a.lambda, "lambda");
  if (a.kmax < 0 || a.kmax > 64) throw UsageError("--kmax must lie in [0, 64]");
  auto c = chamber_classify(d, l);
  json out = {{"delta", d}, {"lambda", l}, {"kmax", a.kmax}};
  if (!c) {
    out["chamber"] = "unclassified";
  } else {
    out["chamber"] = chamber_name(*c);
    json word = json::array();
    for (Reflection r : chamber_word(*c)) word.push_back(r == Reflection::a1 ? "a1" : "a2");
    out["weyl_word"] = word;
    auto w = weyl_word(chamber_word(*c), d, l);
    out["dominant"] = {{"delta", w.delta.get_str()}, {"lambda", w.lambda.get_str()}};
    out["composition_series"] = series_json(composition_series(d, l));
    json regions;
    for (Sub s : chamber_subs(*c)) {
      json pts = json::array();
      for (const auto& p : subquotient_ktypes(s, d, l, a.kmax)) pts.push_back({p.k, p.l});
      json r = {{"lattice_points", pts}};
      if (auto lo = lowest_ktype(s, d, l, a.kmax)) {
        KType t = ktype_of_lattice(lo->k, lo->l, static_cast<int>(d));
        r["lowest"] = {{"k", lo->k}, {"l", lo->l}, {"j_x2", half(t.j)}, {"n_x2", half(t.n)}};
      }
      regions[sub_name(s)] = r;
    }
    out["regions"] = regions;
  }
  if (!a.diagram.empty()) {
    DiagramFormat f;
    try {
      f = diagram_format(a.diagram);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    std::string pic = emit_diagram(d, l, a.kmax, f);
    if (!a.output.empty()) {
      write_out(pic, a.output);
      out["diagram_path"] = a.output;
    } else if (f == DiagramFormat::txt) {
      return dump(out) + pic;
    } else {
      out["diagram_svg"] = pic;
    }
  }
  return dump(out);
}

struct IntertwineArgs {
  std::string j, m1, lambda, path = "all";
  long delta = 0;
  double tol = 1e-9;
};

json run_intertwine(const IntertwineArgs& a) {
  HalfInt j = parse_half(a.j, "j"), m1 = parse_half(a.m1, "m1");
  if (j.twice < 0 || std::abs(m1.twice) > j.twice || !same_parity(j, m1)) {
    throw UsageError("need |m1| <= j with j - m1 integral");
  }
  if (!(a.tol > 0 && a.tol <= 1e-3)) throw UsageError("--tol must lie in (0, 1e-3]");
  cd lam = parse_complex(a.lambda);
  const int d = static_cast<int>(a.delta);
  const bool all = a.path == "all";
  if (!all && a.path != "closed" && a.path != "gammasum" && a.path != "quadrature") {
    throw UsageError("--path must be closed, gammasum, quadrature or all");
  }
  json out = {{"j_x2", half(j)}, {"m1_x2", half(m1)}, {"delta", a.delta}, {"lambda", cnum(lam)}};
  json paths;
  auto cl = a_closed(j, m1, d, lam);
  json ledger = {{"order", cl.order}, {"kind", cl.order > 0 ? "zero" : cl.order < 0 ? "pole" : "regular"}};
  if (cl.order != 0) ledger["leading_coefficient"] = cnum(cl.leading);
  out["zero_pole"] = ledger;
  std::optional<cd> vc, vg, vq;
  if (all || a.path == "closed") paths["closed"] = cnum(*(vc = cl.value()));
  if (all || a.path == "gammasum") {
    auto g = a_gammasum(j, m1, d, lam);
    vg = g.value();
    paths["gammasum"] = {{"value", cnum(*vg)}, {"terms", g.terms}};
  }
  if (all || a.path == "quadrature") {
    QuadratureSpec spec;
    spec.rel_tol = a.tol;
    WignerIndex idx{j, HalfInt(3 * m1.twice - 2 * d), m1, m1};
    try {
      auto q = a_quadrature(idx, d, lam, spec);
      vq = q.value;
      paths["quadrature"] = {{"value", cnum(q.value)}, {"error", num(q.error)}, {"evaluations", q.evaluations}};
      if (lam.real() < 1) paths["quadrature"]["warning"] = "Re lambda < 1: slow convergence";
    } catch (const QuadratureFailure& e) {
      paths["quadrature"] = {{"estimate", cnum(e.estimate)}, {"error", num(e.error)}, {"failed", e.what()}};
      out["paths"] = paths;
      throw NumericFailure("quadrature failed", out);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  out["paths"] = paths;
  const cd ref = vc ? *vc : vg ? *vg : *vq;
  out["value"] = cnum(ref);
  json agree;
  bool ok = true;
  // relative to the value, floored at the K-type independent scale pi^2 2^{-Re lambda-1}
  const double floor = std::numbers::pi * std::numbers::pi * std::pow(2.0, -lam.real() - 1);
  auto compare = [&](const char* name, const std::optional<cd>& x, const std::optional<cd>& y, double tol) {
    if (!x || !y) return;
    double rel = std::abs(*x - *y) / std::max(std::abs(*x), 1e-6 * floor);
    bool pass = std::isfinite(rel) ? rel <= tol : *x == *y;
    agree[name] = {{"relative_difference", num(rel)}, {"tolerance", num(tol)}, {"pass", pass}};
    ok = ok && pass;
  };
  compare("closed_vs_gammasum", vc, vg, 1e-10);
  compare("closed_vs_quadrature", vc, vq, std::max(1e-6, 10 * a.tol));
  compare("gammasum_vs_quadrature", vg, vq, std::max(1e-6, 10 * a.tol));
  if (!agree.is_null()) out["agreement"] = agree;
  if (!ok) throw NumericFailure("paths disagree", out);
  return out;
}

json run_verify_all(int kmax, int threads) {
  using Check = std::function<json()>;
  std::vector<std::pair<std::string, Check>> checks;
  auto rep = [](const IdentityReport& r) {
    return json{{"pass", r.pass},
                {"checked", r.checked},
                {"detail", r.failures.empty() ? std::string() : r.failures.front()}};
  };
  checks.push_back({"structure", [] {
                      bool ok = true;
                      std::string bad;
                      for (const auto& c : structure_verify(100, 7)) {
                        if (!c.pass && bad.empty()) bad = c.name;
                        ok = ok && c.pass;
                      }
                      return json{{"pass", ok}, {"detail", bad}};
                    }});
  for (int d : {0, 1, -2}) {
    checks.push_back({fmt::format("route_consistency delta={}", d), [=] { return rep(route_consistency(d, HalfInt(4))); }});
    checks.push_back({fmt::format("bracket_consistency delta={}", d), [=] { return rep(bracket_consistency(d, HalfInt(6))); }});
    checks.push_back({fmt::format("casimir delta={}", d), [=] {
                        auto c = casimir2_apply(d, HalfInt(4));
                        json j = rep(c);
                        j["value"] = c.value.str();
                        return j;
                      }});
  }
  for (auto [d, l] : std::vector<std::pair<long, long>>{{0, 4}, {6, 2}, {6, -2}, {0, -4}, {-6, 2}, {-6, -2}}) {
    checks.push_back({fmt::format("closure ({},{})", d, l), [=] {
                        auto r = verify_closure(d, l, kmax);
                        return json{{"pass", r.pass},
                                    {"terms", r.terms},
                                    {"zero_crossings", r.zero_crossings},
                                    {"detail", r.counterexamples.empty() ? "" : r.counterexamples.front()}};
                      }});
  }
  for (auto [d, l, want] : std::vector<std::tuple<long, long, long>>{{0, 4, 8}, {2, 4, 6}, {0, -4, 8}}) {
    checks.push_back({fmt::format("finite_dim ({},{})", d, l), [=] {
                        auto f = finite_dim_check(d, l);
                        return json{{"pass", f.pass() && f.weyl == want}, {"enumerated", f.enumerated}, {"weyl", f.weyl}};
                      }});
  }
  checks.push_back({"intertwine spot", [] {
                      auto q = a_quadrature({HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0)}, 0, 2.0);
                      const double want = std::numbers::pi * std::numbers::pi / 8;
                      double e1 = std::abs(a_closed(HalfInt(0), HalfInt(0), 0, 2.0).value() - want);
                      double e2 = std::abs(q.value - want);
                      return json{{"pass", e1 < 1e-8 && e2 < 1e-8}, {"closed_error", num(e1)}, {"quadrature_error", num(e2)}};
                    }});
  checks.push_back({"intertwine closed vs gammasum", [] {
                      double worst = 0;
                      for (int d = -2; d <= 2; ++d)
                        for (int j = 0; j <= 5; ++j)
                          for (int m = -j; m <= j; m += 2)
                            for (double lam : {0.7, 2.5, 3.25, 5.5}) {
                              cd c = a_closed(HalfInt(j), HalfInt(m), d, lam).value();
                              cd g = a_gammasum(HalfInt(j), HalfInt(m), d, lam).value();
                              worst = std::max(worst, std::abs(c - g) / std::abs(c));
                            }
                      return json{{"pass", worst <= 1e-10}, {"worst_relative", num(worst)}};
                    }});

  std::vector<json> results(checks.size());
  std::atomic<size_t> next{0};
  std::vector<std::future<void>> pool;
  for (int t = 0; t < std::max(1, threads); ++t) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (size_t i; (i = next++) < checks.size();) {
        try {
          results[i] = checks[i].second();
        } catch (const std::exception& e) {
          results[i] = {{"pass", false}, {"detail", e.what()}};
        }
      }
    }));
  }
  for (auto& f : pool) f.get();
  json out = {{"kmax", kmax}};
  json list = json::array();
  bool ok = true;
  for (size_t i = 0; i < checks.size(); ++i) {
    json r = results[i];
    r["name"] = checks[i].first;
    ok = ok && r["pass"].get<bool>();
    list.push_back(r);
  }
  out["checks"] = list;
  out["pass"] = ok;
  if (!ok) throw NumericFailure("verify-all found failures", out);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2,1) principal series toolkit"};
  app.require_subcommand(1);
  std::string output;

  DfunArgs dfun;
  auto* c_dfun = app.add_subcommand("dfun", "little-d polynomial d^j_{m1,m2}(theta)");
  c_dfun->add_option("--j", dfun.j)->required();
  c_dfun->add_option("--m1", dfun.m1)->required();
  c_dfun->add_option("--m2", dfun.m2)->required();
  c_dfun->add_option("--theta", dfun.theta, "evaluate at these angles");

  CgArgs cga;
  auto* c_cg = app.add_subcommand("cg", "Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m>");
  for (auto [flag, dst] : {std::pair{"--j1", &cga.j1}, {"--m1", &cga.m1}, {"--j2", &cga.j2}, {"--m2", &cga.m2},
                           {"--j", &cga.j}, {"--m", &cga.m}}) {
    c_cg->add_option(flag, *dst)->required();
  }

  ThreejArgs tja;
  auto* c_3j = app.add_subcommand("threej", "Wigner 3j symbol");
  for (auto [flag, dst] : {std::pair{"--j1", &tja.j1}, {"--j2", &tja.j2}, {"--j3", &tja.j3}, {"--m1", &tja.m1},
                           {"--m2", &tja.m2}, {"--m3", &tja.m3}}) {
    c_3j->add_option(flag, *dst)->required();
  }

  WignerArgs wa;
  auto* c_w = app.add_subcommand("wigner-eval", "evaluate W^{(j,n)}_{m1,m2} on a U(2) element");
  c_w->add_option("--j", wa.j)->required();
  c_w->add_option("--n", wa.n)->required();
  c_w->add_option("--m1", wa.m1)->required();
  c_w->add_option("--m2", wa.m2)->required();
  c_w->add_option("--euler", wa.euler, "zeta psi theta phi")->delimiter(',');
  c_w->add_option("--matrix", wa.matrix, "re/im of g00 g01 g10 g11")->delimiter(',');

  int trials = 100;
  unsigned seed = 7;
  auto* c_st = app.add_subcommand("structure", "Lie algebra identities");
  auto* c_sv = c_st->add_subcommand("verify", "check brackets, Cayley transform and Iwasawa data");
  c_sv->add_option("--trials", trials);
  c_sv->add_option("--seed", seed);
  c_st->require_subcommand(1);

  ActionArgs aa;
  auto* c_am = app.add_subcommand("action-matrix", "matrix of dl(X) on K-types up to jmax");
  c_am->add_option("--program,--op", aa.program, "e.g. \"v(a2)*v(-a2)\"")->required();
  c_am->add_option("--delta", aa.delta)->required();
  c_am->add_option("--jmax", aa.jmax)->required();
  c_am->add_option("--format", aa.format)->check(CLI::IsMember({"json", "csv"}));
  c_am->add_option("--lambda", aa.lambda, "also evaluate at this lambda");
  c_am->add_option("--threads", aa.threads);

  ClassifyArgs ca;
  auto* c_cl = app.add_subcommand("classify", "Weyl chamber and composition series");
  c_cl->add_option("--delta", ca.delta)->required();
  c_cl->add_option("--lambda", ca.lambda)->required();
  c_cl->add_option("--kmax", ca.kmax);
  c_cl->add_option("--diagram", ca.diagram)->check(CLI::IsMember({"svg", "txt"}));

  ClassifyArgs da;
  da.diagram = "svg";
  auto* c_dg = app.add_subcommand("diagram", "K-type lattice diagram");
  c_dg->add_option("--delta", da.delta)->required();
  c_dg->add_option("--lambda", da.lambda)->required();
  c_dg->add_option("--kmax", da.kmax);
  c_dg->add_option("--format", da.diagram)->check(CLI::IsMember({"svg", "txt"}));

  IntertwineArgs ia;
  auto* c_it = app.add_subcommand("intertwine", "long intertwining operator on one K-type row");
  c_it->add_option("--j", ia.j)->required();
  c_it->add_option("--m1", ia.m1)->required();
  c_it->add_option("--delta", ia.delta)->required();
  c_it->add_option("--lambda", ia.lambda, "real or complex, e.g. 2.5+0.5i")->required();
  c_it->add_option("--path", ia.path)->check(CLI::IsMember({"closed", "gammasum", "quadrature", "all"}));
  c_it->add_option("--tol", ia.tol);

  int vkmax = 8, vthreads = 0;
  auto* c_va = app.add_subcommand("verify-all", "run every identity suite");
  c_va->add_option("--kmax", vkmax);
  c_va->add_option("--threads", vthreads);

  app.add_option("-o,--output", output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::string text;
    if (*c_dfun) text = dump(run_dfun(dfun));
    else if (*c_cg) text = dump(run_cg(cga));
    else if (*c_3j) text = dump(run_threej(tja));
    else if (*c_w) text = dump(run_wigner(wa));
    else if (*c_st) text = dump(run_structure_verify(trials, seed));
    else if (*c_am) {
      aa.threads = aa.threads > 0 ? aa.threads : default_threads();
      text = run_action_matrix(aa);
    } else if (*c_cl) {
      ca.output = output;
      output.clear();
      text = run_classify(ca);
    } else if (*c_dg) {
      long d = parse_integer(da.delta, "delta"), l = parse_integer(da.lambda, "lambda");
      if (da.kmax < 0 || da.kmax > 64) throw UsageError("--kmax must lie in [0, 64]");
      text = emit_diagram(d, l, da.kmax, diagram_format(da.diagram));
      if (!chamber_classify(d, l)) std::cerr << "warning: unclassified character, bare lattice drawn\n";
    } else if (*c_it) text = dump(run_intertwine(ia));
    else if (*c_va) {
      if (vkmax < 0 || vkmax > 16) throw UsageError("--kmax must lie in [0, 16]");
      text = dump(run_verify_all(vkmax, vthreads > 0 ? vthreads : default_threads()));
    }
    write_out(text, output);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const NumericFailure& e) {
    std::cout << dump(e.report);
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << dump(json{{"error", e.what()}});
    return 1;
  }
}
