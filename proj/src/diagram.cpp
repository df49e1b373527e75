#include "su21/diagram.hpp"

#include <fmt/format.h>

#include <sstream>

namespace su21 {

namespace {

int shade(Sub s) {
  switch (s) {
    case Sub::V_fin:
    case Sub::V_disc_plus:
    case Sub::V_disc_minus: return 0;
    case Sub::Q_plus:
    case Sub::Q_minus: return 1;
    case Sub::V_H: return 2;
  }
  return 2;
}

constexpr char kChar[3] = {'#', '+', '.'};
constexpr const char* kFill[3] = {"#808080", "#bfbfbf", "#f2f2f2"};
constexpr const char* kShadeName[3] = {"dark gray", "medium gray", "light gray"};

std::string jn_label(int k, int l, long delta) {
  KType t = ktype_of_lattice(k, l, static_cast<int>(delta));
  return "(" + t.j.str() + "," + t.n.str() + ")";
}

struct Label {
  Sub sub;
  LatticePoint at;
};

std::vector<Label> lowest_labels(long delta, long lambda, int kmax) {
  std::vector<Label> out;
  auto c = chamber_classify(delta, lambda);
  for (Sub s : chamber_subs(*c)) {
    if (auto p = lowest_ktype(s, delta, lambda, kmax)) out.push_back({s, *p});
  }
  return out;
}

std::string wall_text(const Wall& w) {
  return fmt::format("k{}l = {}", w.sum ? '+' : '-', w.value);
}

std::string text_diagram(long delta, long lambda, int kmax) {
  auto chamber = chamber_classify(delta, lambda);
  std::ostringstream os;
  if (!chamber) {
    os << "WARNING: (delta, lambda) = (" << delta << ", " << lambda
       << ") is unclassified; showing the bare lattice\n";
  } else {
    os << "chamber " << chamber_name(*chamber) << "  (delta, lambda) = (" << delta << ", " << lambda << ")\n";
  }
  for (int l = kmax; l >= -kmax; --l) {
    os << fmt::format("{:>4} |", l);
    for (int k = 0; k <= kmax; ++k) {
      char ch = ' ';
      if (lattice_cond(k, l)) {
        ch = 'o';
        if (chamber) ch = kChar[shade(*region_of(k, l, delta, lambda))];
      }
      os << ' ' << ch;
    }
    os << '\n';
  }
  os << "     +" << std::string(2 * (kmax + 1), '-') << "  k\n      ";
  for (int k = 0; k <= kmax; ++k) os << ' ' << (k % 10);
  os << '\n';
  if (!chamber) return os.str();
  os << "legend:\n";
  for (const auto& lab : lowest_labels(delta, lambda, kmax)) {
    int s = shade(lab.sub);
    os << fmt::format("  {} {:<11} {:<8} lowest (k,l) = ({},{})  (j,n) = {}\n", kChar[s], kShadeName[s],
                      sub_name(lab.sub), lab.at.k, lab.at.l, jn_label(lab.at.k, lab.at.l, delta));
  }
  os << "walls:";
  for (const auto& w : chamber_walls(delta, lambda)) os << "  " << wall_text(w);
  os << '\n';
  return os.str();
}

std::string svg_diagram(long delta, long lambda, int kmax) {
  auto chamber = chamber_classify(delta, lambda);
  const double cell = 28, margin = 60;
  const double width = 2 * margin + kmax * cell + 240, height = 2 * margin + 2 * kmax * cell + 40;
  auto X = [&](double k) { return margin + k * cell; };
  auto Y = [&](double l) { return margin + 30 + (kmax - l) * cell; };
  std::ostringstream os;
  os << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" font-family=\"sans-serif\" "
      "font-size=\"12\">\n",
      width, height);
  os << fmt::format("<rect width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", width, height);
  if (!chamber) {
    os << fmt::format(
        "<text x=\"{:.0f}\" y=\"24\" fill=\"#b00000\" font-weight=\"bold\">WARNING: (delta, lambda) = ({}, {}) is "
        "unclassified; bare lattice</text>\n",
        margin, delta, lambda);
  } else {
    os << fmt::format("<text x=\"{:.0f}\" y=\"24\" font-weight=\"bold\">chamber {}  (delta, lambda) = ({}, {})</text>\n",
                      margin, chamber_name(*chamber), delta, lambda);
  }
  // axes
  os << fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\"/>\n", X(0), Y(0),
                    X(kmax + 0.5), Y(0));
  os << fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\"/>\n", X(0),
                    Y(kmax + 0.5), X(0), Y(-kmax - 0.5));
  os << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">k</text>\n", X(kmax + 0.7), Y(0) + 4);
  os << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">l</text>\n", X(0) - 4, Y(kmax + 0.7));
  for (int k = 0; k <= kmax; k += 2) {
    os << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"9\" text-anchor=\"middle\">{}</text>\n", X(k),
                      Y(-kmax) + 20, k);
  }
  for (int l = -kmax; l <= kmax; l += 2) {
    os << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"9\" text-anchor=\"end\">{}</text>\n", X(0) - 8,
                      Y(l) + 3, l);
  }
  for (int k = 0; k <= kmax; ++k) {
    for (int l = -k; l <= k; l += 2) {
      const char* fill = "white";
      if (chamber) fill = kFill[shade(*region_of(k, l, delta, lambda))];
      os << fmt::format(
          "<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"{:.1f}\" fill=\"{}\" stroke=\"black\" stroke-width=\"0.5\"/>\n",
          X(k), Y(l), cell * 0.32, fill);
    }
  }
  if (!chamber) {
    os << "</svg>\n";
    return os.str();
  }
  // walls k +- l = value - 1, clipped to the cone k >= |l|
  for (const auto& w : chamber_walls(delta, lambda)) {
    const double c = double(w.value) - 1;
    double k0 = c / 2, l0 = w.sum ? c / 2 : -c / 2;
    double k1 = kmax + 0.5, l1 = w.sum ? c - k1 : k1 - c;
    if (k0 < 0) {
      k0 = 0;
      l0 = w.sum ? c : -c;
    }
    if (k1 < k0) continue;
    os << fmt::format(
        "<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\" stroke-width=\"1.5\" "
        "stroke-dasharray=\"5,3\"/>\n",
        X(k0), Y(l0), X(k1), Y(l1));
  }
  auto labels = lowest_labels(delta, lambda, kmax);
  for (const auto& lab : labels) {
    os << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"10\">{}</text>\n", X(lab.at.k) + 9,
                      Y(lab.at.l) - 9, jn_label(lab.at.k, lab.at.l, delta));
  }
  double ly = margin + 30;
  const double lx = X(kmax) + 50;
  os << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-weight=\"bold\">lowest (j,n)</text>\n", lx, ly);
  for (const auto& lab : labels) {
    ly += 22;
    int s = shade(lab.sub);
    os << fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"14\" height=\"14\" fill=\"{}\" stroke=\"black\"/>\n",
                      lx, ly - 11, kFill[s]);
    os << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{} {}</text>\n", lx + 20, ly, sub_name(lab.sub),
                      jn_label(lab.at.k, lab.at.l, delta));
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

DiagramFormat diagram_format(const std::string& name) {
  if (name == "txt") return DiagramFormat::txt;
  if (name == "svg") return DiagramFormat::svg;
  throw DomainError("diagram format must be txt or svg");
}

std::vector<Wall> chamber_walls(long delta, long lambda) {
  auto c = chamber_classify(delta, lambda);
  if (!c) return {};
  const long p = lambda + delta, m = lambda - delta;
  switch (*c) {
    case Chamber::I1: return {{true, p}, {false, m}};
    case Chamber::I2: return {{true, -m}, {false, -p}};
    case Chamber::II1: return {{true, p}, {true, -m}};
    case Chamber::II2: return {{true, -m}, {true, p}};
    case Chamber::III1: return {{false, m}, {false, -p}};
    case Chamber::III2: return {{false, -p}, {false, m}};
  }
  return {};
}

std::string emit_diagram(long delta, long lambda, int kmax, DiagramFormat format) {
  if (kmax < 0 || kmax > 200) throw DomainError("kmax must lie in [0, 200]");
  return format == DiagramFormat::txt ? text_diagram(delta, lambda, kmax) : svg_diagram(delta, lambda, kmax);
}

}  // namespace su21
