#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "su21/action.hpp"

namespace su21 {

enum class Chamber { I1, I2, II1, II2, III1, III2 };
enum class Sub { V_fin, V_disc_plus, V_disc_minus, V_H, Q_plus, Q_minus };

std::string chamber_name(Chamber c);
std::string sub_name(Sub s);

enum class Reflection { a1, a2 };

struct WeylResult {
  Rational delta, lambda;
  bool integral() const;
};
// one simple reflection
WeylResult weyl_reflect(Reflection w, const Rational& delta, const Rational& lambda);
// "a1 a2" means w_a1 w_a2: the rightmost letter acts first
WeylResult weyl_word(const std::vector<Reflection>& word, const Rational& delta, const Rational& lambda);
std::vector<Reflection> parse_word(const std::string& text);

// nullopt when lambda +- delta is odd, on the lambda = 0 wall, or between chambers
std::optional<Chamber> chamber_classify(long delta, long lambda);

// the Weyl word labeling the chamber's modules (w chi lands in I1)
std::vector<Reflection> chamber_word(Chamber c);

struct LatticePoint {
  int k, l;
  auto operator<=>(const LatticePoint&) const = default;
};
bool lattice_cond(int k, int l);

std::vector<Sub> chamber_subs(Chamber c);
// throws DomainError when the tag does not occur in the chamber
bool in_sub(Sub s, int k, int l, long delta, long lambda);
std::optional<Sub> region_of(int k, int l, long delta, long lambda);
std::set<LatticePoint> subquotient_ktypes(Sub s, long delta, long lambda, int kmax);
// minimal (k, then |l|, then l) point of the region within kmax
std::optional<LatticePoint> lowest_ktype(Sub s, long delta, long lambda, int kmax);

struct FiltrationLevel {
  std::set<Sub> members;  // closed under the action
  std::string quotient;   // the next level modulo this one
};
struct CompositionSeries {
  Chamber chamber;
  std::vector<FiltrationLevel> levels;  // proper submodules, smallest first
};
CompositionSeries composition_series(long delta, long lambda);  // throws on unclassified input

struct ClosureReport {
  bool pass = true;
  long sources = 0;
  long terms = 0;
  long zero_crossings = 0;
  std::vector<std::string> counterexamples;
};
ClosureReport verify_closure(long delta, long lambda, int kmax);
// same walk over caller-supplied levels
ClosureReport verify_closure(const CompositionSeries& series, long delta, long lambda, int kmax);

struct DimensionCheck {
  long enumerated = 0;
  long weyl = 0;
  bool pass() const { return enumerated == weyl; }
};
DimensionCheck finite_dim_check(long delta, long lambda);

}  // namespace su21
