#pragma once

#include <string>
#include <vector>

#include "su21/decomposition.hpp"

namespace su21 {

enum class DiagramFormat { txt, svg };
DiagramFormat diagram_format(const std::string& name);  // throws DomainError

// region boundary k + l = value (sum) or k - l = value, drawn one step below value
struct Wall {
  bool sum;
  long value;
};
std::vector<Wall> chamber_walls(long delta, long lambda);

// three shades: V_fin and V_disc darkest, Q+- medium, V_H lightest;
// an unclassified character gives the bare lattice under a warning banner
std::string emit_diagram(long delta, long lambda, int kmax, DiagramFormat format);

}  // namespace su21
