#pragma once

#include <map>
#include <string>
#include <vector>

#include "ggs/intmat.hpp"
#include "ggs/model.hpp"

namespace ggs {

// One hyperbolic critical point of the morsified Morse-Smale flow. Named
// <generator-address>#<copy> with 1-based copies for determinism.
struct CriticalPoint {
  std::string name;
  int index = 0;  // Morse index, equals the generator's chain index
  GeneratorRef gen;
  int copy = 0;  // 0-based
};

struct MorseEdge {
  int src = 0;  // point positions in MorseGraph::points
  int dst = 0;
  int sign = 0;
  std::string line_id;
  int lift_index = 0;
};

struct MorseGraph {
  std::vector<CriticalPoint> points;
  std::vector<MorseEdge> edges;
};

// The multivalued lift h and projection p of the morsification, combinatorially:
// generator address -> point positions; the projection is each point's gen field.
struct LiftMap {
  std::map<std::string, std::vector<int>> lifts;
};

struct MorseExpansion {
  MorseGraph graph;
  LiftMap lift;
};

// Expands a pair to its morsified flow graph per the Thm 4.1 catalog: one
// point per generator, except saddle-cone generators (two index-1 points) and
// cross-cap repellers/attractors (declared lift count). Each flow line
// contributes one signed edge per lift sign.
// Throws when a cross-cap generator's multiplicity is ambiguous (two or more
// incident fold lines and no lifts= annotation).
MorseExpansion expand(const GGSPair& pair);

// Boundary matrix of the Morse complex: entry (p, q) = sum of edge signs from
// q to p, points ordered index-ascending then by name.
IntMat morse_boundary(const MorseGraph& graph);

// Point order used by morse_boundary.
std::vector<int> morse_point_order(const MorseGraph& graph);

// Consistency of the lift data: (d^m)^2 = 0; under the orientable flag every
// index-1 point's incoming pair and outgoing pair are opposite-signed; the
// projection of any lift of g is g.
ValidationReport validate_lift(const GGSPair& pair, const MorseGraph& graph, const LiftMap& lift);

// Directed DOT rendering, edge label = sign.
std::string morse_dot(const MorseGraph& graph);

}  // namespace ggs
