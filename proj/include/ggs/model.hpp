#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ggs/kind.hpp"
#include "ggs/nature.hpp"

namespace ggs {

// One h^i_k(x): chain-index k in {0,1,2}, slot i in 1..eta_k(x).
struct GeneratorRef {
  std::string sing;
  int k = 0;
  int slot = 1;

  auto operator<=>(const GeneratorRef&) const = default;

  std::string address() const;  // "<sid>:<k>:<i>"
  std::string label() const;    // "h^i_k(sid)", the paper-style table label
};

GeneratorRef parse_generator_ref(const std::string& text);

struct Singularity {
  std::string id;
  Kind kind;
  Nature nature;
  std::optional<int> lift_count;  // cross-cap morsification multiplicity
};

enum class LinePart { Regular, Fold };

struct FlowLine {
  std::string id;
  GeneratorRef src;  // index k
  GeneratorRef dst;  // index k-1
  LinePart part = LinePart::Regular;
  std::vector<int> lifts;  // 1 or 2 characteristic signs, each +1/-1
};

// 1-stratum of the singular part; both endpoints must be singular kinds.
// Used only by the condition-H validator.
struct FoldArc {
  std::string a, b;
};

struct GGSPair {
  std::string name;
  std::vector<Singularity> singularities;  // declaration order is meaningful
  std::vector<FlowLine> lines;
  std::vector<FoldArc> folds;
  bool orientable = false;
  std::vector<GeneratorRef> order;  // optional explicit generator order

  const Singularity* find(const std::string& id) const;
  int declaration_index(const std::string& id) const;  // -1 when absent
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;  // nature-convention notes, never fatal

  bool ok() const { return violations.empty(); }
};

// Condition-H and structural validation: fold arcs joining a cross-cap to a
// double/triple crossing, lift-sign arities, dangling references, generator
// slots out of range. Violations are data, not failures.
ValidationReport validate_condition_h(const GGSPair& pair);

// All generators, grouped by chain index k = 0,1,2; within a grade,
// declaration order then slot.
std::vector<GeneratorRef> generators(const GGSPair& pair);

// Cone-kind singularity contributing a saddle generator (Def 5.2(iii) case).
bool is_saddle_cone(const GGSPair& pair, const GeneratorRef& g);

// Morsification copies of one generator: 2 for a saddle-cone generator,
// the declared lift count for cross-cap repellers/attractors, else 1.
int lift_copies(const GGSPair& pair, const GeneratorRef& g);

}  // namespace ggs
