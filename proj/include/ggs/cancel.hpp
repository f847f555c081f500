#pragma once

#include <string>
#include <vector>

#include "ggs/chain.hpp"
#include "ggs/spectral.hpp"

namespace ggs {

// One homotopical dynamical cancellation. Role names follow the cancellation
// theorem: x1 hosts the cancelled repeller/attractor generator, x2 hosts the
// cancelled saddle generator, x3 hosts the partner.
struct CancellationEvent {
  int r = 0;          // diagonal of the driving primary pivot
  int orig_row = 0;   // 0-based cell in the initial filtration order
  int orig_col = 0;
  GeneratorRef hi, lo, partner;
  int pivot = 0;
  std::string x1, x2, x3;
  Kind x1_kind, x2_kind, x3_kind;
  Nature x1_nature, x2_nature, x3_nature;
  std::string successor;
  Kind successor_kind;
  Nature successor_nature;
  std::vector<std::string> warnings;
};

struct ReductionStep {
  GGSPair pair;          // state after the event
  ChainComplex complex;  // state after the event
  CancellationEvent event;
};

struct ReductionTrace {
  GGSPair initial_pair;
  ChainComplex initial_complex;
  std::vector<ReductionStep> steps;
  bool core_flow = false;
};

// The unique partner forced by the Thm 5.2 row/column structure: for a k=2
// pivot, the other nonzero column in lo's Delta_2 row; for a k=1 pivot, the
// other nonzero row in hi's Delta_1 column. Throws on a zero pivot entry or a
// missing/ambiguous partner.
GeneratorRef find_partner(const ChainComplex& cc, const GeneratorRef& hi, const GeneratorRef& lo);

struct SuccessionInput {
  Singularity x1, x2, x3;
  int cancelled_grade = 2;  // grade of the cancelled non-saddle generator (2 or 0)
  int x1_slot = 1;          // its slot within x1's nature
  int x2_slot = 1;          // cancelled saddle slot within x2's nature
  bool x1_sheet_consumed = false;
  bool x3_sheet_consumed = false;
};

struct SuccessionResult {
  Kind kind;
  Nature nature;
  std::vector<std::string> warnings;
};

// Kind and nature of the successor singularity by case on the saddle host:
// regular saddle concatenates (cone sheets collapse to wedge summands),
// a cone saddle wedges, and a W/D/T saddle splices itself between the sides.
// The nature is the union of the three words minus the two cancelled letters.
SuccessionResult succession(const SuccessionInput& in);

struct CancellationOutcome {
  GGSPair pair;
  ChainComplex complex;
  CancellationEvent event;
};

// Performs one cancellation as a matrix update (delete the cancelled row and
// column, fold the cancelled generator's connections into the partner) plus
// the singularity bookkeeping (three consumed, one successor created, all
// surviving generators re-homed).
CancellationOutcome apply_cancellation(const GGSPair& pair, const ChainComplex& cc,
                                       const GeneratorRef& hi, const GeneratorRef& lo);

// Unfolds the spectral sequence and applies every primary pivot's
// cancellation, diagonal by diagonal, tracking positions through earlier
// merges, until the boundary matrix is zero.
ReductionTrace run_to_core(const GGSPair& pair);

// Prop 6.1 / Cor 6.1 / homology-invariance audit of a trace.
ValidationReport check_conservation(const ReductionTrace& trace);

// Sum of #s over all singularities (invariant across cancellations).
int total_singular_number(const GGSPair& pair);

}  // namespace ggs
