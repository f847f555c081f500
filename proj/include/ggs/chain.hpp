#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggs/intmat.hpp"
#include "ggs/model.hpp"

namespace ggs {

// Graded generator list plus the square boundary matrix Delta holding the
// blocks Delta_1 (k=1 -> 0) and Delta_2 (k=2 -> 1); all other entries zero.
// Strictly upper triangular in any grading-compatible order.
struct ChainComplex {
  std::vector<GeneratorRef> gens;
  IntMat delta;
  bool orientable = false;

  int size() const { return static_cast<int>(gens.size()); }
  int grade(int pos) const { return gens[pos].k; }
  int position_of(const GeneratorRef& g) const;  // -1 when absent
  // First/one-past-last positions of grade k.
  std::pair<int, int> grade_span(int k) const;
};

// GGS characteristic-sign contribution of one flow line (Def 5.2):
// regular line -> its single sign; fold line -> the sum of its ordered pair;
// saddle-cone-adjacent line -> the common sign if the pair agrees, else 0.
int line_contribution(const FlowLine& line, const GGSPair& pair);

// Sum of line contributions over all lines hi -> lo. Indices must be
// consecutive (hi.k = lo.k + 1).
int intersection_number(const GGSPair& pair, const GeneratorRef& hi, const GeneratorRef& lo);

// Builds the chain complex; generator order is the pair's declared order if
// present, else grade-then-declaration. Throws on condition-H violations or a
// bad declared order.
ChainComplex build_complex(const GGSPair& pair);

struct D2Check {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;  // 0-based (row, col) of a nonzero product entry
};

D2Check check_d2(const ChainComplex& cc);

// Thm 5.2 clauses on an orientable complex: (a) entries in {-1,0,1},
// (b) every Delta_1 column zero or an opposite-signed pair, (c) every
// Delta_2 row likewise.
ValidationReport check_structure(const ChainComplex& cc);

struct HomologyResult {
  std::array<int, 3> betti{0, 0, 0};
  std::array<std::vector<long long>, 3> torsion;

  bool operator==(const HomologyResult& o) const { return betti == o.betti && torsion == o.torsion; }
};

// H_k = ker Delta_k / im Delta_{k+1} over Z via Smith normal form.
HomologyResult homology(const ChainComplex& cc);

// Lemma 5.1: through a saddle-cone generator, every Delta_2/Delta_1
// entry pair has a vanishing product.
ValidationReport check_lemma_cone(const ChainComplex& cc, const GGSPair& pair);

}  // namespace ggs
