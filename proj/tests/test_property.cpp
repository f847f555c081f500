#include <doctest.h>

#include "ggs/cancel.hpp"
#include "ggs/randgen.hpp"
#include "ggs/render.hpp"
#include "support.hpp"

using namespace ggs;
using namespace ggs::test;

// Seeded random-instance harness: the definition-based oracle is the ground
// truth for the sweep, Smith-normal-form homology for the limit pages, and
// the cancellation engine must respect every conservation law on the way to
// the core flow.
TEST_CASE("random structured complexes: sweep vs oracle and E-infinity vs homology") {
  Rng rng(0x5eed5eedULL);
  for (int i = 0; i < 120; ++i) {
    GGSPair pair = random_structured_pair(rng, 12);
    ChainComplex cc = build_complex(pair);
    REQUIRE(cc.size() <= 12);
    REQUIRE(check_d2(cc).ok);
    REQUIRE_MESSAGE(check_structure(cc).ok(), pair_to_text(pair));

    CrossValidation cv = cross_validate(cc);
    REQUIRE_MESSAGE(cv.ok, cv.detail << "\n" << pair_to_text(pair));

    SweepResult sweep = sssa(cc);
    HomologyResult h = homology(cc);
    bool einf_matches = einf_ranks_by_grade(cc, sweep) == h.betti;
    REQUIRE_MESSAGE(einf_matches, pair_to_text(pair));

    // oracle page ranks are monotone and torsion-free on these inputs
    OracleResult oracle = oracle_pages(cc);
    for (size_t r = 1; r < oracle.pages.size(); ++r)
      for (size_t p = 0; p < oracle.pages[r].entries.size(); ++p) {
        REQUIRE(oracle.pages[r].entries[p].rank <= oracle.pages[r - 1].entries[p].rank);
        REQUIRE(!oracle.pages[r].entries[p].torsion);
      }
  }
}

TEST_CASE("random structured complexes: reduction reaches a core flow lawfully") {
  Rng rng(0xabcdef01ULL);
  for (int i = 0; i < 60; ++i) {
    GGSPair pair = random_structured_pair(rng, 12);
    ReductionTrace trace = run_to_core(pair);
    REQUIRE_MESSAGE(trace.core_flow, pair_to_text(pair));
    ValidationReport rep = check_conservation(trace);
    std::string detail = render_report(rep) + pair_to_text(pair);
    REQUIRE_MESSAGE(rep.ok(), detail);

    SweepResult sweep = sssa(trace.initial_complex);
    size_t pivots = 0;
    for (const auto& m : sweep.marks) pivots += m.type == MarkType::PrimaryPivot;
    REQUIRE(trace.steps.size() == pivots);

    for (const auto& step : trace.steps) {
      ChainComplex rebuilt = build_complex(step.pair);
      REQUIRE(rebuilt.delta == step.complex.delta);
    }
  }
}
