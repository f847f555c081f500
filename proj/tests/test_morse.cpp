#include <doctest.h>

#include "ggs/morse.hpp"
#include "support.hpp"

using namespace ggs;
using namespace ggs::test;

TEST_CASE("a saddle cone lifts to two index-1 points") {
  GGSPair pair;
  pair.name = "cone";
  pair.orientable = true;
  pair.singularities.push_back(Singularity{"x", parse_kind("D2"), parse_nature("r2"), {}});
  pair.singularities.push_back(Singularity{"y", parse_kind("C2"), parse_nature("s"), {}});
  FlowLine l;
  l.id = "u";
  l.src = GeneratorRef{"x", 2, 1};
  l.dst = GeneratorRef{"y", 1, 1};
  l.lifts = {1, 1};
  pair.lines.push_back(l);

  MorseExpansion exp = expand(pair);
  int saddles = 0;
  for (const auto& p : exp.graph.points) saddles += p.index == 1;
  CHECK(saddles == 2);
  CHECK(exp.graph.edges.size() == 2);
  CHECK(exp.lift.lifts.at("y:1:1").size() == 2);
  // one edge to each lifted saddle
  CHECK(exp.graph.edges[0].dst != exp.graph.edges[1].dst);
}

TEST_CASE("fold lines expand to their declared sign pair") {
  // repelling cross-cap over a stable saddle cross-cap, connected through the fold
  GGSPair pair;
  pair.name = "fold";
  pair.orientable = true;
  pair.singularities.push_back(Singularity{"x", parse_kind("W2"), parse_nature("r"), {}});
  pair.singularities.push_back(Singularity{"y", parse_kind("W2"), parse_nature("ss"), {}});
  pair.folds.push_back(FoldArc{"x", "y"});
  FlowLine l;
  l.id = "u";
  l.src = GeneratorRef{"x", 2, 1};
  l.dst = GeneratorRef{"y", 1, 1};
  l.part = LinePart::Fold;
  l.lifts = {1, -1};
  pair.lines.push_back(l);

  MorseExpansion exp = expand(pair);
  REQUIRE(exp.graph.edges.size() == 2);
  CHECK(exp.graph.edges[0].sign == 1);
  CHECK(exp.graph.edges[1].sign == -1);

  // with a two-point lift of x the pair splits across the copies
  pair.singularities[0].lift_count = 2;
  exp = expand(pair);
  REQUIRE(exp.graph.edges.size() == 2);
  CHECK(exp.graph.edges[0].src != exp.graph.edges[1].src);
}

TEST_CASE("a pure Morse pair lifts to an isomorphic graph") {
  GGSPair pair = load_fixture("morse_sphere.ggs");
  MorseExpansion exp = expand(pair);
  CHECK(exp.graph.points.size() == generators(pair).size());
  CHECK(exp.graph.edges.size() == pair.lines.size());
}

TEST_CASE("edge count is the total number of lift signs") {
  for (const auto& name : kAllFixtures) {
    GGSPair pair = load_fixture(name);
    size_t total = 0;
    for (const auto& l : pair.lines) total += l.lifts.size();
    CHECK(expand(pair).graph.edges.size() == total);
  }
}

TEST_CASE("morse boundary squares to zero on the fixtures") {
  for (const auto& name : kAllFixtures) {
    IntMat d = morse_boundary(expand(load_fixture(name)).graph);
    CHECK_MESSAGE((d * d).is_zero(), name);
  }
  CHECK(morse_boundary(MorseGraph{}).rows() == 0);
}

TEST_CASE("double fold connection projects to zero but keeps two edges") {
  GGSPair pair = load_fixture("fold_crosscaps.ggs");
  MorseExpansion exp = expand(pair);
  IntMat d = morse_boundary(exp.graph);
  CHECK(d.is_zero());  // +1 - 1 between the same pair of points
  CHECK(exp.graph.edges.size() == 2);
}

TEST_CASE("lift validation accepts the fixtures") {
  for (const auto& name : kAllFixtures) {
    GGSPair pair = load_fixture(name);
    MorseExpansion exp = expand(pair);
    ValidationReport rep = validate_lift(pair, exp.graph, exp.lift);
    CHECK_MESSAGE(rep.ok(), name);
  }
}

TEST_CASE("equal-signed separatrices violate the orientable convention") {
  GGSPair pair;
  pair.name = "bad-signs";
  pair.orientable = true;
  pair.singularities.push_back(Singularity{"s", parse_kind("R"), parse_nature("s"), {}});
  pair.singularities.push_back(Singularity{"a1", parse_kind("R"), parse_nature("a"), {}});
  pair.singularities.push_back(Singularity{"a2", parse_kind("R"), parse_nature("a"), {}});
  for (int i = 0; i < 2; ++i) {
    FlowLine l;
    l.id = "e" + std::to_string(i);
    l.src = GeneratorRef{"s", 1, 1};
    l.dst = GeneratorRef{i == 0 ? "a1" : "a2", 0, 1};
    l.lifts = {1};  // both +1
    pair.lines.push_back(l);
  }
  MorseExpansion exp = expand(pair);
  ValidationReport rep = validate_lift(pair, exp.graph, exp.lift);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].code == "saddle-signs");

  pair.orientable = false;  // the convention only binds orientable pairs
  CHECK(validate_lift(pair, exp.graph, exp.lift).ok());
}

TEST_CASE("a lift map collapsing two generators fails the round trip") {
  GGSPair pair = load_fixture("morse_sphere.ggs");
  MorseExpansion exp = expand(pair);
  LiftMap broken = exp.lift;
  broken.lifts["r1:2:1"] = broken.lifts["r2:2:1"];
  ValidationReport rep = validate_lift(pair, exp.graph, broken);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].code == "round-trip");
}

TEST_CASE("ambiguous cross-cap multiplicity is an explicit error") {
  GGSPair pair;
  pair.name = "ambiguous";
  pair.singularities.push_back(Singularity{"x", parse_kind("W3"), parse_nature("r"), {}});
  pair.singularities.push_back(Singularity{"y1", parse_kind("W2"), parse_nature("ss"), {}});
  pair.singularities.push_back(Singularity{"y2", parse_kind("W2"), parse_nature("ss"), {}});
  for (int i = 0; i < 2; ++i) {
    FlowLine l;
    l.id = "f" + std::to_string(i);
    l.src = GeneratorRef{"x", 2, 1};
    l.dst = GeneratorRef{i == 0 ? "y1" : "y2", 1, 1};
    l.part = LinePart::Fold;
    l.lifts = {1, -1};
    pair.lines.push_back(l);
  }
  CHECK_THROWS_WITH_AS(expand(pair), doctest::Contains("x"), std::runtime_error);
  pair.singularities[0].lift_count = 2;
  CHECK(expand(pair).lift.lifts.at("x:2:1").size() == 2);
}

TEST_CASE("morse graph DOT output") {
  std::string dot = morse_dot(expand(load_fixture("morse_sphere.ggs")).graph);
  CHECK(dot.find("digraph morse") != std::string::npos);
  CHECK(dot.find("\"r1:2:1#1\" -> \"s:1:1#1\"") != std::string::npos);
}
