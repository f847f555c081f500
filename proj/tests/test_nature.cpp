#include <doctest.h>

#include "ggs/nature.hpp"
#include "ggs/randgen.hpp"

using namespace ggs;

TEST_CASE("nature numbers per Def 3.5") {
  CHECK(nature_numbers(parse_nature("sr")) == std::array<int, 3>{0, 1, 1});
  CHECK(nature_numbers(parse_nature("a")) == std::array<int, 3>{1, 0, 0});
  // the triple-crossing word s.s.a; written s2a in the text form
  Nature ssa{{Letter::Saddle, Letter::Saddle, Letter::Attract}};
  CHECK(nature_numbers(ssa) == std::array<int, 3>{1, 2, 0});
  CHECK(nature_numbers(parse_nature("s2a")) == std::array<int, 3>{1, 2, 0});
  CHECK(parse_nature("s2a") == ssa);
}

TEST_CASE("greedy tokenization: ss and su are single letters") {
  Nature n = parse_nature("ssa");
  REQUIRE(n.word.size() == 2);
  CHECK(n.word[0] == Letter::SaddleStable);
  CHECK(n.word[1] == Letter::Attract);
  CHECK(nature_numbers(n) == std::array<int, 3>{1, 1, 0});

  Nature m = parse_nature("su2r");
  REQUIRE(m.word.size() == 3);
  CHECK(m.word[0] == Letter::SaddleUnstable);
  CHECK(m.word[1] == Letter::SaddleUnstable);
  CHECK(m.word[2] == Letter::Repel);
}

TEST_CASE("exponents and text round trip") {
  CHECK(nature_text(parse_nature("r3")) == "r3");
  CHECK(nature_text(parse_nature("rrr")) == "r3");
  CHECK(nature_text(parse_nature("a2s2r")) == "a2s2r");
  CHECK(parse_nature(nature_text(parse_nature("ssa2"))) == parse_nature("ssa2"));
}

TEST_CASE("malformed words name the offending token") {
  CHECK_THROWS_WITH_AS(parse_nature(""), doctest::Contains("empty"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_nature("sxr"), doctest::Contains("'x'"), std::invalid_argument);
  CHECK_THROWS_AS(parse_nature("a0"), std::invalid_argument);
}

TEST_CASE("additivity under concatenation") {
  Rng rng(42);
  const Letter alphabet[5] = {Letter::Attract, Letter::Saddle, Letter::SaddleStable,
                              Letter::SaddleUnstable, Letter::Repel};
  for (int trial = 0; trial < 50; ++trial) {
    Nature u, v;
    for (int i = rng.below(6); i > 0; --i) u.word.push_back(alphabet[rng.below(5)]);
    for (int i = 1 + rng.below(6); i > 0; --i) v.word.push_back(alphabet[rng.below(5)]);
    auto eu = nature_numbers(u), ev = nature_numbers(v), euv = nature_numbers(concat(u, v));
    for (int k = 0; k < 3; ++k) CHECK(euv[k] == eu[k] + ev[k]);
  }
}

TEST_CASE("letter removal by grade and slot") {
  Nature n = parse_nature("s2a");
  CHECK(nature_text(remove_letter(n, 1, 1)) == "sa");
  CHECK(nature_text(remove_letter(n, 1, 2)) == "sa");
  CHECK(nature_text(remove_letter(n, 0, 1)) == "s2");
  CHECK_THROWS(remove_letter(n, 2, 1));
  CHECK_THROWS(remove_letter(n, 1, 3));
}
