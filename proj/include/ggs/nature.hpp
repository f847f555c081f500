#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace ggs {

// Letters of a nature word: a (attracting), s / s_s / s_u (saddle behaviors),
// r (repelling). s_s and s_u are spelled "ss" and "su" in the text form.
enum class Letter { Attract, Saddle, SaddleStable, SaddleUnstable, Repel };

// Chain index the letter contributes to: a -> 0, saddles -> 1, r -> 2.
int letter_grade(Letter l);

std::string letter_text(Letter l);

struct Nature {
  std::vector<Letter> word;

  bool operator==(const Nature& o) const { return word == o.word; }
};

// Letter counts per chain index (eta_0, eta_1, eta_2).
std::array<int, 3> nature_numbers(const Nature& n);

// Greedy tokenization of `a|s|ss|su|r`, each with an optional positive
// exponent ("r2" = rr). Throws std::invalid_argument naming the offending
// token on malformed input.
Nature parse_nature(std::string_view text);

// Run-length text form ("r2", "sa", "ss" for a single s_s).
std::string nature_text(const Nature& n);

// Word with the `slot`-th (1-based) letter of the given grade removed.
// Throws if no such letter exists.
Nature remove_letter(const Nature& n, int grade, int slot);

// Concatenation (the paper's "union of natures").
Nature concat(const Nature& a, const Nature& b);

}  // namespace ggs
