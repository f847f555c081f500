#include "ggs/nature.hpp"

#include <stdexcept>

namespace ggs {

int letter_grade(Letter l) {
  switch (l) {
    case Letter::Attract: return 0;
    case Letter::Repel: return 2;
    default: return 1;
  }
}

std::string letter_text(Letter l) {
  switch (l) {
    case Letter::Attract: return "a";
    case Letter::Saddle: return "s";
    case Letter::SaddleStable: return "ss";
    case Letter::SaddleUnstable: return "su";
    case Letter::Repel: return "r";
  }
  return "?";
}

std::array<int, 3> nature_numbers(const Nature& n) {
  std::array<int, 3> eta{0, 0, 0};
  for (Letter l : n.word) ++eta[letter_grade(l)];
  return eta;
}

Nature parse_nature(std::string_view text) {
  Nature n;
  size_t pos = 0;
  if (text.empty()) throw std::invalid_argument("nature word: empty");
  while (pos < text.size()) {
    Letter l;
    size_t tok = pos;
    char c = text[pos];
    if (c == 'a') {
      l = Letter::Attract;
      ++pos;
    } else if (c == 'r') {
      l = Letter::Repel;
      ++pos;
    } else if (c == 's') {
      // longest match: "ss" and "su" are the subscripted saddle letters
      if (pos + 1 < text.size() && text[pos + 1] == 's') {
        l = Letter::SaddleStable;
        pos += 2;
      } else if (pos + 1 < text.size() && text[pos + 1] == 'u') {
        l = Letter::SaddleUnstable;
        pos += 2;
      } else {
        l = Letter::Saddle;
        ++pos;
      }
    } else {
      throw std::invalid_argument("nature word: unknown letter '" + std::string(1, c) +
                                  "' in token '" + std::string(text.substr(tok)) + "'");
    }
    long long count = 1;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      count = std::stoll(std::string(text.substr(start, pos - start)));
      if (count <= 0)
        throw std::invalid_argument("nature word: exponent must be positive in token '" +
                                    std::string(text.substr(tok, pos - tok)) + "'");
    }
    for (long long i = 0; i < count; ++i) n.word.push_back(l);
  }
  return n;
}

std::string nature_text(const Nature& n) {
  std::string out;
  size_t i = 0;
  while (i < n.word.size()) {
    size_t j = i;
    while (j < n.word.size() && n.word[j] == n.word[i]) ++j;
    out += letter_text(n.word[i]);
    if (j - i > 1) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

Nature remove_letter(const Nature& n, int grade, int slot) {
  Nature out;
  int seen = 0;
  bool removed = false;
  for (Letter l : n.word) {
    if (!removed && letter_grade(l) == grade && ++seen == slot) {
      removed = true;
      continue;
    }
    out.word.push_back(l);
  }
  if (!removed)
    throw std::invalid_argument("nature word '" + nature_text(n) + "' has no grade-" +
                                std::to_string(grade) + " letter in slot " + std::to_string(slot));
  return out;
}

Nature concat(const Nature& a, const Nature& b) {
  Nature out = a;
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

}  // namespace ggs
