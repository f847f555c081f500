#include "ggs/randgen.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace ggs {

namespace {

struct Builder {
  GGSPair pair;
  int serial = 0;
  int line_serial = 0;

  std::string sing(char role) {
    std::string id = std::string(1, role) + std::to_string(++serial);
    Nature nat;
    switch (role) {
      case 'r': nat = parse_nature("r"); break;
      case 's': nat = parse_nature("s"); break;
      default: nat = parse_nature("a"); break;
    }
    pair.singularities.push_back(Singularity{id, Kind::regular(), nat, {}});
    return id;
  }

  void line(const std::string& src, int sk, const std::string& dst, int sign) {
    FlowLine l;
    l.id = "e" + std::to_string(++line_serial);
    l.src = GeneratorRef{src, sk, 1};
    l.dst = GeneratorRef{dst, sk - 1, 1};
    l.part = LinePart::Regular;
    l.lifts = {sign};
    pair.lines.push_back(std::move(l));
  }
};

// Each motif is a small flow fragment whose matrix block satisfies the
// structure theorem on its own; direct sums of them stay valid.
int add_motif(Builder& b, Rng& rng, int budget) {
  std::vector<int> sizes{4, 3, 6, 4, 1, 2, 5};
  int which = rng.below(7);
  for (int tries = 0; tries < 7 && sizes[which] > budget; ++tries) which = rng.below(7);
  if (sizes[which] > budget) return 0;
  switch (which) {
    case 0: {  // two repellers over one saddle, double-connected minimum
      std::string r1 = b.sing('r'), r2 = b.sing('r'), s = b.sing('s'), m = b.sing('a');
      b.line(r1, 2, s, +1);
      b.line(r2, 2, s, -1);
      b.line(s, 1, m, +1);
      b.line(s, 1, m, -1);
      return 4;
    }
    case 1: {  // saddle between two sinks
      std::string s = b.sing('s'), a1 = b.sing('a'), a2 = b.sing('a');
      b.line(s, 1, a1, +1);
      b.line(s, 1, a2, -1);
      return 3;
    }
    case 2: {  // paired saddles: both repellers hit both saddles
      std::string r1 = b.sing('r'), r2 = b.sing('r');
      std::string s1 = b.sing('s'), s2 = b.sing('s');
      std::string a1 = b.sing('a'), a2 = b.sing('a');
      b.line(r1, 2, s1, +1);
      b.line(r1, 2, s2, +1);
      b.line(r2, 2, s1, -1);
      b.line(r2, 2, s2, -1);
      b.line(s1, 1, a1, +1);
      b.line(s1, 1, a2, -1);
      b.line(s2, 1, a1, -1);
      b.line(s2, 1, a2, +1);
      return 6;
    }
    case 3: {  // two saddles around two sinks (a circle's worth of H_1)
      std::string s1 = b.sing('s'), s2 = b.sing('s');
      std::string a1 = b.sing('a'), a2 = b.sing('a');
      b.line(s1, 1, a1, +1);
      b.line(s1, 1, a2, -1);
      b.line(s2, 1, a1, -1);
      b.line(s2, 1, a2, +1);
      return 4;
    }
    case 4: {  // isolated singularity
      b.sing("rsa"[rng.below(3)]);
      return 1;
    }
    case 5: {  // saddle double-connected to one sink
      std::string s = b.sing('s'), a = b.sing('a');
      b.line(s, 1, a, +1);
      b.line(s, 1, a, -1);
      return 2;
    }
    default: {  // three repellers over one saddle row: two connect, one does not
      std::string r1 = b.sing('r'), r2 = b.sing('r'), r3 = b.sing('r');
      std::string s = b.sing('s'), a = b.sing('a');
      b.line(r1, 2, s, +1);
      b.line(r3, 2, s, -1);
      b.line(s, 1, a, +1);
      b.line(s, 1, a, -1);
      return 5;
    }
  }
}

}  // namespace

GGSPair random_structured_pair(Rng& rng, int max_dim) {
  Builder b;
  b.pair.name = "random";
  b.pair.orientable = true;
  int budget = 1 + rng.below(max_dim);
  while (budget > 0) {
    int used = add_motif(b, rng, budget);
    if (used == 0) break;
    budget -= used;
  }
  if (b.pair.singularities.empty()) b.sing('a');

  // Negate random saddle basis vectors: that flips a whole Delta_1 column and
  // a whole Delta_2 row at once, so the opposite-signed pair structure
  // survives (flipping a k=0 or k=2 vector would break one pair entry).
  std::map<std::string, bool> flip;
  for (const auto& s : b.pair.singularities)
    flip[s.id] = nature_numbers(s.nature)[1] > 0 && rng.coin();
  for (auto& l : b.pair.lines)
    if (flip[l.src.sing] != flip[l.dst.sing])
      for (int& v : l.lifts) v = -v;

  // Random grading-compatible interleave of the generator order.
  std::vector<GeneratorRef> order = generators(b.pair);
  auto shuffle_span = [&](int k) {
    int lo = 0;
    while (lo < static_cast<int>(order.size()) && order[lo].k < k) ++lo;
    int hi = lo;
    while (hi < static_cast<int>(order.size()) && order[hi].k == k) ++hi;
    for (int i = hi - 1; i > lo; --i) std::swap(order[i], order[lo + rng.below(i - lo + 1)]);
  };
  for (int k = 0; k < 3; ++k) shuffle_span(k);
  b.pair.order = order;
  return b.pair;
}

}  // namespace ggs
