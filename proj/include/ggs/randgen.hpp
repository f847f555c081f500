#pragma once

#include <cstdint>

#include "ggs/model.hpp"

namespace ggs {

// Deterministic splitmix64 stream; kept platform-independent on purpose so
// seeded harness runs reproduce everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(n)); }

  bool coin() { return (next() & 1) != 0; }

 private:
  uint64_t state_;
};

// Random orientable pair (all-regular kinds, one generator per singularity)
// whose boundary matrix is strictly upper triangular over {-1,0,1} with
// Delta^2 = 0 and the Thm 5.2 column/row structure, dimension <= max_dim.
// Built by composing small verified motifs, interleaving the generator order
// within grades, and negating random basis vectors.
GGSPair random_structured_pair(Rng& rng, int max_dim);

}  // namespace ggs
