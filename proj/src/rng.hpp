// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace textrec {

// Deterministic 64-bit generator: xoshiro256++ seeded through splitmix64.
// All distribution transforms are implemented here so that a given seed
// yields the same draw sequence on every platform (the standard library
// distributions make no such guarantee).
//
// Substreams: derive(id) produces an independent generator keyed on the
// construction seed and the id, not on the current draw position. Each
// augmentation stage and each sample gets its own substream, so enabling
// or disabling one stage never shifts another stage's draws.
class Rng {
public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double next_double();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

  // Uniform integer on [lo, hi], inclusive. Requires lo <= hi.
  int64_t uniform_int(int64_t lo, int64_t hi);

  // Box-Muller; two uniforms consumed per call, no cached spare.
  double normal(double mean, double stddev);

  // True with probability p.
  bool bernoulli(double p);

  // Independent substream keyed on (construction seed, id).
  Rng derive(uint64_t id) const;

  uint64_t seed() const { return seed_; }

private:
  uint64_t seed_;
  uint64_t state_[4];
};

} // namespace textrec
