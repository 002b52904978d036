// Copyright 2026 The feds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FEDS_RNG_HPP_
#define FEDS_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>

namespace feds {

// Deterministic randomness source. Every operation that consumes randomness
// takes an Rng& so a run can be replayed from a seed; production entropy
// comes from Rng::from_entropy(). Raw engine words are mapped to ranges
// by rejection sampling, never through std distributions (their output is
// implementation-defined and would break cross-build reproducibility).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  static Rng from_entropy() {
    std::random_device rd;
    uint64_t seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    return Rng(seed);
  }

  uint64_t next_u64() { return engine_(); }

  uint8_t next_byte() { return static_cast<uint8_t>(engine_() & 0xFF); }

  // Uniform in [0, bound). bound must be nonzero.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  void fill(std::span<uint8_t> out) {
    size_t i = 0;
    while (i + 8 <= out.size()) {
      uint64_t w = engine_();
      for (int b = 0; b < 8; ++b) out[i++] = static_cast<uint8_t>(w >> (8 * b));
    }
    if (i < out.size()) {
      uint64_t w = engine_();
      while (i < out.size()) {
        out[i++] = static_cast<uint8_t>(w & 0xFF);
        w >>= 8;
      }
    }
  }

  // Independent child generator; used to give each parallel trial its own
  // stream so aggregation order never matters.
  Rng spawn() { return Rng(engine_() ^ 0x9E3779B97F4A7C15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace feds

#endif  // FEDS_RNG_HPP_
