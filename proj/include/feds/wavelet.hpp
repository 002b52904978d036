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

#ifndef FEDS_WAVELET_HPP_
#define FEDS_WAVELET_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace feds {

// 8x8 tile of signed samples. In the pixel domain entries are level-shifted
// bytes in [-128, 127].
using Block8 = std::array<int32_t, 64>;

// Two-level dyadic decomposition of one 8x8 block. First-level detail
// subbands are 4x4, second-level subbands 2x2, all row-major. The
// first-level LL quadrant is consumed by the second level and never emitted.
//
// Naming: first letter = horizontal filter, second = vertical filter.
// Certified value ranges (inputs in [-128, 127]):
//   l1_HL +-383, l1_LH +-384, l1_HH +-511
//   l2_LL +-338, l2_HL +-468, l2_LH +-468, l2_HH +-648
struct SubbandSet {
  std::array<int32_t, 16> l1_HL;
  std::array<int32_t, 16> l1_LH;
  std::array<int32_t, 16> l1_HH;
  std::array<int32_t, 4> l2_LL;
  std::array<int32_t, 4> l2_HL;
  std::array<int32_t, 4> l2_LH;
  std::array<int32_t, 4> l2_HH;

  bool operator==(const SubbandSet&) const = default;
};

inline constexpr int32_t kBoundL1HL = 383;
inline constexpr int32_t kBoundL1LH = 384;
inline constexpr int32_t kBoundL1HH = 511;
inline constexpr int32_t kBoundL2LL = 338;
inline constexpr int32_t kBoundL2HL = 468;
inline constexpr int32_t kBoundL2LH = 468;
inline constexpr int32_t kBoundL2HH = 648;

// One level of the reversible 5/3 lifting filter on an even-length signal.
//   high[n] = x(2n+1) - floor((x(2n) + x(2n+2)) / 2)
//   low[n]  = x(2n)   + floor((high[n-1] + high[n] + 2) / 4)
// Boundaries use whole-sample symmetric extension (the edge sample is the
// mirror axis and is not repeated), so x(-1) = x(1), x(N) = x(N-2) and
// high[-1] = high[0].
void fwd53_1d(std::span<const int32_t> signal, std::span<int32_t> low,
              std::span<int32_t> high);

// Exact inverse of fwd53_1d for every integer signal.
void inv53_1d(std::span<const int32_t> low, std::span<const int32_t> high,
              std::span<int32_t> signal);

// Convenience forms returning freshly allocated halves / signal.
std::pair<std::vector<int32_t>, std::vector<int32_t>> fwd53_1d(
    std::span<const int32_t> signal);
std::vector<int32_t> inv53_1d(std::span<const int32_t> low,
                              std::span<const int32_t> high);

// Two-level 2D transform of one pixel-domain block (entries in [-128, 127]).
// Throws RangeViolation when an output exceeds its certified subband bound,
// which cannot happen for byte-valued inputs.
SubbandSet fwd53_block(const Block8& block);

// Exact inverse: inv53_block(fwd53_block(b)) == b for every byte block.
Block8 inv53_block(const SubbandSet& subbands);

}  // namespace feds

#endif  // FEDS_WAVELET_HPP_
