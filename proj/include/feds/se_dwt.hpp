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

#ifndef FEDS_SE_DWT_HPP_
#define FEDS_SE_DWT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "feds/chunk.hpp"
#include "feds/common.hpp"
#include "feds/crypto.hpp"
#include "feds/wavelet.hpp"

namespace feds {

// Per-block coefficient planes at the three confidentiality levels.
// Packed widths: level1 4x10 = 40 bits, level2 4x10 + 4x10 + 4x11 = 124
// bits, level3 48x10 = 480 bits; 644 bits per 512-bit block in total.
struct LevelPlanes {
  std::array<int32_t, 4> level1;   // 2ndLL raster
  std::array<int32_t, 12> level2;  // 2ndHL, 2ndLH, 2ndHH rasters
  std::array<int32_t, 48> level3;  // 1stHL, 1stLH, 1stHH rasters

  bool operator==(const LevelPlanes&) const = default;
};

inline constexpr size_t kLevel1Bits = 40;
inline constexpr size_t kLevel2Bits = 124;
inline constexpr size_t kLevel3Bits = 480;
inline constexpr size_t kBlockPlainBits = 512;
inline constexpr size_t kBlockPackedBits =
    kLevel1Bits + kLevel2Bits + kLevel3Bits;

LevelPlanes split_planes(const SubbandSet& subbands);
SubbandSet merge_planes(const LevelPlanes& planes);

// The confidential half of a protected chunk. level2_prot is empty when the
// level-2 stream rides in the public fragment instead.
struct PrivateFragment {
  uint64_t chunk_index = 0;
  uint32_t side = 0;
  bool level2_in_public = false;
  Iv128 iv{};
  Bytes level1_ct;
  Bytes level2_prot;
  Digest256 integrity_tag{};
};

// The disclosable half; safe to store on untrusted nodes.
struct PublicFragment {
  uint64_t chunk_index = 0;
  uint32_t side = 0;
  bool level2_in_public = false;
  Bytes level2_prot;  // only in level2-public mode
  Bytes level3_prot;
};

// Hash-derived pads for the XOR layers. Both bind the key, the chunk IV and
// the block index, so equal neighboring blocks still receive unrelated pads.
// Preimage layout: key | iv | block_index (8-byte big-endian) | coeff bits.
std::array<uint8_t, 32> keystream2(const Key128& key, const Iv128& iv,
                                   uint64_t block_index,
                                   ByteSpan level1_bits);
std::array<uint8_t, 64> keystream3(const Key128& key, const Iv128& iv,
                                   uint64_t block_index,
                                   ByteSpan level2_bits);

// Rejects IV reuse within one protection session.
class IvRegistry {
 public:
  void check_and_insert(const Iv128& iv);

 private:
  std::set<Iv128> seen_;
};

struct DwtOptions {
  bool level2_public = false;
  unsigned workers = 1;
};

// Protects one chunk: per 8x8 block, level-shift, two-level 5/3 transform,
// pack; the level-1 stream is AES-128-CTR encrypted, level-2 fields are
// XORed with keystream2 of the plain level-1 bits, level-3 fields with
// keystream3 of the plain level-2 bits. Supply `registry` to enforce
// one-IV-per-chunk across a run.
std::pair<PrivateFragment, PublicFragment> protect_chunk(
    const Chunk& chunk, const Key128& key, const Iv128& iv,
    const DwtOptions& options = {}, IvRegistry* registry = nullptr);

// Exact inverse. Verifies the integrity tag before any wavelet inversion
// (IntegrityFailure), and reports LikelyWrongKey when decrypted private
// coefficients fall outside their certified ranges. Level-3 data is never
// range-checked: a flipped public bit must stay confined to its own tile.
Chunk restore_chunk(const PrivateFragment& priv, const PublicFragment& pub,
                    const Key128& key, unsigned workers = 1);

// Wire format: 16-byte header (magic "FEDW", version, kind, side,
// chunk_index, big-endian), then the streams in declared order.
Bytes serialize_private(const PrivateFragment& frag);
Bytes serialize_public(const PublicFragment& frag);
PrivateFragment parse_private(ByteSpan bytes);
PublicFragment parse_public(ByteSpan bytes);

// Packed plaintext coefficient streams of a chunk, without any protection.
// The analysis battery uses these as the "plain" side of bit-level
// comparisons against the protected streams.
struct PlainPlanes {
  Bytes level1;  // 5 bytes per block
  Bytes level2;  // 124 bits per block, bit-concatenated
  Bytes level3;  // 60 bytes per block
};
PlainPlanes plain_planes(const Chunk& chunk, unsigned workers = 1);

}  // namespace feds

#endif  // FEDS_SE_DWT_HPP_
