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

#include "feds/se_dwt.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "feds/errors.hpp"
#include "feds/parallel.hpp"

namespace feds {

namespace {

constexpr unsigned kWidths1[4] = {10, 10, 10, 10};
constexpr unsigned kWidths2[12] = {10, 10, 10, 10, 10, 10, 10, 10,
                                   11, 11, 11, 11};

constexpr size_t kL1Bytes = 5;    // 40 bits
constexpr size_t kL2Bytes = 16;   // 124 bits + 4 pad bits
constexpr size_t kL3Bytes = 60;   // 480 bits

// Accumulator-based field packing for the per-block hot path. Values are
// already range-certified by fwd53_block, so no per-field checks here;
// pack_bits() remains the checked general-purpose form.
void pack_fields(const int32_t* vals, const unsigned* widths, size_t count,
                 uint8_t* out) {
  uint64_t acc = 0;
  unsigned acc_bits = 0;
  size_t o = 0;
  for (size_t i = 0; i < count; ++i) {
    const unsigned w = widths[i];
    acc = (acc << w) |
          (static_cast<uint64_t>(static_cast<uint32_t>(vals[i])) &
           ((uint64_t{1} << w) - 1));
    acc_bits += w;
    while (acc_bits >= 8) {
      out[o++] = static_cast<uint8_t>(acc >> (acc_bits - 8));
      acc_bits -= 8;
    }
  }
  if (acc_bits > 0) {
    out[o] = static_cast<uint8_t>(acc << (8 - acc_bits));
  }
}

void unpack_fields(const uint8_t* in, const unsigned* widths, size_t count,
                   int32_t* vals) {
  uint64_t acc = 0;
  unsigned acc_bits = 0;
  size_t i_byte = 0;
  for (size_t i = 0; i < count; ++i) {
    const unsigned w = widths[i];
    while (acc_bits < w) {
      acc = (acc << 8) | in[i_byte++];
      acc_bits += 8;
    }
    uint32_t raw =
        static_cast<uint32_t>((acc >> (acc_bits - w)) & ((uint64_t{1} << w) - 1));
    acc_bits -= w;
    if (raw & (uint32_t{1} << (w - 1))) raw |= ~((uint32_t{1} << w) - 1);
    vals[i] = static_cast<int32_t>(raw);
  }
}

// Appends `nbits` MSB-first bits of src to a pre-zeroed dst at bit_off.
void write_bits_at(uint8_t* dst, size_t bit_off, const uint8_t* src,
                   size_t nbits) {
  for (size_t i = 0; i < nbits; i += 8) {
    const unsigned take = static_cast<unsigned>(std::min<size_t>(8, nbits - i));
    uint8_t v = src[i / 8];
    v &= static_cast<uint8_t>(0xFF << (8 - take));
    const size_t p = bit_off + i;
    const unsigned sh = p % 8;
    dst[p / 8] |= static_cast<uint8_t>(v >> sh);
    if (sh != 0 && sh + take > 8) {
      dst[p / 8 + 1] |= static_cast<uint8_t>(v << (8 - sh));
    }
  }
}

// Extracts `nbits` bits starting at bit_off of src into dst (zero padded).
void read_bits_at(const uint8_t* src, size_t src_bytes, size_t bit_off,
                  uint8_t* dst, size_t nbits) {
  for (size_t i = 0; i < nbits; i += 8) {
    const unsigned take = static_cast<unsigned>(std::min<size_t>(8, nbits - i));
    const size_t p = bit_off + i;
    const unsigned sh = p % 8;
    uint8_t v;
    if (sh == 0) {
      v = src[p / 8];
    } else {
      const uint8_t hi = src[p / 8];
      const uint8_t lo = (p / 8 + 1 < src_bytes) ? src[p / 8 + 1] : 0;
      v = static_cast<uint8_t>((hi << sh) | (lo >> (8 - sh)));
    }
    v &= static_cast<uint8_t>(0xFF << (8 - take));
    dst[i / 8] = v;
  }
}

size_t blocks_of(uint32_t side) {
  const size_t bps = side / 8;
  return bps * bps;
}

size_t level2_stream_bytes(size_t nblocks) {
  return (nblocks * kLevel2Bits + 7) / 8;
}

void check_chunk_geometry(const Chunk& chunk) {
  if (chunk.side == 0 || chunk.side % 8 != 0) {
    fail(Errc::kInvalidSide, "chunk side must be a multiple of 8");
  }
  if (chunk.data.size() != chunk.capacity()) {
    fail(Errc::kLengthMismatch, "chunk data size != side^2");
  }
}

struct PackedBlock {
  uint8_t l1[kL1Bytes];
  uint8_t l2[kL2Bytes];
  uint8_t l3[kL3Bytes];
};

PackedBlock pack_block(const Chunk& chunk, size_t b) {
  const size_t bps = chunk.side / 8;
  const size_t row0 = (b / bps) * 8;
  const size_t col0 = (b % bps) * 8;
  Block8 block;
  for (size_t r = 0; r < 8; ++r) {
    const uint8_t* src = chunk.data.data() + (row0 + r) * chunk.side + col0;
    for (size_t c = 0; c < 8; ++c) {
      block[8 * r + c] = static_cast<int32_t>(src[c]) - 128;
    }
  }
  const SubbandSet sub = fwd53_block(block);
  const LevelPlanes planes = split_planes(sub);
  PackedBlock out{};
  pack_fields(planes.level1.data(), kWidths1, 4, out.l1);
  pack_fields(planes.level2.data(), kWidths2, 12, out.l2);
  unsigned w3[48];
  for (auto& w : w3) w = 10;
  pack_fields(planes.level3.data(), w3, 48, out.l3);
  return out;
}

void unpack_block_to_pixels(const uint8_t* l1, const uint8_t* l2,
                            const uint8_t* l3, Chunk& chunk, size_t b,
                            bool check_private_ranges) {
  LevelPlanes planes;
  unpack_fields(l1, kWidths1, 4, planes.level1.data());
  unpack_fields(l2, kWidths2, 12, planes.level2.data());
  unsigned w3[48];
  for (auto& w : w3) w = 10;
  unpack_fields(l3, w3, 48, planes.level3.data());

  if (check_private_ranges) {
    for (int32_t v : planes.level1) {
      if (v < -kBoundL2LL || v > kBoundL2LL) {
        fail(Errc::kLikelyWrongKey,
             "level-1 coefficient " + std::to_string(v) +
                 " outside certified range; key or IV likely wrong");
      }
    }
    for (size_t i = 0; i < 12; ++i) {
      const int32_t bound = (i < 8) ? kBoundL2HL : kBoundL2HH;
      if (planes.level2[i] < -bound || planes.level2[i] > bound) {
        fail(Errc::kLikelyWrongKey,
             "level-2 coefficient " + std::to_string(planes.level2[i]) +
                 " outside certified range; key or IV likely wrong");
      }
    }
  }

  const Block8 block = inv53_block(merge_planes(planes));
  const size_t bps = chunk.side / 8;
  const size_t row0 = (b / bps) * 8;
  const size_t col0 = (b % bps) * 8;
  for (size_t r = 0; r < 8; ++r) {
    uint8_t* dst = chunk.data.data() + (row0 + r) * chunk.side + col0;
    for (size_t c = 0; c < 8; ++c) {
      dst[c] = static_cast<uint8_t>(block[8 * r + c] + 128);
    }
  }
}

void be_store64(uint8_t* p, uint64_t v) {
  for (int i = 7; i >= 0; --i) {
    p[7 - i] = static_cast<uint8_t>(v >> (8 * i));
  }
}

uint64_t be_load64(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

LevelPlanes split_planes(const SubbandSet& s) {
  LevelPlanes p;
  for (size_t i = 0; i < 4; ++i) p.level1[i] = s.l2_LL[i];
  for (size_t i = 0; i < 4; ++i) {
    p.level2[i] = s.l2_HL[i];
    p.level2[4 + i] = s.l2_LH[i];
    p.level2[8 + i] = s.l2_HH[i];
  }
  for (size_t i = 0; i < 16; ++i) {
    p.level3[i] = s.l1_HL[i];
    p.level3[16 + i] = s.l1_LH[i];
    p.level3[32 + i] = s.l1_HH[i];
  }
  return p;
}

SubbandSet merge_planes(const LevelPlanes& p) {
  SubbandSet s;
  for (size_t i = 0; i < 4; ++i) s.l2_LL[i] = p.level1[i];
  for (size_t i = 0; i < 4; ++i) {
    s.l2_HL[i] = p.level2[i];
    s.l2_LH[i] = p.level2[4 + i];
    s.l2_HH[i] = p.level2[8 + i];
  }
  for (size_t i = 0; i < 16; ++i) {
    s.l1_HL[i] = p.level3[i];
    s.l1_LH[i] = p.level3[16 + i];
    s.l1_HH[i] = p.level3[32 + i];
  }
  return s;
}

std::array<uint8_t, 32> keystream2(const Key128& key, const Iv128& iv,
                                   uint64_t block_index,
                                   ByteSpan level1_bits) {
  uint8_t idx[8];
  be_store64(idx, block_index);
  uint8_t bits[kL1Bytes] = {0};
  std::memcpy(bits, level1_bits.data(),
              std::min(level1_bits.size(), kL1Bytes));
  return sha256({ByteSpan(key), ByteSpan(iv), ByteSpan(idx, 8),
                 ByteSpan(bits, kL1Bytes)});
}

std::array<uint8_t, 64> keystream3(const Key128& key, const Iv128& iv,
                                   uint64_t block_index,
                                   ByteSpan level2_bits) {
  uint8_t idx[8];
  be_store64(idx, block_index);
  uint8_t bits[kL2Bytes] = {0};
  std::memcpy(bits, level2_bits.data(),
              std::min(level2_bits.size(), kL2Bytes));
  return sha512({ByteSpan(key), ByteSpan(iv), ByteSpan(idx, 8),
                 ByteSpan(bits, kL2Bytes)});
}

void IvRegistry::check_and_insert(const Iv128& iv) {
  if (!seen_.insert(iv).second) {
    fail(Errc::kInvalidIv, "IV reused within a protection session");
  }
}

std::pair<PrivateFragment, PublicFragment> protect_chunk(
    const Chunk& chunk, const Key128& key, const Iv128& iv,
    const DwtOptions& options, IvRegistry* registry) {
  check_chunk_geometry(chunk);
  if (registry != nullptr) registry->check_and_insert(iv);

  const size_t nblocks = blocks_of(chunk.side);
  Bytes level1_stream(nblocks * kL1Bytes);
  Bytes level3_prot(nblocks * kL3Bytes);
  std::vector<std::array<uint8_t, kL2Bytes>> l2_prot_blocks(nblocks);

  parallel_for(nblocks, options.workers, [&](size_t begin, size_t end) {
    for (size_t b = begin; b < end; ++b) {
      const PackedBlock packed = pack_block(chunk, b);
      std::memcpy(level1_stream.data() + b * kL1Bytes, packed.l1, kL1Bytes);

      // Level 2: XOR with the first 124 bits of keystream2 over the plain
      // level-1 field.
      const auto ks2 = keystream2(key, iv, b, ByteSpan(packed.l1, kL1Bytes));
      auto& l2out = l2_prot_blocks[b];
      for (size_t i = 0; i + 1 < kL2Bytes; ++i) l2out[i] = packed.l2[i] ^ ks2[i];
      l2out[kL2Bytes - 1] =
          packed.l2[kL2Bytes - 1] ^ (ks2[kL2Bytes - 1] & 0xF0);

      // Level 3: XOR with the first 480 bits of keystream3 over the plain
      // level-2 field.
      const auto ks3 = keystream3(key, iv, b, ByteSpan(packed.l2, kL2Bytes));
      uint8_t* l3out = level3_prot.data() + b * kL3Bytes;
      for (size_t i = 0; i < kL3Bytes; ++i) l3out[i] = packed.l3[i] ^ ks3[i];
    }
  });

  // Bit-concatenate the 124-bit level-2 fields (position-addressed, so the
  // result does not depend on the worker split above).
  Bytes level2_prot(level2_stream_bytes(nblocks), 0);
  for (size_t b = 0; b < nblocks; ++b) {
    write_bits_at(level2_prot.data(), b * kLevel2Bits,
                  l2_prot_blocks[b].data(), kLevel2Bits);
  }

  aes128_ctr_xor(key, iv, level1_stream);

  PrivateFragment priv;
  priv.chunk_index = chunk.index;
  priv.side = chunk.side;
  priv.level2_in_public = options.level2_public;
  priv.iv = iv;
  priv.level1_ct = std::move(level1_stream);
  priv.integrity_tag = sha256({ByteSpan(priv.level1_ct), ByteSpan(level2_prot)});

  PublicFragment pub;
  pub.chunk_index = chunk.index;
  pub.side = chunk.side;
  pub.level2_in_public = options.level2_public;
  pub.level3_prot = std::move(level3_prot);
  if (options.level2_public) {
    pub.level2_prot = std::move(level2_prot);
  } else {
    priv.level2_prot = std::move(level2_prot);
  }
  return {std::move(priv), std::move(pub)};
}

Chunk restore_chunk(const PrivateFragment& priv, const PublicFragment& pub,
                    const Key128& key, unsigned workers) {
  if (priv.chunk_index != pub.chunk_index || priv.side != pub.side ||
      priv.level2_in_public != pub.level2_in_public) {
    fail(Errc::kLengthMismatch, "private/public fragments do not match");
  }
  if (priv.side == 0 || priv.side % 8 != 0) {
    fail(Errc::kInvalidSide, "fragment side must be a multiple of 8");
  }
  const size_t nblocks = blocks_of(priv.side);
  const Bytes& level2_prot =
      priv.level2_in_public ? pub.level2_prot : priv.level2_prot;
  if (priv.level1_ct.size() != nblocks * kL1Bytes ||
      level2_prot.size() != level2_stream_bytes(nblocks) ||
      pub.level3_prot.size() != nblocks * kL3Bytes) {
    fail(Errc::kLengthMismatch, "fragment stream sizes do not match side");
  }

  const Digest256 tag = sha256({ByteSpan(priv.level1_ct), ByteSpan(level2_prot)});
  if (tag != priv.integrity_tag) {
    fail(Errc::kIntegrityFailure, "private material integrity tag mismatch");
  }

  Bytes level1_plain = priv.level1_ct;
  aes128_ctr_xor(key, priv.iv, level1_plain);

  Chunk chunk;
  chunk.index = priv.chunk_index;
  chunk.side = priv.side;
  chunk.payload_len = chunk.capacity();
  chunk.data.assign(chunk.capacity(), 0);

  parallel_for(nblocks, workers, [&](size_t begin, size_t end) {
    for (size_t b = begin; b < end; ++b) {
      const uint8_t* l1 = level1_plain.data() + b * kL1Bytes;

      uint8_t l2_prot[kL2Bytes] = {0};
      read_bits_at(level2_prot.data(), level2_prot.size(), b * kLevel2Bits,
                   l2_prot, kLevel2Bits);
      const auto ks2 = keystream2(key, priv.iv, b, ByteSpan(l1, kL1Bytes));
      uint8_t l2[kL2Bytes];
      for (size_t i = 0; i + 1 < kL2Bytes; ++i) l2[i] = l2_prot[i] ^ ks2[i];
      l2[kL2Bytes - 1] = l2_prot[kL2Bytes - 1] ^ (ks2[kL2Bytes - 1] & 0xF0);

      const auto ks3 = keystream3(key, priv.iv, b, ByteSpan(l2, kL2Bytes));
      uint8_t l3[kL3Bytes];
      const uint8_t* l3_prot = pub.level3_prot.data() + b * kL3Bytes;
      for (size_t i = 0; i < kL3Bytes; ++i) l3[i] = l3_prot[i] ^ ks3[i];

      unpack_block_to_pixels(l1, l2, l3, chunk, b,
                             /*check_private_ranges=*/true);
    }
  });
  return chunk;
}

PlainPlanes plain_planes(const Chunk& chunk, unsigned workers) {
  check_chunk_geometry(chunk);
  const size_t nblocks = blocks_of(chunk.side);
  PlainPlanes out;
  out.level1.resize(nblocks * kL1Bytes);
  out.level3.resize(nblocks * kL3Bytes);
  std::vector<std::array<uint8_t, kL2Bytes>> l2_blocks(nblocks);
  parallel_for(nblocks, workers, [&](size_t begin, size_t end) {
    for (size_t b = begin; b < end; ++b) {
      const PackedBlock packed = pack_block(chunk, b);
      std::memcpy(out.level1.data() + b * kL1Bytes, packed.l1, kL1Bytes);
      std::memcpy(l2_blocks[b].data(), packed.l2, kL2Bytes);
      std::memcpy(out.level3.data() + b * kL3Bytes, packed.l3, kL3Bytes);
    }
  });
  out.level2.assign(level2_stream_bytes(nblocks), 0);
  for (size_t b = 0; b < nblocks; ++b) {
    write_bits_at(out.level2.data(), b * kLevel2Bits, l2_blocks[b].data(),
                  kLevel2Bits);
  }
  return out;
}

namespace {

constexpr uint8_t kKindPrivate = 0x01;
constexpr uint8_t kKindPublic = 0x02;
constexpr uint8_t kFlagLevel2Public = 0x10;
constexpr size_t kHeaderBytes = 16;

void write_header(Bytes& out, uint8_t kind, bool l2pub, uint32_t side,
                  uint64_t chunk_index) {
  out.reserve(out.size() + kHeaderBytes);
  out.push_back('F');
  out.push_back('E');
  out.push_back('D');
  out.push_back('W');
  out.push_back(1);  // version
  out.push_back(static_cast<uint8_t>(kind | (l2pub ? kFlagLevel2Public : 0)));
  out.push_back(static_cast<uint8_t>(side >> 8));
  out.push_back(static_cast<uint8_t>(side & 0xFF));
  uint8_t idx[8];
  be_store64(idx, chunk_index);
  out.insert(out.end(), idx, idx + 8);
}

struct Header {
  uint8_t kind;
  bool l2pub;
  uint32_t side;
  uint64_t chunk_index;
};

Header parse_header(ByteSpan bytes, uint8_t expected_kind) {
  if (bytes.size() < kHeaderBytes || bytes[0] != 'F' || bytes[1] != 'E' ||
      bytes[2] != 'D' || bytes[3] != 'W') {
    fail(Errc::kBadFormat, "not a FEDW fragment");
  }
  if (bytes[4] != 1) fail(Errc::kBadFormat, "unsupported fragment version");
  Header h;
  h.kind = bytes[5] & 0x0F;
  h.l2pub = (bytes[5] & kFlagLevel2Public) != 0;
  if (h.kind != expected_kind) {
    fail(Errc::kBadFormat, "fragment kind mismatch");
  }
  h.side = static_cast<uint32_t>(bytes[6]) << 8 | bytes[7];
  h.chunk_index = be_load64(bytes.data() + 8);
  if (h.side == 0 || h.side % 8 != 0) {
    fail(Errc::kBadFormat, "invalid side in fragment header");
  }
  return h;
}

}  // namespace

Bytes serialize_private(const PrivateFragment& frag) {
  Bytes out;
  write_header(out, kKindPrivate, frag.level2_in_public, frag.side,
               frag.chunk_index);
  out.insert(out.end(), frag.iv.begin(), frag.iv.end());
  out.insert(out.end(), frag.level1_ct.begin(), frag.level1_ct.end());
  out.insert(out.end(), frag.level2_prot.begin(), frag.level2_prot.end());
  out.insert(out.end(), frag.integrity_tag.begin(), frag.integrity_tag.end());
  return out;
}

Bytes serialize_public(const PublicFragment& frag) {
  Bytes out;
  write_header(out, kKindPublic, frag.level2_in_public, frag.side,
               frag.chunk_index);
  out.insert(out.end(), frag.level2_prot.begin(), frag.level2_prot.end());
  out.insert(out.end(), frag.level3_prot.begin(), frag.level3_prot.end());
  return out;
}

PrivateFragment parse_private(ByteSpan bytes) {
  const Header h = parse_header(bytes, kKindPrivate);
  const size_t nblocks = blocks_of(h.side);
  const size_t l2_bytes = h.l2pub ? 0 : level2_stream_bytes(nblocks);
  const size_t want =
      kHeaderBytes + 16 + nblocks * kL1Bytes + l2_bytes + 32;
  if (bytes.size() != want) {
    fail(Errc::kBadFormat, "private fragment size mismatch");
  }
  PrivateFragment frag;
  frag.chunk_index = h.chunk_index;
  frag.side = h.side;
  frag.level2_in_public = h.l2pub;
  size_t off = kHeaderBytes;
  std::memcpy(frag.iv.data(), bytes.data() + off, 16);
  off += 16;
  frag.level1_ct.assign(bytes.begin() + off,
                        bytes.begin() + off + nblocks * kL1Bytes);
  off += nblocks * kL1Bytes;
  frag.level2_prot.assign(bytes.begin() + off, bytes.begin() + off + l2_bytes);
  off += l2_bytes;
  std::memcpy(frag.integrity_tag.data(), bytes.data() + off, 32);
  return frag;
}

PublicFragment parse_public(ByteSpan bytes) {
  const Header h = parse_header(bytes, kKindPublic);
  const size_t nblocks = blocks_of(h.side);
  const size_t l2_bytes = h.l2pub ? level2_stream_bytes(nblocks) : 0;
  const size_t want = kHeaderBytes + l2_bytes + nblocks * kL3Bytes;
  if (bytes.size() != want) {
    fail(Errc::kBadFormat, "public fragment size mismatch");
  }
  PublicFragment frag;
  frag.chunk_index = h.chunk_index;
  frag.side = h.side;
  frag.level2_in_public = h.l2pub;
  size_t off = kHeaderBytes;
  frag.level2_prot.assign(bytes.begin() + off, bytes.begin() + off + l2_bytes);
  off += l2_bytes;
  frag.level3_prot.assign(bytes.begin() + off, bytes.end());
  return frag;
}

}  // namespace feds
