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

#ifndef FEDS_BITPACK_HPP_
#define FEDS_BITPACK_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "feds/common.hpp"

namespace feds {

// A bit string: MSB-first within each byte, possibly ending mid-byte.
// Trailing pad bits in the last byte are always zero.
struct BitBuf {
  Bytes bytes;
  size_t bit_len = 0;

  bool operator==(const BitBuf&) const = default;
};

// Appends signed fields MSB-first. Coefficients are stored in two's
// complement: unique zero and plain sign extension on read.
class BitWriter {
 public:
  void put(int32_t value, unsigned width);
  // Appends `width` bits taken from src starting at src_bit (MSB-first).
  void put_bits(ByteSpan src, size_t src_bit, size_t width);

  size_t bit_len() const { return bits_; }
  BitBuf take() { return BitBuf{std::move(out_), bits_}; }

 private:
  Bytes out_;
  size_t bits_ = 0;
};

class BitReader {
 public:
  BitReader(ByteSpan bytes, size_t bit_len)
      : bytes_(bytes), bit_len_(bit_len) {}
  explicit BitReader(const BitBuf& buf)
      : bytes_(buf.bytes), bit_len_(buf.bit_len) {}

  // Reads a two's complement field of `width` bits, sign-extended.
  int32_t get(unsigned width);
  size_t remaining() const { return bit_len_ - pos_; }

 private:
  ByteSpan bytes_;
  size_t bit_len_;
  size_t pos_ = 0;
};

// Packs values[i] into widths[i] bits each, concatenated in order.
// Throws RangeViolation when a value does not fit its width.
BitBuf pack_bits(std::span<const int32_t> values,
                 std::span<const unsigned> widths);

// Inverse of pack_bits; requires bits.bit_len == sum(widths).
std::vector<int32_t> unpack_bits(const BitBuf& bits,
                                 std::span<const unsigned> widths);

}  // namespace feds

#endif  // FEDS_BITPACK_HPP_
