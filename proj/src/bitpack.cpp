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

#include "feds/bitpack.hpp"

#include <string>

#include "feds/errors.hpp"

namespace feds {

void BitWriter::put(int32_t value, unsigned width) {
  if (width == 0 || width > 32) fail(Errc::kRangeViolation, "bad field width");
  if (width < 32) {
    int32_t lo = -(int32_t{1} << (width - 1));
    int32_t hi = (int32_t{1} << (width - 1)) - 1;
    if (value < lo || value > hi) {
      fail(Errc::kRangeViolation, "value " + std::to_string(value) +
                                      " does not fit " +
                                      std::to_string(width) + " bits");
    }
  }
  uint32_t pattern = static_cast<uint32_t>(value) &
                     (width == 32 ? ~uint32_t{0} : ((uint32_t{1} << width) - 1));
  for (unsigned i = width; i-- > 0;) {
    if (bits_ % 8 == 0) out_.push_back(0);
    uint8_t bit = static_cast<uint8_t>((pattern >> i) & 1u);
    out_.back() |= static_cast<uint8_t>(bit << (7 - bits_ % 8));
    ++bits_;
  }
}

void BitWriter::put_bits(ByteSpan src, size_t src_bit, size_t width) {
  for (size_t i = 0; i < width; ++i) {
    size_t p = src_bit + i;
    uint8_t bit = (src[p / 8] >> (7 - p % 8)) & 1u;
    if (bits_ % 8 == 0) out_.push_back(0);
    out_.back() |= static_cast<uint8_t>(bit << (7 - bits_ % 8));
    ++bits_;
  }
}

int32_t BitReader::get(unsigned width) {
  if (width == 0 || width > 32) fail(Errc::kRangeViolation, "bad field width");
  if (pos_ + width > bit_len_) fail(Errc::kLengthMismatch, "bit string exhausted");
  uint32_t pattern = 0;
  for (unsigned i = 0; i < width; ++i) {
    uint8_t bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
    pattern = (pattern << 1) | bit;
    ++pos_;
  }
  // Sign-extend from bit width-1.
  if (width < 32 && (pattern & (uint32_t{1} << (width - 1)))) {
    pattern |= ~((uint32_t{1} << width) - 1);
  }
  return static_cast<int32_t>(pattern);
}

BitBuf pack_bits(std::span<const int32_t> values,
                 std::span<const unsigned> widths) {
  if (values.size() != widths.size()) {
    fail(Errc::kLengthMismatch, "values/widths size mismatch");
  }
  BitWriter w;
  for (size_t i = 0; i < values.size(); ++i) w.put(values[i], widths[i]);
  return w.take();
}

std::vector<int32_t> unpack_bits(const BitBuf& bits,
                                 std::span<const unsigned> widths) {
  size_t total = 0;
  for (unsigned w : widths) total += w;
  if (bits.bit_len != total) {
    fail(Errc::kLengthMismatch, "bit length " + std::to_string(bits.bit_len) +
                                    " != sum of widths " +
                                    std::to_string(total));
  }
  BitReader r(bits);
  std::vector<int32_t> out;
  out.reserve(widths.size());
  for (unsigned w : widths) out.push_back(r.get(w));
  return out;
}

}  // namespace feds
