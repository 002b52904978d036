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

#include <vector>

#include "doctest.h"
#include "feds/errors.hpp"
#include "feds/rng.hpp"

using namespace feds;

namespace {

bool throws_code(Errc code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("pack_bits encodes two's complement MSB-first") {
  SUBCASE("minus one in ten bits is all ones") {
    std::vector<int32_t> v{-1};
    std::vector<unsigned> w{10};
    BitBuf b = pack_bits(v, w);
    CHECK(b.bit_len == 10);
    REQUIRE(b.bytes.size() == 2);
    CHECK(b.bytes[0] == 0xFF);
    CHECK(b.bytes[1] == 0xC0);  // 11 then 6 zero pad bits
  }
  SUBCASE("zeros pack to zero bits") {
    std::vector<int32_t> v{0, 0, 0, 0};
    std::vector<unsigned> w{10, 10, 10, 10};
    BitBuf b = pack_bits(v, w);
    CHECK(b.bit_len == 40);
    REQUIRE(b.bytes.size() == 5);
    for (uint8_t byte : b.bytes) CHECK(byte == 0);
  }
  SUBCASE("338 in ten bits") {
    // 338 = 0b0101010010
    std::vector<int32_t> v{338};
    std::vector<unsigned> w{10};
    BitBuf b = pack_bits(v, w);
    REQUIRE(b.bytes.size() == 2);
    CHECK(b.bytes[0] == 0b01010100);
    CHECK(b.bytes[1] == 0b10000000);
  }
}

TEST_CASE("pack_bits rejects values that do not fit") {
  std::vector<unsigned> w{10};
  std::vector<int32_t> high{512};
  std::vector<int32_t> low{-513};
  CHECK(throws_code(Errc::kRangeViolation, [&] { pack_bits(high, w); }));
  CHECK(throws_code(Errc::kRangeViolation, [&] { pack_bits(low, w); }));
  // Boundary values fit.
  std::vector<int32_t> edge{511};
  CHECK_NOTHROW(pack_bits(edge, w));
  edge[0] = -512;
  CHECK_NOTHROW(pack_bits(edge, w));
}

TEST_CASE("unpack_bits inverts pack_bits and checks length") {
  std::vector<int32_t> v{-1, 338, 0};
  std::vector<unsigned> w{10, 10, 11};
  BitBuf b = pack_bits(v, w);
  CHECK(unpack_bits(b, w) == v);

  BitBuf wrong = b;
  wrong.bit_len -= 1;
  CHECK(throws_code(Errc::kLengthMismatch, [&] { unpack_bits(wrong, w); }));
}

TEST_CASE("pack/unpack round-trips 10,000 random vectors") {
  Rng rng(0x9c0ffee5);
  const unsigned width_choices[3] = {8, 10, 11};
  for (int trial = 0; trial < 10000; ++trial) {
    const size_t n = 1 + rng.next_below(16);
    std::vector<int32_t> values(n);
    std::vector<unsigned> widths(n);
    for (size_t i = 0; i < n; ++i) {
      const unsigned w = width_choices[rng.next_below(3)];
      const int32_t span = int32_t{1} << w;
      widths[i] = w;
      values[i] =
          static_cast<int32_t>(rng.next_below(span)) - (span / 2);
    }
    BitBuf packed = pack_bits(values, widths);
    size_t total = 0;
    for (unsigned w : widths) total += w;
    CHECK(packed.bit_len == total);
    CHECK(unpack_bits(packed, widths) == values);
  }
}
