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

#include "feds/chunk.hpp"

#include <algorithm>

#include "doctest.h"
#include "feds/errors.hpp"
#include "support.hpp"

using namespace feds;
using feds::testsupport::random_bytes;

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

TEST_CASE("chunk_stream basic shapes") {
  SUBCASE("empty input gives no chunks") {
    CHECK(chunk_stream({}, 8).empty());
  }
  SUBCASE("exact fit gives one unpadded chunk") {
    Bytes in(64, 0xAB);
    auto chunks = chunk_stream(in, 8);
    REQUIRE(chunks.size() == 1);
    CHECK(chunks[0].payload_len == 64);
    CHECK(chunks[0].data == in);
  }
  SUBCASE("100 bytes split 64 + 36 with 28 zero pad bytes") {
    Rng rng(77);
    Bytes in = random_bytes(rng, 100);
    std::replace(in.begin(), in.end(), uint8_t{0}, uint8_t{1});  // visible pad
    auto chunks = chunk_stream(in, 8);
    REQUIRE(chunks.size() == 2);
    CHECK(chunks[0].payload_len == 64);
    CHECK(chunks[1].payload_len == 36);
    int zeros = 0;
    for (size_t i = 36; i < 64; ++i) zeros += chunks[1].data[i] == 0;
    CHECK(zeros == 28);
  }
}

TEST_CASE("chunk_stream validates the side") {
  Bytes in(16, 1);
  CHECK(throws_code(Errc::kInvalidSide, [&] { chunk_stream(in, 0); }));
  CHECK(throws_code(Errc::kInvalidSide, [&] { chunk_stream(in, 12); }));
  CHECK(throws_code(Errc::kInvalidSide, [&] { chunk_stream(in, 24); }));
  CHECK(throws_code(Errc::kInvalidSide, [&] { chunk_stream(in, 4); }));
  CHECK_NOTHROW(chunk_stream(in, 8));
  CHECK_NOTHROW(chunk_stream(in, 1024));
}

TEST_CASE("unchunk inverts chunk_stream") {
  Rng rng(123);
  SUBCASE("out-of-order chunks are resorted by index") {
    Bytes in = random_bytes(rng, 200);
    auto chunks = chunk_stream(in, 8);
    std::reverse(chunks.begin(), chunks.end());
    CHECK(unchunk(std::move(chunks), in.size()) == in);
  }
  SUBCASE("payload sum mismatch is rejected") {
    Bytes in = random_bytes(rng, 100);
    auto chunks = chunk_stream(in, 8);
    CHECK(throws_code(Errc::kLengthMismatch,
                      [&] { unchunk(chunks, in.size() + 1); }));
  }
  SUBCASE("missing chunk is detected") {
    Bytes in = random_bytes(rng, 200);
    auto chunks = chunk_stream(in, 8);
    REQUIRE(chunks.size() == 4);
    chunks.erase(chunks.begin() + 1);
    CHECK(throws_code(Errc::kMissingChunk,
                      [&] { unchunk(chunks, in.size()); }));
  }
}

TEST_CASE("chunk round-trip identity for 1,000 random inputs") {
  Rng rng(0xC0DE);
  const uint32_t sides[4] = {8, 16, 64, 256};
  for (int trial = 0; trial < 1000; ++trial) {
    const size_t len = rng.next_below(1000001);
    Bytes in = random_bytes(rng, len);
    const uint32_t side = sides[rng.next_below(4)];
    auto chunks = chunk_stream(in, side);
    uint64_t payload_total = 0;
    for (const Chunk& c : chunks) payload_total += c.payload_len;
    CHECK(payload_total == len);
    CHECK(unchunk(std::move(chunks), len) == in);
  }
}
