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
#include <cstring>
#include <string>

#include "feds/errors.hpp"

namespace feds {

bool is_valid_chunk_side(uint32_t side) {
  return side >= 8 && (side & (side - 1)) == 0;
}

std::vector<Chunk> chunk_stream(ByteSpan input, uint32_t side) {
  if (!is_valid_chunk_side(side)) {
    fail(Errc::kInvalidSide,
         "chunk side must be a power of two multiple of 8, got " +
             std::to_string(side));
  }
  std::vector<Chunk> chunks;
  const uint64_t cap = uint64_t{side} * side;
  uint64_t off = 0;
  uint64_t idx = 0;
  while (off < input.size()) {
    uint64_t take = std::min<uint64_t>(cap, input.size() - off);
    Chunk c;
    c.index = idx++;
    c.side = side;
    c.payload_len = take;
    c.data.assign(cap, 0);
    std::memcpy(c.data.data(), input.data() + off, take);
    chunks.push_back(std::move(c));
    off += take;
  }
  return chunks;
}

Bytes unchunk(std::vector<Chunk> chunks, uint64_t original_len) {
  std::sort(chunks.begin(), chunks.end(),
            [](const Chunk& a, const Chunk& b) { return a.index < b.index; });
  uint64_t total = 0;
  for (size_t i = 0; i < chunks.size(); ++i) {
    if (chunks[i].index != i) {
      fail(Errc::kMissingChunk, "expected chunk " + std::to_string(i) +
                                    ", found index " +
                                    std::to_string(chunks[i].index));
    }
    if (chunks[i].payload_len > chunks[i].capacity()) {
      fail(Errc::kLengthMismatch, "payload exceeds chunk capacity");
    }
    total += chunks[i].payload_len;
  }
  if (total != original_len) {
    fail(Errc::kLengthMismatch,
         "payload sum " + std::to_string(total) + " != original length " +
             std::to_string(original_len));
  }
  Bytes out;
  out.reserve(original_len);
  for (const Chunk& c : chunks) {
    out.insert(out.end(), c.data.begin(), c.data.begin() + c.payload_len);
  }
  return out;
}

}  // namespace feds
