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

#ifndef FEDS_CHUNK_HPP_
#define FEDS_CHUNK_HPP_

#include <cstdint>
#include <vector>

#include "feds/common.hpp"

namespace feds {

// A square byte matrix carved from the input stream; any byte stream is
// treated as a sequence of side x side gray "images". The final chunk is
// zero-padded; payload_len records how much of it is real content.
struct Chunk {
  uint64_t index = 0;
  uint32_t side = 0;
  Bytes data;               // side * side bytes, row-major
  uint64_t payload_len = 0; // <= side * side

  uint64_t capacity() const { return uint64_t{side} * side; }
};

bool is_valid_chunk_side(uint32_t side);

// Cuts `input` into chunks of side x side bytes. side must be a power of two
// multiple of 8. Empty input yields an empty list.
std::vector<Chunk> chunk_stream(ByteSpan input, uint32_t side);

// Reassembles the original stream. Chunks may arrive in any order; they are
// sorted by index. The payload lengths must add up to original_len.
Bytes unchunk(std::vector<Chunk> chunks, uint64_t original_len);

}  // namespace feds

#endif  // FEDS_CHUNK_HPP_
