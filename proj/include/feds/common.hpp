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

#ifndef FEDS_COMMON_HPP_
#define FEDS_COMMON_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace feds {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

using Key128 = std::array<uint8_t, 16>;
using Iv128 = std::array<uint8_t, 16>;
using Key256 = std::array<uint8_t, 32>;
using Digest256 = std::array<uint8_t, 32>;

std::string hex_encode(ByteSpan data);
Bytes hex_decode(const std::string& hex);

}  // namespace feds

#endif  // FEDS_COMMON_HPP_
