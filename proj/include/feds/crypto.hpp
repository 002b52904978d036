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

#ifndef FEDS_CRYPTO_HPP_
#define FEDS_CRYPTO_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "feds/common.hpp"

// Thin wrappers over the OpenSSL primitives used by the protection
// pipelines. Contexts are reused per thread; all functions here are safe to
// call from concurrent workers.
namespace feds {

using Digest512 = std::array<uint8_t, 64>;

Digest256 sha256(std::initializer_list<ByteSpan> parts);
Digest512 sha512(std::initializer_list<ByteSpan> parts);

inline Digest256 sha256(ByteSpan data) { return sha256({data}); }
inline Digest512 sha512(ByteSpan data) { return sha512({data}); }

// AES-128 in counter mode. The 16-byte counter block starts at `iv` and is
// incremented big-endian; encrypt and decrypt are the same operation.
void aes128_ctr_xor(const Key128& key, const Iv128& iv,
                    std::span<uint8_t> data);

// Single-block AES-256 encryption (the AONT word cipher).
std::array<uint8_t, 16> aes256_encrypt_block(
    const Key256& key, const std::array<uint8_t, 16>& block);

}  // namespace feds

#endif  // FEDS_CRYPTO_HPP_
