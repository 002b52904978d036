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

#include "feds/crypto.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace feds {

namespace {

// Digest contexts are expensive to allocate; keep one per thread and re-init.
EVP_MD_CTX* local_md_ctx() {
  thread_local EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
  return ctx;
}

EVP_CIPHER_CTX* local_cipher_ctx() {
  thread_local EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  if (!ctx) throw std::runtime_error("EVP_CIPHER_CTX_new failed");
  return ctx;
}

template <size_t N>
std::array<uint8_t, N> digest(const EVP_MD* md,
                              std::initializer_list<ByteSpan> parts) {
  EVP_MD_CTX* ctx = local_md_ctx();
  if (EVP_DigestInit_ex(ctx, md, nullptr) != 1) {
    throw std::runtime_error("EVP_DigestInit_ex failed");
  }
  for (ByteSpan p : parts) {
    if (!p.empty() && EVP_DigestUpdate(ctx, p.data(), p.size()) != 1) {
      throw std::runtime_error("EVP_DigestUpdate failed");
    }
  }
  std::array<uint8_t, N> out;
  unsigned len = 0;
  if (EVP_DigestFinal_ex(ctx, out.data(), &len) != 1 || len != N) {
    throw std::runtime_error("EVP_DigestFinal_ex failed");
  }
  return out;
}

}  // namespace

Digest256 sha256(std::initializer_list<ByteSpan> parts) {
  return digest<32>(EVP_sha256(), parts);
}

Digest512 sha512(std::initializer_list<ByteSpan> parts) {
  return digest<64>(EVP_sha512(), parts);
}

void aes128_ctr_xor(const Key128& key, const Iv128& iv,
                    std::span<uint8_t> data) {
  if (data.empty()) return;
  EVP_CIPHER_CTX* ctx = local_cipher_ctx();
  if (EVP_EncryptInit_ex(ctx, EVP_aes_128_ctr(), nullptr, key.data(),
                         iv.data()) != 1) {
    throw std::runtime_error("EVP_EncryptInit_ex(aes-128-ctr) failed");
  }
  int out_len = 0;
  if (EVP_EncryptUpdate(ctx, data.data(), &out_len, data.data(),
                        static_cast<int>(data.size())) != 1 ||
      out_len != static_cast<int>(data.size())) {
    throw std::runtime_error("EVP_EncryptUpdate(aes-128-ctr) failed");
  }
}

std::array<uint8_t, 16> aes256_encrypt_block(
    const Key256& key, const std::array<uint8_t, 16>& block) {
  EVP_CIPHER_CTX* ctx = local_cipher_ctx();
  if (EVP_EncryptInit_ex(ctx, EVP_aes_256_ecb(), nullptr, key.data(),
                         nullptr) != 1) {
    throw std::runtime_error("EVP_EncryptInit_ex(aes-256-ecb) failed");
  }
  EVP_CIPHER_CTX_set_padding(ctx, 0);
  std::array<uint8_t, 16> out;
  int out_len = 0;
  if (EVP_EncryptUpdate(ctx, out.data(), &out_len, block.data(), 16) != 1 ||
      out_len != 16) {
    throw std::runtime_error("EVP_EncryptUpdate(aes-256-ecb) failed");
  }
  return out;
}

}  // namespace feds
