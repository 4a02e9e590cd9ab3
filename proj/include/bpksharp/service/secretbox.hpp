/*
 * Copyright 2026 The bpksharp Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// At-rest encryption for key material held by the authority service:
// AES-256-GCM under a PBKDF2-SHA256 passphrase-derived key.
// Sealed blob layout: nonce(12) || ciphertext || tag(16).

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <array>

#include "bpksharp/common/bytes.hpp"
#include "bpksharp/common/errors.hpp"

namespace bpksharp::service {

using SecretKey = std::array<std::uint8_t, 32>;

inline SecretKey derive_storage_key(const std::string& passphrase,
                                    std::span<const std::uint8_t> salt, int iterations) {
  SecretKey key{};
  if (PKCS5_PBKDF2_HMAC(passphrase.data(), static_cast<int>(passphrase.size()), salt.data(),
                        static_cast<int>(salt.size()), iterations, EVP_sha256(),
                        static_cast<int>(key.size()), key.data()) != 1)
    throw std::runtime_error("pbkdf2 failure");
  return key;
}

inline Bytes seal(const SecretKey& key, std::span<const std::uint8_t> plaintext,
                  std::span<const std::uint8_t> aad) {
  Bytes out(12 + plaintext.size() + 16);
  if (RAND_bytes(out.data(), 12) != 1) throw std::runtime_error("nonce generation failed");

  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  if (!ctx) throw std::runtime_error("cipher ctx");
  int len = 0;
  bool ok = EVP_EncryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, key.data(), out.data()) == 1 &&
            (aad.empty() ||
             EVP_EncryptUpdate(ctx, nullptr, &len, aad.data(), static_cast<int>(aad.size())) == 1) &&
            EVP_EncryptUpdate(ctx, out.data() + 12, &len, plaintext.data(),
                              static_cast<int>(plaintext.size())) == 1;
  int fin = 0;
  ok = ok && EVP_EncryptFinal_ex(ctx, out.data() + 12 + len, &fin) == 1 &&
       EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_GET_TAG, 16, out.data() + 12 + plaintext.size()) == 1;
  EVP_CIPHER_CTX_free(ctx);
  if (!ok) throw std::runtime_error("seal failure");
  return out;
}

inline std::optional<Bytes> open_sealed(const SecretKey& key, std::span<const std::uint8_t> blob,
                                        std::span<const std::uint8_t> aad) {
  if (blob.size() < 12 + 16) return std::nullopt;
  std::size_t clen = blob.size() - 12 - 16;
  Bytes plain(clen);
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  if (!ctx) return std::nullopt;
  int len = 0;
  bool ok = EVP_DecryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, key.data(), blob.data()) == 1 &&
            (aad.empty() ||
             EVP_DecryptUpdate(ctx, nullptr, &len, aad.data(), static_cast<int>(aad.size())) == 1) &&
            (clen == 0 ||
             EVP_DecryptUpdate(ctx, plain.data(), &len, blob.data() + 12, static_cast<int>(clen)) == 1);
  std::array<std::uint8_t, 16> tag{};
  std::copy(blob.end() - 16, blob.end(), tag.begin());
  ok = ok && EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_TAG, 16, tag.data()) == 1;
  int fin = 0;
  ok = ok && EVP_DecryptFinal_ex(ctx, plain.data() + len, &fin) == 1;
  EVP_CIPHER_CTX_free(ctx);
  if (!ok) return std::nullopt;
  return plain;
}

}  // namespace bpksharp::service
