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

#include <openssl/evp.h>

#include <array>
#include <cstring>
#include <stdexcept>
#include <string>

#include "bpksharp/common/bytes.hpp"

namespace bpksharp {

inline std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32)
    throw std::runtime_error("sha256 failed");
  return out;
}

// expand_message_xmd with SHA-256 (RFC 9380 section 5.3.1).
inline Bytes expand_message_xmd(std::span<const std::uint8_t> msg, const std::string& dst,
                                std::size_t len_in_bytes) {
  constexpr std::size_t b_in_bytes = 32;
  constexpr std::size_t s_in_bytes = 64;
  if (dst.empty() || dst.size() > 255) throw std::invalid_argument("xmd: bad DST length");
  std::size_t ell = (len_in_bytes + b_in_bytes - 1) / b_in_bytes;
  if (ell > 255 || len_in_bytes > 65535) throw std::invalid_argument("xmd: output too long");

  Bytes dst_prime(dst.begin(), dst.end());
  dst_prime.push_back(static_cast<std::uint8_t>(dst.size()));

  Bytes block;
  block.assign(s_in_bytes, 0);  // Z_pad
  append(block, std::span<const std::uint8_t>(msg));
  block.push_back(static_cast<std::uint8_t>(len_in_bytes >> 8));
  block.push_back(static_cast<std::uint8_t>(len_in_bytes & 0xff));
  block.push_back(0);
  append(block, std::span<const std::uint8_t>(dst_prime));
  auto b0 = sha256(block);

  Bytes out;
  std::array<std::uint8_t, 32> bi{};
  for (std::size_t i = 1; i <= ell; ++i) {
    Bytes cur;
    for (std::size_t j = 0; j < 32; ++j)
      cur.push_back(static_cast<std::uint8_t>(b0[j] ^ (i == 1 ? 0 : bi[j])));
    cur.push_back(static_cast<std::uint8_t>(i));
    append(cur, std::span<const std::uint8_t>(dst_prime));
    bi = sha256(cur);
    out.insert(out.end(), bi.begin(), bi.end());
  }
  out.resize(len_in_bytes);
  return out;
}

}  // namespace bpksharp
