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

#include <array>
#include <optional>

#include "bpksharp/algebra/fields.hpp"
#include "bpksharp/algebra/hashing.hpp"
#include "bpksharp/common/rng.hpp"

namespace bpksharp {

// Element of the scalar field Z_r, r the prime order of the pairing groups.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero() { return Scalar(ff::Fr::zero()); }
  static Scalar one() { return Scalar(ff::Fr::one()); }
  static Scalar from_u64(std::uint64_t x) { return Scalar(ff::Fr::from_u64(x)); }

  // Uniform via 512-bit reduction.
  static Scalar random(RandomSource& rng) {
    std::array<std::uint8_t, 64> buf{};
    rng.fill(buf);
    return Scalar(ff::fr_from_wide_be(std::span<const std::uint8_t, 64>(buf)));
  }

  // Uniform over [1, r). The zero draw (probability 2^-255) maps to one, so
  // sampling never loops.
  static Scalar random_nonzero(RandomSource& rng) {
    Scalar s = random(rng);
    if (s.is_zero()) return one();
    return s;
  }

  // 64-byte XMD expansion of (domain_tag, transcript) reduced mod r.
  static Scalar hash(const std::string& domain_tag, std::span<const std::uint8_t> transcript) {
    if (domain_tag.empty()) throw std::invalid_argument("hash_to_scalar: empty domain tag");
    Bytes wide = expand_message_xmd(transcript, domain_tag, 64);
    return Scalar(ff::fr_from_wide_be(std::span<const std::uint8_t, 64>(wide.data(), 64)));
  }

  bool is_zero() const { return fr_.is_zero(); }
  bool operator==(const Scalar& o) const { return fr_ == o.fr_; }
  bool operator!=(const Scalar& o) const { return fr_ != o.fr_; }

  Scalar operator+(const Scalar& o) const { return Scalar(fr_ + o.fr_); }
  Scalar operator-(const Scalar& o) const { return Scalar(fr_ - o.fr_); }
  Scalar operator*(const Scalar& o) const { return Scalar(fr_ * o.fr_); }
  Scalar operator-() const { return Scalar(-fr_); }

  Scalar inverse() const {
    if (is_zero()) throw std::invalid_argument("scalar inverse of zero");
    return Scalar(ff::fr_inverse(fr_));
  }

  // Canonical 32-byte little-endian encoding.
  std::array<std::uint8_t, 32> to_bytes() const {
    std::array<std::uint8_t, 32> be{};
    fr_.to_bytes_be(be.data());
    std::array<std::uint8_t, 32> le{};
    for (int i = 0; i < 32; ++i) le[i] = be[31 - i];
    return le;
  }

  static std::optional<Scalar> from_bytes(std::span<const std::uint8_t> in) {
    if (in.size() != 32) return std::nullopt;
    std::array<std::uint8_t, 32> be{};
    for (int i = 0; i < 32; ++i) be[i] = in[31 - i];
    auto fr = ff::Fr::from_bytes_be(be);
    if (!fr) return std::nullopt;
    return Scalar(*fr);
  }

  // Big-endian form, used as an exponent window source.
  std::array<std::uint8_t, 32> to_bytes_be() const {
    std::array<std::uint8_t, 32> be{};
    fr_.to_bytes_be(be.data());
    return be;
  }

  const ff::Fr& raw() const { return fr_; }
  static Scalar from_raw(const ff::Fr& fr) { return Scalar(fr); }

 private:
  explicit Scalar(const ff::Fr& fr) : fr_(fr) {}
  ff::Fr fr_;
};

}  // namespace bpksharp
