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

#include <string>

#include "bpksharp/algebra/hash_to_curve.hpp"
#include "bpksharp/algebra/pairing.hpp"
#include "bpksharp/common/errors.hpp"

namespace bpksharp {

inline constexpr const char* kParamsVersion = "bpk-sharp/v1";

// Group constants shared by every protocol operation. Y anchors signatures,
// H is the NIKE base, K the encryption base. All three are derived from the
// seed by hash-to-curve, so parameters are reproducible and carry no hidden
// trapdoor structure chosen by the setup operator.
class GroupParams {
 public:
  static GroupParams derive(std::span<const std::uint8_t> seed) {
    GroupParams p;
    p.seed_.assign(seed.begin(), seed.end());
    p.y_ = hash_to_g1(seed, "bpk-sharp/v1/setup/Y");
    p.h_ = hash_to_g1(seed, "bpk-sharp/v1/setup/H");
    p.k_ = hash_to_g1(seed, "bpk-sharp/v1/setup/K");
    if (p.y_.is_identity() || p.h_.is_identity() || p.k_.is_identity())
      throw InvalidInput("degenerate setup constants");  // probability ~2^-255
    p.gt_y_g2_ = pairing(p.y_, G2Point::generator());
    p.digest_ = p.compute_digest();
    return p;
  }

  const G1Point& y() const { return y_; }
  const G1Point& h() const { return h_; }
  const G1Point& k() const { return k_; }
  const Bytes& seed() const { return seed_; }

  // e(Y, G2) is a fixed verification-equation constant; computed once here.
  const GtElement& gt_y_g2() const { return gt_y_g2_; }

  // Binds every group constant; hashed into each Fiat-Shamir transcript.
  const std::array<std::uint8_t, 32>& digest() const { return digest_; }

  bool operator==(const GroupParams& o) const {
    return seed_ == o.seed_ && y_ == o.y_ && h_ == o.h_ && k_ == o.k_;
  }

 private:
  std::array<std::uint8_t, 32> compute_digest() const {
    Bytes t;
    append(t, std::string("bpk-sharp/v1/params-digest"));
    auto g1 = G1Point::generator().serialize();
    auto g2 = G2Point::generator().serialize();
    append_framed(t, g1);
    append_framed(t, g2);
    auto ys = y_.serialize(), hs = h_.serialize(), ks = k_.serialize();
    append_framed(t, ys);
    append_framed(t, hs);
    append_framed(t, ks);
    return sha256(t);
  }

  Bytes seed_;
  G1Point y_, h_, k_;
  GtElement gt_y_g2_;
  std::array<std::uint8_t, 32> digest_{};
};

}  // namespace bpksharp
