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

// hash_to_curve for G1, the BLS12381G1_XMD:SHA-256_SSWU_RO suite of
// RFC 9380: hash_to_field, simplified SWU onto the 11-isogenous curve,
// isogeny evaluation, and cofactor clearing by 1 - x.

#include "bpksharp/algebra/curve.hpp"
#include "bpksharp/algebra/hashing.hpp"

namespace bpksharp {

namespace ff {

inline std::pair<Fp, Fp> sswu_map_g1(const Fp& u) {
  Fp A = Fp::from_raw_limbs(consts::kIsoA);
  Fp B = Fp::from_raw_limbs(consts::kIsoB);
  Fp Z = Fp::from_raw_limbs(consts::kSwuZ);

  Fp u2 = u.square();
  Fp zu2 = Z * u2;
  Fp tv1 = zu2.square() + zu2;
  Fp x1;
  if (tv1.is_zero()) {
    x1 = B * (Z * A).inverse();
  } else {
    x1 = (-B * A.inverse()) * (Fp::one() + tv1.inverse());
  }
  Fp gx1 = (x1.square() + A) * x1 + B;
  Fp x, y;
  if (auto s = fp_sqrt(gx1)) {
    x = x1;
    y = *s;
  } else {
    Fp x2 = zu2 * x1;
    Fp gx2 = (x2.square() + A) * x2 + B;
    auto s2 = fp_sqrt(gx2);
    // gx1 non-square forces gx2 square; this cannot fail on valid params
    x = x2;
    y = *s2;
  }
  if (u.is_odd() != y.is_odd()) y = -y;
  return {x, y};
}

inline Fp horner(const std::uint64_t table[][6], std::size_t n, const Fp& x) {
  Fp acc = Fp::from_raw_limbs(table[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) acc = acc * x + Fp::from_raw_limbs(table[i]);
  return acc;
}

// 11-isogeny from the SWU curve onto E: y^2 = x^3 + 4.
inline JacPoint<Fp> iso11_map(const Fp& xp, const Fp& yp) {
  Fp xnum = horner(consts::kIsoXNum, 12, xp);
  Fp xden = horner(consts::kIsoXDen, 11, xp);
  Fp ynum = horner(consts::kIsoYNum, 16, xp);
  Fp yden = horner(consts::kIsoYDen, 16, xp);
  if (xden.is_zero() || yden.is_zero()) return JacPoint<Fp>::infinity();
  Fp x = xnum * xden.inverse();
  Fp y = yp * ynum * yden.inverse();
  return JacPoint<Fp>::from_affine(x, y);
}

}  // namespace ff

// Uniform hashing to the G1 prime-order subgroup.
inline G1Point hash_to_g1(std::span<const std::uint8_t> msg, const std::string& dst) {
  Bytes uni = expand_message_xmd(msg, dst, 128);
  ff::Fp u0 = ff::Fp::from_wide_be(std::span<const std::uint8_t>(uni.data(), 64));
  ff::Fp u1 = ff::Fp::from_wide_be(std::span<const std::uint8_t>(uni.data() + 64, 64));
  auto [x0, y0] = ff::sswu_map_g1(u0);
  auto [x1, y1] = ff::sswu_map_g1(u1);
  auto q = ff::iso11_map(x0, y0).add(ff::iso11_map(x1, y1));
  return G1Point::from_raw(q.mul_u64(ff::consts::kHEffG1));
}

inline G1Point hash_to_g1(const std::string& msg, const std::string& dst) {
  Bytes b(msg.begin(), msg.end());
  return hash_to_g1(b, dst);
}

}  // namespace bpksharp
