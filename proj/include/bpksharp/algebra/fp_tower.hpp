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

// Extension tower for BLS12-381:
//   Fp2  = Fp[u]  / (u^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),  xi = 1 + u
//   Fp12 = Fp6[w] / (w^2 - v)

#include <array>
#include <optional>

#include "bpksharp/algebra/fields.hpp"

namespace bpksharp::ff {

struct Fp2 {
  Fp c0, c1;

  static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }
  static Fp2 xi() { return {Fp::one(), Fp::one()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp2& o) const { return !(*this == o); }

  Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fp2 operator-() const { return {-c0, -c1}; }

  Fp2 operator*(const Fp2& o) const {
    Fp t0 = c0 * o.c0;
    Fp t1 = c1 * o.c1;
    Fp mixed = (c0 + c1) * (o.c0 + o.c1);
    return {t0 - t1, mixed - t0 - t1};
  }

  Fp2 mul_fp(const Fp& s) const { return {c0 * s, c1 * s}; }

  Fp2 square() const {
    Fp a = c0 + c1;
    Fp b = c0 - c1;
    Fp c = c0 + c0;
    return {a * b, c * c1};
  }

  Fp2 dbl() const { return {c0 + c0, c1 + c1}; }

  Fp2 conjugate() const { return {c0, -c1}; }

  // (a + bu)(1 + u) = (a - b) + (a + b)u
  Fp2 mul_by_xi() const { return {c0 - c1, c0 + c1}; }

  Fp2 inverse() const {
    Fp norm = c0.square() + c1.square();
    Fp ninv = fp_inverse(norm);
    return {c0 * ninv, -(c1 * ninv)};
  }

  Fp2 pow_be(std::span<const std::uint8_t> exp) const {
    Fp2 r = one();
    for (std::uint8_t byte : exp) {
      for (int bit = 7; bit >= 0; --bit) {
        r = r.square();
        if ((byte >> bit) & 1) r = r * *this;
      }
    }
    return r;
  }
};

// Square root in Fp2 for p = 3 mod 4: reduce to two Fp square roots through
// the norm. Returns nullopt for non-squares.
inline std::optional<Fp2> fp2_sqrt(const Fp2& a) {
  if (a.is_zero()) return Fp2::zero();
  if (a.c1.is_zero()) {
    if (auto s = fp_sqrt(a.c0)) return Fp2{*s, Fp::zero()};
    // a = c0 with c0 a non-square: sqrt is t*u with t^2 = -c0.
    auto t = fp_sqrt(-a.c0);
    if (!t) return std::nullopt;
    return Fp2{Fp::zero(), *t};
  }
  Fp norm = a.c0.square() + a.c1.square();
  auto s = fp_sqrt(norm);
  if (!s) return std::nullopt;
  Fp two_inv = fp_inverse(Fp::from_u64(2));
  Fp alpha2 = (a.c0 + *s) * two_inv;
  auto alpha = fp_sqrt(alpha2);
  if (!alpha) {
    alpha2 = (a.c0 - *s) * two_inv;
    alpha = fp_sqrt(alpha2);
    if (!alpha) return std::nullopt;
  }
  Fp beta = a.c1 * fp_inverse(alpha->dbl());
  Fp2 r{*alpha, beta};
  if (r.square() != a) return std::nullopt;
  return r;
}

struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fp6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
  bool operator!=(const Fp6& o) const { return !(*this == o); }

  Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }

  Fp6 operator*(const Fp6& o) const {
    Fp2 t0 = c0 * o.c0;
    Fp2 t1 = c1 * o.c1;
    Fp2 t2 = c2 * o.c2;
    Fp2 r0 = t0 + ((c1 + c2) * (o.c1 + o.c2) - t1 - t2).mul_by_xi();
    Fp2 r1 = (c0 + c1) * (o.c0 + o.c1) - t0 - t1 + t2.mul_by_xi();
    Fp2 r2 = (c0 + c2) * (o.c0 + o.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
  }

  Fp6 square() const { return *this * *this; }

  // Multiplication by v: (c0, c1, c2) -> (xi*c2, c0, c1)
  Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fp6 mul_fp2(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }

  Fp6 inverse() const {
    Fp2 a = c0.square() - (c1 * c2).mul_by_xi();
    Fp2 b = c2.square().mul_by_xi() - c0 * c1;
    Fp2 c = c1.square() - c0 * c2;
    Fp2 t = (c0 * a) + ((c2 * b) + (c1 * c)).mul_by_xi();
    Fp2 tinv = t.inverse();
    return {a * tinv, b * tinv, c * tinv};
  }
};

struct Fp12 {
  Fp6 c0, c1;

  static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool is_one() const { return *this == one(); }
  bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp12& o) const { return !(*this == o); }

  Fp12 operator+(const Fp12& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fp12 operator-(const Fp12& o) const { return {c0 - o.c0, c1 - o.c1}; }

  Fp12 operator*(const Fp12& o) const {
    Fp6 t0 = c0 * o.c0;
    Fp6 t1 = c1 * o.c1;
    Fp6 mixed = (c0 + c1) * (o.c0 + o.c1);
    return {t0 + t1.mul_by_v(), mixed - t0 - t1};
  }

  Fp12 square() const {
    // complex squaring over Fp6[w]/(w^2 - v)
    Fp6 a = c0 + c1;
    Fp6 b = c0 + c1.mul_by_v();
    Fp6 t = c0 * c1;
    Fp6 r0 = a * b - t - t.mul_by_v();
    return {r0, t + t};
  }

  // Valid inverse for all nonzero elements.
  Fp12 inverse() const {
    Fp6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  // For unitary elements (cyclotomic subgroup) the conjugate is the inverse.
  Fp12 conjugate() const { return {c0, -c1}; }

  // p-power Frobenius via precomputed gamma constants.
  Fp12 frobenius() const {
    auto g = [](const u64* a, const u64* b) {
      return Fp2{Fp::from_raw_limbs(a), Fp::from_raw_limbs(b)};
    };
    Fp2 g1 = g(consts::kFrobGamma1_1C0, consts::kFrobGamma1_1C1);
    Fp2 g2 = g(consts::kFrobGamma1_2C0, consts::kFrobGamma1_2C1);
    Fp2 g3 = g(consts::kFrobGamma1_3C0, consts::kFrobGamma1_3C1);
    Fp2 g4 = g(consts::kFrobGamma1_4C0, consts::kFrobGamma1_4C1);
    Fp2 g5 = g(consts::kFrobGamma1_5C0, consts::kFrobGamma1_5C1);
    return {
        Fp6{c0.c0.conjugate(), c0.c1.conjugate() * g2, c0.c2.conjugate() * g4},
        Fp6{c1.c0.conjugate() * g1, c1.c1.conjugate() * g3, c1.c2.conjugate() * g5},
    };
  }

  Fp12 frobenius_n(int n) const {
    Fp12 r = *this;
    for (int i = 0; i < n; ++i) r = r.frobenius();
    return r;
  }

  Fp12 pow_be(std::span<const std::uint8_t> exp) const {
    Fp12 r = one();
    for (std::uint8_t byte : exp) {
      for (int bit = 7; bit >= 0; --bit) {
        r = r.square();
        if ((byte >> bit) & 1) r = r * *this;
      }
    }
    return r;
  }
};

}  // namespace bpksharp::ff
