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
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define BPKSHARP_HAVE_ADCARRY 1
#endif

#include "bpksharp/algebra/bls12_381_constants.hpp"

namespace bpksharp::ff {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Fixed-size prime field element in Montgomery form. Params supplies the
// modulus, Montgomery constants and limb count; arithmetic is plain CIOS.
// Not constant time: exponents and compare results leak through timing,
// which is outside this library's threat model.
template <typename Params>
struct PrimeField {
  static constexpr std::size_t N = Params::kLimbs;
  std::array<u64, N> v{};

  static constexpr const u64* mod() { return Params::kMod; }

  static PrimeField zero() { return PrimeField{}; }

  static PrimeField one() {
    PrimeField r;
    for (std::size_t i = 0; i < N; ++i) r.v[i] = Params::kR1[i];
    return r;
  }

  bool is_zero() const {
    u64 acc = 0;
    for (auto x : v) acc |= x;
    return acc == 0;
  }

  bool operator==(const PrimeField& o) const { return v == o.v; }
  bool operator!=(const PrimeField& o) const { return v != o.v; }

  static bool geq_mod(const std::array<u64, N>& a) {
    for (std::size_t i = N; i-- > 0;) {
      if (a[i] < mod()[i]) return false;
      if (a[i] > mod()[i]) return true;
    }
    return true;  // equal
  }

  static void sub_mod_inplace(std::array<u64, N>& a) {
    u64 borrow = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 d = (u128)a[i] - mod()[i] - borrow;
      a[i] = (u64)d;
      borrow = (u64)((d >> 64) & 1);
    }
  }

  PrimeField operator+(const PrimeField& o) const {
    PrimeField r;
    u64 carry = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 s = (u128)v[i] + o.v[i] + carry;
      r.v[i] = (u64)s;
      carry = (u64)(s >> 64);
    }
    if (carry || geq_mod(r.v)) sub_mod_inplace(r.v);
    return r;
  }

  PrimeField operator-(const PrimeField& o) const {
    PrimeField r;
    u64 borrow = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 d = (u128)v[i] - o.v[i] - borrow;
      r.v[i] = (u64)d;
      borrow = (u64)((d >> 64) & 1);
    }
    if (borrow) {
      u64 carry = 0;
      for (std::size_t i = 0; i < N; ++i) {
        u128 s = (u128)r.v[i] + mod()[i] + carry;
        r.v[i] = (u64)s;
        carry = (u64)(s >> 64);
      }
    }
    return r;
  }

  PrimeField operator-() const {
    if (is_zero()) return *this;
    PrimeField r;
    u64 borrow = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 d = (u128)mod()[i] - v[i] - borrow;
      r.v[i] = (u64)d;
      borrow = (u64)((d >> 64) & 1);
    }
    return r;
  }

  // CIOS Montgomery multiplication. The x86 path splits each row into
  // explicit add-with-carry chains, which compiles to adc sequences; the
  // portable path carries through u128 arithmetic.
  PrimeField operator*(const PrimeField& o) const {
#ifdef BPKSHARP_HAVE_ADCARRY
    const u64* a = v.data();
    const u64* b = o.v.data();
    u64 t[N + 1] = {};
    for (std::size_t i = 0; i < N; ++i) {
      u64 ai = a[i];
      u64 hi[N], lo[N];
      for (std::size_t j = 0; j < N; ++j) {
        u128 w = (u128)ai * b[j];
        lo[j] = (u64)w;
        hi[j] = (u64)(w >> 64);
      }
      unsigned char c = 0;
      for (std::size_t j = 0; j < N; ++j)
        c = _addcarry_u64(c, t[j], lo[j], (unsigned long long*)&t[j]);
      c = _addcarry_u64(c, t[N], 0, (unsigned long long*)&t[N]);
      c = 0;
      for (std::size_t j = 0; j < N; ++j)
        c = _addcarry_u64(c, t[j + 1], hi[j], (unsigned long long*)&t[j + 1]);
      // t < 2^(64(N+1)) is maintained: inputs < mod keep the row sums in range
      u64 m = t[0] * Params::kInv;
      for (std::size_t j = 0; j < N; ++j) {
        u128 w = (u128)m * mod()[j];
        lo[j] = (u64)w;
        hi[j] = (u64)(w >> 64);
      }
      c = 0;
      unsigned long long drop;
      c = _addcarry_u64(c, t[0], lo[0], &drop);
      for (std::size_t j = 1; j < N; ++j)
        c = _addcarry_u64(c, t[j], lo[j], (unsigned long long*)&t[j - 1]);
      c = _addcarry_u64(c, t[N], 0, (unsigned long long*)&t[N - 1]);
      t[N] = c;
      c = 0;
      for (std::size_t j = 0; j < N; ++j)
        c = _addcarry_u64(c, t[j], hi[j], (unsigned long long*)&t[j]);
      t[N] += c;
    }
    PrimeField r;
    for (std::size_t i = 0; i < N; ++i) r.v[i] = t[i];
    if (t[N] || geq_mod(r.v)) sub_mod_inplace(r.v);
    return r;
#else
    std::array<u64, N + 1> t{};
    u64 t_extra = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u64 carry = 0;
      for (std::size_t j = 0; j < N; ++j) {
        u128 cur = (u128)t[j] + (u128)v[i] * o.v[j] + carry;
        t[j] = (u64)cur;
        carry = (u64)(cur >> 64);
      }
      u128 cur = (u128)t[N] + carry;
      t[N] = (u64)cur;
      t_extra = (u64)(cur >> 64);

      u64 m = t[0] * Params::kInv;
      u128 acc = (u128)t[0] + (u128)m * mod()[0];
      carry = (u64)(acc >> 64);
      for (std::size_t j = 1; j < N; ++j) {
        acc = (u128)t[j] + (u128)m * mod()[j] + carry;
        t[j - 1] = (u64)acc;
        carry = (u64)(acc >> 64);
      }
      acc = (u128)t[N] + carry;
      t[N - 1] = (u64)acc;
      t[N] = t_extra + (u64)(acc >> 64);
    }
    PrimeField r;
    for (std::size_t i = 0; i < N; ++i) r.v[i] = t[i];
    if (t[N] || geq_mod(r.v)) sub_mod_inplace(r.v);
    return r;
#endif
  }

  PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
  PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
  PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

  PrimeField square() const { return *this * *this; }

  PrimeField dbl() const { return *this + *this; }

  // Big-endian exponent, generic square-and-multiply.
  PrimeField pow_be(std::span<const std::uint8_t> exp) const {
    PrimeField r = one();
    for (std::uint8_t byte : exp) {
      for (int bit = 7; bit >= 0; --bit) {
        r = r.square();
        if ((byte >> bit) & 1) r = r * *this;
      }
    }
    return r;
  }

  // Fermat inversion; returns zero for zero.
  PrimeField inverse() const {
    return pow_be(std::span<const std::uint8_t>(Params::kPm2, 8 * N));
  }

  static PrimeField from_raw_limbs(const u64* limbs) {
    PrimeField r;
    for (std::size_t i = 0; i < N; ++i) r.v[i] = limbs[i];
    return r;
  }

  static PrimeField from_u64(u64 x) {
    PrimeField raw;
    raw.v[0] = x;
    return raw.to_mont();
  }

  // Interprets current limbs as a plain integer < mod and converts in.
  PrimeField to_mont() const {
    return *this * from_raw_limbs(Params::kR2);
  }

  // Converts out of Montgomery form (REDC by 1).
  std::array<u64, N> to_canonical() const {
    PrimeField one_raw;
    one_raw.v[0] = 1;
    return (*this * one_raw).v;
  }

  // Canonical big-endian bytes, fixed width 8*N.
  void to_bytes_be(std::uint8_t* out) const {
    auto c = to_canonical();
    for (std::size_t i = 0; i < N; ++i) {
      u64 limb = c[N - 1 - i];
      for (int b = 0; b < 8; ++b) out[i * 8 + b] = (std::uint8_t)(limb >> (56 - 8 * b));
    }
  }

  // Rejects values >= mod.
  static std::optional<PrimeField> from_bytes_be(std::span<const std::uint8_t> in) {
    if (in.size() != 8 * N) return std::nullopt;
    PrimeField raw;
    for (std::size_t i = 0; i < N; ++i) {
      u64 limb = 0;
      for (int b = 0; b < 8; ++b) limb = (limb << 8) | in[i * 8 + b];
      raw.v[N - 1 - i] = limb;
    }
    if (geq_mod(raw.v)) return std::nullopt;
    return raw.to_mont();
  }

  bool is_odd() const {
    auto c = to_canonical();
    return (c[0] & 1) != 0;
  }

  // Reduces a big-endian string of at most 16*N bytes. Splits the value as
  // hi*2^(64N) + lo; each half enters Montgomery form directly, avoiding
  // wide division.
  static PrimeField from_wide_be(std::span<const std::uint8_t> in) {
    if (in.size() > 16 * N) throw std::invalid_argument("from_wide_be: input too long");
    std::array<std::uint8_t, 16 * N> padded{};
    std::copy(in.begin(), in.end(), padded.begin() + (16 * N - in.size()));
    auto load = [](const std::uint8_t* p) {
      PrimeField raw;
      for (std::size_t i = 0; i < N; ++i) {
        u64 limb = 0;
        for (int b = 0; b < 8; ++b) limb = (limb << 8) | p[i * 8 + b];
        raw.v[N - 1 - i] = limb;
      }
      return raw;
    };
    PrimeField hi = load(padded.data());
    PrimeField lo = load(padded.data() + 8 * N);
    PrimeField r2 = from_raw_limbs(Params::kR2);
    // mont_mul(x, R2) = x*R, so lo*R2 + (hi*R2)*R2 is to_mont(lo + hi*2^(64N)).
    return lo * r2 + (hi * r2) * r2;
  }

  // True when the canonical value exceeds (mod-1)/2, the "lexicographically
  // larger" choice used by the compressed-point sign bit.
  bool is_lex_larger() const {
    auto c = to_canonical();
    // compare 2*c against mod
    std::array<u64, N> twice{};
    u64 carry = 0;
    for (std::size_t i = 0; i < N; ++i) {
      u128 s = ((u128)c[i] << 1) | carry;
      twice[i] = (u64)s;
      carry = (u64)(s >> 64);
    }
    if (carry) return true;
    for (std::size_t i = N; i-- > 0;) {
      if (twice[i] > mod()[i]) return true;
      if (twice[i] < mod()[i]) return false;
    }
    return false;
  }
};

struct FpParams {
  static constexpr std::size_t kLimbs = 6;
  static constexpr const u64* kMod = consts::kFpMod;
  static constexpr const u64* kR1 = consts::kFpR1;
  static constexpr const u64* kR2 = consts::kFpR2;
  static constexpr u64 kInv = consts::kFpInv;
  static constexpr const std::uint8_t* kPm2 = consts::kFpMinus2;
};

struct FrParams {
  static constexpr std::size_t kLimbs = 4;
  static constexpr const u64* kMod = consts::kFrMod;
  static constexpr const u64* kR1 = consts::kFrR1;
  static constexpr const u64* kR2 = consts::kFrR2;
  static constexpr u64 kInv = consts::kFrInv;
  static constexpr const std::uint8_t* kPm2 = consts::kFrMinus2;
};

using Fp = PrimeField<FpParams>;
using Fr = PrimeField<FrParams>;

inline Fp fp_inverse(const Fp& a) { return a.inverse(); }
inline Fr fr_inverse(const Fr& a) { return a.inverse(); }

// Euler criterion; zero counts as a square.
inline bool fp_is_square(const Fp& a) {
  if (a.is_zero()) return true;
  return a.pow_be(consts::kFpMinus1Div2) == Fp::one();
}

// Works because p = 3 mod 4. Returns nullopt for non-squares.
inline std::optional<Fp> fp_sqrt(const Fp& a) {
  Fp c = a.pow_be(consts::kFpPlus1Div4);
  if (c.square() != a) return std::nullopt;
  return c;
}

inline Fr fr_from_wide_be(std::span<const std::uint8_t, 64> in) {
  return Fr::from_wide_be(in);
}

}  // namespace bpksharp::ff
