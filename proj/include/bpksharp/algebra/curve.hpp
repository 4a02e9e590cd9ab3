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

#include "bpksharp/algebra/fp_tower.hpp"
#include "bpksharp/algebra/scalar.hpp"

namespace bpksharp {

namespace ff {

// Short Weierstrass point, Jacobian coordinates, a = 0. Identity is Z = 0.
template <typename Fq>
struct JacPoint {
  Fq X = Fq::one(), Y = Fq::one(), Z = Fq::zero();

  static JacPoint infinity() { return {}; }
  bool is_infinity() const { return Z.is_zero(); }

  static JacPoint from_affine(const Fq& x, const Fq& y) { return {x, y, Fq::one()}; }

  JacPoint dbl() const {
    if (is_infinity()) return *this;
    Fq A = X.square();
    Fq B = Y.square();
    Fq C = B.square();
    Fq t = (X + B).square() - A - C;
    Fq D = t + t;
    Fq E = A + A + A;
    Fq F = E.square();
    JacPoint r;
    r.X = F - D - D;
    Fq c8 = C + C;
    c8 = c8 + c8;
    c8 = c8 + c8;
    r.Y = E * (D - r.X) - c8;
    Fq yz = Y * Z;
    r.Z = yz + yz;
    return r;
  }

  JacPoint add(const JacPoint& o) const {
    if (is_infinity()) return o;
    if (o.is_infinity()) return *this;
    Fq Z1Z1 = Z.square();
    Fq Z2Z2 = o.Z.square();
    Fq U1 = X * Z2Z2;
    Fq U2 = o.X * Z1Z1;
    Fq S1 = Y * o.Z * Z2Z2;
    Fq S2 = o.Y * Z * Z1Z1;
    if (U1 == U2) {
      if (S1 == S2) return dbl();
      return infinity();
    }
    Fq H = U2 - U1;
    Fq I = (H + H).square();
    Fq J = H * I;
    Fq rr = (S2 - S1);
    rr = rr + rr;
    Fq V = U1 * I;
    JacPoint out;
    out.X = rr.square() - J - V - V;
    Fq s1j = S1 * J;
    out.Y = rr * (V - out.X) - (s1j + s1j);
    out.Z = ((Z + o.Z).square() - Z1Z1 - Z2Z2) * H;
    return out;
  }

  JacPoint neg() const {
    JacPoint r = *this;
    r.Y = -r.Y;
    return r;
  }

  // 4-bit fixed window over a big-endian exponent.
  JacPoint mul_be(std::span<const std::uint8_t> exp) const {
    std::array<JacPoint, 16> table;
    table[0] = infinity();
    table[1] = *this;
    for (int i = 2; i < 16; ++i) table[i] = table[i - 1].add(*this);
    JacPoint acc = infinity();
    for (std::uint8_t byte : exp) {
      for (int half = 0; half < 2; ++half) {
        acc = acc.dbl().dbl().dbl().dbl();
        int nib = half == 0 ? (byte >> 4) : (byte & 0xf);
        if (nib) acc = acc.add(table[nib]);
      }
    }
    return acc;
  }

  JacPoint mul_u64(std::uint64_t k) const {
    std::array<std::uint8_t, 8> be{};
    for (int i = 0; i < 8; ++i) be[i] = static_cast<std::uint8_t>(k >> (56 - 8 * i));
    return mul_be(be);
  }

  bool equals(const JacPoint& o) const {
    if (is_infinity()) return o.is_infinity();
    if (o.is_infinity()) return false;
    Fq Z1Z1 = Z.square();
    Fq Z2Z2 = o.Z.square();
    if (X * Z2Z2 != o.X * Z1Z1) return false;
    return Y * o.Z * Z2Z2 == o.Y * Z * Z1Z1;
  }

  // (x, y) affine; only valid off infinity.
  std::pair<Fq, Fq> to_affine() const {
    Fq zinv = Z.inverse();
    Fq zinv2 = zinv.square();
    return {X * zinv2, Y * zinv2 * zinv};
  }

  bool on_curve(const Fq& b) const {
    if (is_infinity()) return true;
    // Y^2 = X^3 + b*Z^6
    Fq z2 = Z.square();
    Fq z6 = z2.square() * z2;
    return Y.square() == X.square() * X + b * z6;
  }

  bool in_prime_subgroup() const {
    return mul_be(consts::kGroupOrderBe).is_infinity();
  }
};

}  // namespace ff

class G1Point {
 public:
  static constexpr std::size_t kBytes = 48;

  G1Point() = default;  // identity

  static G1Point generator() {
    G1Point p;
    p.pt_ = ff::JacPoint<ff::Fp>::from_affine(ff::Fp::from_raw_limbs(ff::consts::kG1GenX),
                                              ff::Fp::from_raw_limbs(ff::consts::kG1GenY));
    return p;
  }

  static G1Point identity() { return {}; }

  bool is_identity() const { return pt_.is_infinity(); }
  bool operator==(const G1Point& o) const { return pt_.equals(o.pt_); }
  bool operator!=(const G1Point& o) const { return !(*this == o); }

  G1Point operator+(const G1Point& o) const { return G1Point(pt_.add(o.pt_)); }
  G1Point operator-() const { return G1Point(pt_.neg()); }
  G1Point operator-(const G1Point& o) const { return *this + (-o); }

  G1Point operator*(const Scalar& k) const {
    auto be = k.to_bytes_be();
    return G1Point(pt_.mul_be(be));
  }

  static ff::Fp curve_b() { return ff::Fp::from_raw_limbs(ff::consts::kB1); }

  std::array<std::uint8_t, kBytes> serialize() const {
    std::array<std::uint8_t, kBytes> out{};
    if (is_identity()) {
      out[0] = 0xc0;
      return out;
    }
    auto [x, y] = pt_.to_affine();
    x.to_bytes_be(out.data());
    out[0] |= 0x80;
    if (y.is_lex_larger()) out[0] |= 0x20;
    return out;
  }

  // Full validation: flags, canonical x, curve membership, prime subgroup.
  static std::optional<G1Point> deserialize(std::span<const std::uint8_t> in) {
    if (in.size() != kBytes) return std::nullopt;
    std::uint8_t flags = in[0];
    if (!(flags & 0x80)) return std::nullopt;  // only compressed supported
    bool infinity = flags & 0x40;
    bool sign = flags & 0x20;
    std::array<std::uint8_t, kBytes> xb{};
    std::copy(in.begin(), in.end(), xb.begin());
    xb[0] &= 0x1f;
    if (infinity) {
      if (sign) return std::nullopt;
      for (auto b : xb)
        if (b) return std::nullopt;
      return G1Point();
    }
    auto x = ff::Fp::from_bytes_be(xb);
    if (!x) return std::nullopt;
    auto y2 = x->square() * *x + curve_b();
    auto y = ff::fp_sqrt(y2);
    if (!y) return std::nullopt;
    if (y->is_lex_larger() != sign) *y = -*y;
    G1Point p(ff::JacPoint<ff::Fp>::from_affine(*x, *y));
    if (!p.pt_.in_prime_subgroup()) return std::nullopt;
    return p;
  }

  const ff::JacPoint<ff::Fp>& raw() const { return pt_; }
  static G1Point from_raw(const ff::JacPoint<ff::Fp>& pt) { return G1Point(pt); }

 private:
  explicit G1Point(const ff::JacPoint<ff::Fp>& pt) : pt_(pt) {}
  ff::JacPoint<ff::Fp> pt_;
};

class G2Point {
 public:
  static constexpr std::size_t kBytes = 96;

  G2Point() = default;

  static G2Point generator() {
    ff::Fp2 x{ff::Fp::from_raw_limbs(ff::consts::kG2GenX0), ff::Fp::from_raw_limbs(ff::consts::kG2GenX1)};
    ff::Fp2 y{ff::Fp::from_raw_limbs(ff::consts::kG2GenY0), ff::Fp::from_raw_limbs(ff::consts::kG2GenY1)};
    return G2Point(ff::JacPoint<ff::Fp2>::from_affine(x, y));
  }

  static G2Point identity() { return {}; }

  bool is_identity() const { return pt_.is_infinity(); }
  bool operator==(const G2Point& o) const { return pt_.equals(o.pt_); }
  bool operator!=(const G2Point& o) const { return !(*this == o); }

  G2Point operator+(const G2Point& o) const { return G2Point(pt_.add(o.pt_)); }
  G2Point operator-() const { return G2Point(pt_.neg()); }
  G2Point operator-(const G2Point& o) const { return *this + (-o); }

  G2Point operator*(const Scalar& k) const {
    auto be = k.to_bytes_be();
    return G2Point(pt_.mul_be(be));
  }

  static ff::Fp2 curve_b() {
    return {ff::Fp::from_raw_limbs(ff::consts::kB2C0), ff::Fp::from_raw_limbs(ff::consts::kB2C1)};
  }

  std::array<std::uint8_t, kBytes> serialize() const {
    std::array<std::uint8_t, kBytes> out{};
    if (is_identity()) {
      out[0] = 0xc0;
      return out;
    }
    auto [x, y] = pt_.to_affine();
    x.c1.to_bytes_be(out.data());
    x.c0.to_bytes_be(out.data() + 48);
    out[0] |= 0x80;
    bool sign = y.c1.is_zero() ? y.c0.is_lex_larger() : y.c1.is_lex_larger();
    if (sign) out[0] |= 0x20;
    return out;
  }

  static std::optional<G2Point> deserialize(std::span<const std::uint8_t> in) {
    if (in.size() != kBytes) return std::nullopt;
    std::uint8_t flags = in[0];
    if (!(flags & 0x80)) return std::nullopt;
    bool infinity = flags & 0x40;
    bool sign = flags & 0x20;
    std::array<std::uint8_t, 48> c1b{}, c0b{};
    std::copy(in.begin(), in.begin() + 48, c1b.begin());
    std::copy(in.begin() + 48, in.end(), c0b.begin());
    c1b[0] &= 0x1f;
    if (infinity) {
      if (sign) return std::nullopt;
      for (auto b : c1b)
        if (b) return std::nullopt;
      for (auto b : c0b)
        if (b) return std::nullopt;
      return G2Point();
    }
    auto xc1 = ff::Fp::from_bytes_be(c1b);
    auto xc0 = ff::Fp::from_bytes_be(c0b);
    if (!xc0 || !xc1) return std::nullopt;
    ff::Fp2 x{*xc0, *xc1};
    auto y2 = x.square() * x + curve_b();
    auto y = ff::fp2_sqrt(y2);
    if (!y) return std::nullopt;
    bool got = y->c1.is_zero() ? y->c0.is_lex_larger() : y->c1.is_lex_larger();
    if (got != sign) *y = -*y;
    G2Point p(ff::JacPoint<ff::Fp2>::from_affine(x, *y));
    if (!p.pt_.in_prime_subgroup()) return std::nullopt;
    return p;
  }

  const ff::JacPoint<ff::Fp2>& raw() const { return pt_; }
  static G2Point from_raw(const ff::JacPoint<ff::Fp2>& pt) { return G2Point(pt); }

 private:
  explicit G2Point(const ff::JacPoint<ff::Fp2>& pt) : pt_(pt) {}
  ff::JacPoint<ff::Fp2> pt_;
};

}  // namespace bpksharp
