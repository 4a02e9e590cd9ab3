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

// Optimal ate pairing for BLS12-381. The Miller loop runs on the M-twist in
// homogeneous projective coordinates; line evaluations land in the sparse
// (c0.c0, c0.c1, c1.c1) slots of Fp12. Final exponentiation uses the
// standard x-chain; like most production pairings it returns the cube of
// the textbook reduced value, which is itself a bilinear non-degenerate
// pairing (3 is invertible mod r).

#include <vector>

#include "bpksharp/algebra/curve.hpp"

namespace bpksharp {

namespace ff {

struct LineEval {
  Fp2 c0, c1, c2;  // c0 as-is, c1 scales P.x, c2 scales P.y
};

// One ate-loop worth of line coefficients for a fixed G2 point.
struct G2Prepared {
  std::vector<LineEval> lines;
  bool infinity = false;
};

inline const Fp& fp_half() {
  static const Fp kHalf = Fp::from_u64(2).inverse();
  return kHalf;
}

inline G2Prepared prepare_g2(const JacPoint<Fp2>& q) {
  G2Prepared prep;
  if (q.is_infinity()) {
    prep.infinity = true;
    return prep;
  }
  auto affine = q.to_affine();
  const Fp2 qx = affine.first, qy = affine.second;
  Fp2 rx = qx, ry = qy, rz = Fp2::one();
  Fp2 b2 = Fp2{Fp::from_raw_limbs(consts::kB2C0), Fp::from_raw_limbs(consts::kB2C1)};

  auto dbl_step = [&]() {
    Fp2 t0 = ry.square();
    Fp2 t1 = rz.square();
    Fp2 t2 = (t1 + t1 + t1) * b2;
    Fp2 t3 = t2 + t2 + t2;
    Fp2 t4 = (ry + rz).square() - t1 - t0;
    LineEval l;
    l.c0 = t2 - t0;
    Fp2 rx2 = rx.square();
    l.c1 = rx2 + rx2 + rx2;
    l.c2 = -t4;
    const Fp& half = fp_half();
    rx = ((t0 - t3) * rx * ry).mul_fp(half);
    Fp2 halfsum = (t0 + t3).mul_fp(half);
    Fp2 t2sq = t2.square();
    ry = halfsum.square() - (t2sq + t2sq + t2sq);
    rz = t0 * t4;
    return l;
  };

  auto add_step = [&]() {
    Fp2 t0 = ry - qy * rz;
    Fp2 t1 = rx - qx * rz;
    LineEval l;
    l.c0 = t0 * qx - t1 * qy;
    l.c1 = -t0;
    l.c2 = t1;
    Fp2 t2 = t1.square();
    Fp2 t3 = t2 * t1;
    Fp2 t4 = t2 * rx;
    Fp2 t5 = t3 - t4 - t4 + t0.square() * rz;
    rx = t1 * t5;
    ry = (t4 - t5) * t0 - t3 * ry;
    rz = rz * t3;
    return l;
  };

  for (int i = 62; i >= 0; --i) {
    prep.lines.push_back(dbl_step());
    if ((consts::kAteLoop >> i) & 1) prep.lines.push_back(add_step());
  }
  return prep;
}

// x * (o0 + o1 v), the Fp6 half of the sparse line product.
inline Fp6 fp6_mul01(const Fp6& x, const Fp2& o0, const Fp2& o1) {
  Fp2 t0 = x.c0 * o0;
  Fp2 t1 = x.c1 * o1;
  Fp2 r0 = t0 + ((x.c1 + x.c2) * o1 - t1).mul_by_xi();
  Fp2 r1 = (o0 + o1) * (x.c0 + x.c1) - t0 - t1;
  Fp2 r2 = (x.c0 + x.c2) * o0 - t0 + t1;
  return {r0, r1, r2};
}

// x * (o1 v), line coefficient sitting alone in the v slot.
inline Fp6 fp6_mul1(const Fp6& x, const Fp2& o1) {
  return {(x.c2 * o1).mul_by_xi(), x.c0 * o1, x.c1 * o1};
}

// Multiplies f by the sparse line element (l.c0, l.c1*Px, 0; 0, l.c2*Py, 0).
inline Fp12 mul_by_line(const Fp12& f, const LineEval& l, const Fp& px, const Fp& py) {
  Fp2 o0 = l.c0;
  Fp2 o1 = l.c1.mul_fp(px);
  Fp2 o4 = l.c2.mul_fp(py);
  Fp6 t0 = fp6_mul01(f.c0, o0, o1);
  Fp6 t1 = fp6_mul1(f.c1, o4);
  Fp6 mixed = fp6_mul01(f.c0 + f.c1, o0, o1 + o4);
  return {t0 + t1.mul_by_v(), mixed - t0 - t1};
}

// Granger-Scott squaring, valid only in the cyclotomic subgroup.
inline Fp12 cyclotomic_square(const Fp12& f) {
  auto fp4_sq = [](const Fp2& a, const Fp2& b) {
    Fp2 a2 = a.square();
    Fp2 b2 = b.square();
    return std::pair<Fp2, Fp2>{b2.mul_by_xi() + a2, (a + b).square() - a2 - b2};
  };
  auto [t3, t4] = fp4_sq(f.c0.c0, f.c1.c1);
  auto [t5, t6] = fp4_sq(f.c1.c0, f.c0.c2);
  auto [t7, t8] = fp4_sq(f.c0.c1, f.c1.c2);
  Fp2 t9 = t8.mul_by_xi();
  Fp12 r;
  r.c0.c0 = (t3 - f.c0.c0).dbl() + t3;
  r.c0.c1 = (t5 - f.c0.c1).dbl() + t5;
  r.c0.c2 = (t7 - f.c0.c2).dbl() + t7;
  r.c1.c0 = (t9 + f.c1.c0).dbl() + t9;
  r.c1.c1 = (t4 + f.c1.c1).dbl() + t4;
  r.c1.c2 = (t6 + f.c1.c2).dbl() + t6;
  return r;
}

// Square-and-multiply over a big-endian exponent for unitary elements.
inline Fp12 cyclotomic_pow_be(const Fp12& a, std::span<const std::uint8_t> exp) {
  Fp12 r = Fp12::one();
  bool started = false;
  for (std::uint8_t byte : exp) {
    for (int bit = 7; bit >= 0; --bit) {
      if (started) r = cyclotomic_square(r);
      if ((byte >> bit) & 1) {
        r = started ? r * a : a;
        started = true;
      }
    }
  }
  return r;
}

inline Fp12 pow_u64(const Fp12& a, std::uint64_t e) {
  std::array<std::uint8_t, 8> be{};
  for (int i = 0; i < 8; ++i) be[i] = static_cast<std::uint8_t>(e >> (56 - 8 * i));
  return a.pow_be(be);
}

// Miller loop over the ate parameter; conjugated at the end because the
// BLS12-381 x is negative.
inline Fp12 miller_loop(const JacPoint<Fp>& p, const G2Prepared& prep) {
  if (p.is_infinity() || prep.infinity) return Fp12::one();
  auto [px, py] = p.to_affine();
  Fp12 f = Fp12::one();
  std::size_t idx = 0;
  for (int i = 62; i >= 0; --i) {
    f = f.square();
    f = mul_by_line(f, prep.lines[idx++], px, py);
    if ((consts::kAteLoop >> i) & 1) f = mul_by_line(f, prep.lines[idx++], px, py);
  }
  return f.conjugate();
}

// a^x for the (negative) curve parameter x; input must be unitary.
inline Fp12 exp_by_neg_x(const Fp12& a) {
  std::array<std::uint8_t, 8> be{};
  for (int i = 0; i < 8; ++i) be[i] = static_cast<std::uint8_t>(consts::kAteLoop >> (56 - 8 * i));
  return cyclotomic_pow_be(a, be).conjugate();
}

inline Fp12 final_exponentiation(const Fp12& f) {
  // easy part: f^((p^6 - 1)(p^2 + 1))
  Fp12 t0 = f.conjugate() * f.inverse();
  Fp12 t1 = t0.frobenius_n(2) * t0;
  // hard part, x-chain; exponent works out to 3*(p^4 - p^2 + 1)/r
  Fp12 t2 = exp_by_neg_x(t1);
  Fp12 t3 = t1.square().conjugate() * t2;
  Fp12 t4 = exp_by_neg_x(t3);
  Fp12 t5 = exp_by_neg_x(t4);
  Fp12 t6 = exp_by_neg_x(t5) * t2.square();
  Fp12 t7 = exp_by_neg_x(t6);
  Fp12 r = (t2 * t5).frobenius_n(2);
  r = r * (t4 * t1).frobenius_n(3);
  r = r * (t6 * t1.conjugate()).frobenius();
  r = r * t7 * t3.conjugate() * t1;
  return r;
}

}  // namespace ff

// Element of the order-r target group inside Fp12.
class GtElement {
 public:
  static constexpr std::size_t kBytes = 576;

  GtElement() : val_(ff::Fp12::one()) {}

  static GtElement identity() { return {}; }

  bool is_identity() const { return val_.is_one(); }
  bool operator==(const GtElement& o) const { return val_ == o.val_; }
  bool operator!=(const GtElement& o) const { return !(*this == o); }

  GtElement operator*(const GtElement& o) const { return GtElement(val_ * o.val_); }

  // Pairing outputs are unitary, so conjugation inverts.
  GtElement inverse() const { return GtElement(val_.conjugate()); }

  GtElement exp(const Scalar& k) const {
    auto be = k.to_bytes_be();
    return GtElement(ff::cyclotomic_pow_be(val_, be));
  }

  std::array<std::uint8_t, kBytes> serialize() const {
    std::array<std::uint8_t, kBytes> out{};
    const ff::Fp* coeffs[12] = {
        &val_.c0.c0.c0, &val_.c0.c0.c1, &val_.c0.c1.c0, &val_.c0.c1.c1,
        &val_.c0.c2.c0, &val_.c0.c2.c1, &val_.c1.c0.c0, &val_.c1.c0.c1,
        &val_.c1.c1.c0, &val_.c1.c1.c1, &val_.c1.c2.c0, &val_.c1.c2.c1,
    };
    for (int i = 0; i < 12; ++i) coeffs[i]->to_bytes_be(out.data() + i * 48);
    return out;
  }

  static std::optional<GtElement> deserialize(std::span<const std::uint8_t> in) {
    if (in.size() != kBytes) return std::nullopt;
    ff::Fp vals[12];
    for (int i = 0; i < 12; ++i) {
      auto f = ff::Fp::from_bytes_be(in.subspan(i * 48, 48));
      if (!f) return std::nullopt;
      vals[i] = *f;
    }
    ff::Fp12 x;
    x.c0 = ff::Fp6{ff::Fp2{vals[0], vals[1]}, ff::Fp2{vals[2], vals[3]}, ff::Fp2{vals[4], vals[5]}};
    x.c1 = ff::Fp6{ff::Fp2{vals[6], vals[7]}, ff::Fp2{vals[8], vals[9]}, ff::Fp2{vals[10], vals[11]}};
    if (x.is_zero()) return std::nullopt;
    if (!x.pow_be(ff::consts::kGroupOrderBe).is_one()) return std::nullopt;
    return GtElement(x);
  }

  const ff::Fp12& raw() const { return val_; }
  static GtElement from_raw_unchecked(const ff::Fp12& v) { return GtElement(v); }

 private:
  explicit GtElement(const ff::Fp12& v) : val_(v) {}
  ff::Fp12 val_;
};

inline GtElement pairing(const G1Point& p, const G2Point& q) {
  auto prep = ff::prepare_g2(q.raw());
  return GtElement::from_raw_unchecked(ff::final_exponentiation(ff::miller_loop(p.raw(), prep)));
}

// prod_i bases[i]^exps[i] with shared squarings.
inline GtElement gt_multi_exp(std::span<const GtElement> bases, std::span<const Scalar> exps) {
  if (bases.size() != exps.size()) throw std::invalid_argument("gt_multi_exp: size mismatch");
  std::vector<std::array<std::uint8_t, 32>> es;
  es.reserve(exps.size());
  for (const auto& e : exps) es.push_back(e.to_bytes_be());
  ff::Fp12 acc = ff::Fp12::one();
  bool started = false;
  for (int byte = 0; byte < 32; ++byte) {
    for (int bit = 7; bit >= 0; --bit) {
      if (started) acc = ff::cyclotomic_square(acc);
      for (std::size_t i = 0; i < bases.size(); ++i) {
        if ((es[i][byte] >> bit) & 1) {
          acc = acc * bases[i].raw();
          started = true;
        }
      }
    }
  }
  return GtElement::from_raw_unchecked(acc);
}

// Product of pairings sharing one final exponentiation.
inline GtElement pairing_product(std::span<const std::pair<G1Point, G2Point>> pairs) {
  ff::Fp12 f = ff::Fp12::one();
  for (const auto& [p, q] : pairs) {
    auto prep = ff::prepare_g2(q.raw());
    f = f * ff::miller_loop(p.raw(), prep);
  }
  return GtElement::from_raw_unchecked(ff::final_exponentiation(f));
}

}  // namespace bpksharp
