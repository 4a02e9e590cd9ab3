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

// Schnorr-style proof of pseudonym well-formedness, Fiat-Shamir compiled.
// The statement couples a blinded rerandomized signature (R'', S'', T''),
// an ElGamal escrow of the user public key, the blinded key upk', and the
// pseudonym, through six relations over witnesses (r, s, usk', alpha, beta):
//
//   (E1) e(S'', R'')^alpha = e(Y, G2) * e(G, mpk_sig)
//   (E2) e(T'', R'')^beta  = e(Y, mpk_sig) * e(upk', G2)^s
//   (E3) c1 = K^r
//   (E4) c2 = upk'^s * mpk_enc^r
//   (E5) upk'^s = H^usk'
//   (E6) nym = sppk^usk'
//
// The transcript ships only (challenge, responses); the verifier recomputes
// the commitments and re-derives the challenge.

#include <array>
#include <optional>

#include "bpksharp/primitives/elgamal.hpp"
#include "bpksharp/primitives/groth.hpp"

namespace bpksharp::nizk {

inline constexpr const char* kProofDomainTag = "bpk-sharp/v1/nym-proof";

struct NymStatement {
  G2Point mpk_sig;
  G1Point mpk_enc;
  G1Point sppk;
  G1Point nym;
  elgamal::Ciphertext c;
  G2Point sig_r_hat;  // R''
  G1Point sig_s;      // S''
  G1Point sig_t;      // T''
  G1Point upk_blind;  // upk'

  bool well_formed() const {
    return !upk_blind.is_identity() && !nym.is_identity() && !sppk.is_identity();
  }
};

struct NymWitness {
  Scalar r;      // ElGamal randomness
  Scalar s;      // upk blinding
  Scalar usk;    // NIKE secret usk'
  Scalar alpha;  // S'' blinding
  Scalar beta;   // T'' blinding

  bool nonzero() const {
    return !r.is_zero() && !s.is_zero() && !usk.is_zero() && !alpha.is_zero() && !beta.is_zero();
  }
};

struct NymProofTranscript {
  Scalar e;
  Scalar z_r, z_s, z_usk, z_alpha, z_beta;
};

namespace detail {

// Statement-dependent pairings, each evaluated once per prove/verify call.
struct StatementPairings {
  GtElement sr;   // e(S'', R'')
  GtElement tr;   // e(T'', R'')
  GtElement ug;   // e(upk', G2)
};

inline StatementPairings statement_pairings(const NymStatement& st) {
  return {pairing(st.sig_s, st.sig_r_hat), pairing(st.sig_t, st.sig_r_hat),
          pairing(st.upk_blind, G2Point::generator())};
}

inline Scalar challenge(const GroupParams& pp, const NymStatement& st,
                        const std::array<GtElement, 2>& gt_commitments,
                        const std::array<G1Point, 4>& g1_commitments) {
  Bytes t;
  append_framed(t, pp.digest());
  auto put_g1 = [&t](const G1Point& p) {
    auto b = p.serialize();
    append_framed(t, b);
  };
  auto put_g2 = [&t](const G2Point& p) {
    auto b = p.serialize();
    append_framed(t, b);
  };
  put_g2(st.mpk_sig);
  put_g1(st.mpk_enc);
  put_g1(st.sppk);
  put_g1(st.nym);
  put_g1(st.c.c1);
  put_g1(st.c.c2);
  put_g2(st.sig_r_hat);
  put_g1(st.sig_s);
  put_g1(st.sig_t);
  put_g1(st.upk_blind);
  for (const auto& a : gt_commitments) {
    auto b = a.serialize();
    append_framed(t, b);
  }
  for (const auto& a : g1_commitments) put_g1(a);
  return Scalar::hash(kProofDomainTag, t);
}

}  // namespace detail

namespace detail {

inline bool witness_satisfies(const GroupParams& pp, const groth::PreparedPk& mpk_prep,
                              const NymStatement& st, const NymWitness& w,
                              const StatementPairings& gts) {
  if (!w.nonzero() || !st.well_formed()) return false;
  if (st.c.c1 != pp.k() * w.r) return false;                                   // E3
  if (st.c.c2 != st.upk_blind * w.s + st.mpk_enc * w.r) return false;          // E4
  if (st.upk_blind * w.s != pp.h() * w.usk) return false;                      // E5
  if (st.nym != st.sppk * w.usk) return false;                                 // E6
  if (gts.sr.exp(w.alpha) != pp.gt_y_g2() * mpk_prep.gt_g_pk) return false;  // E1
  if (gt_multi_exp(std::array{gts.tr, gts.ug}, std::array{w.beta, -w.s}) !=
      mpk_prep.gt_y_pk)
    return false;  // E2
  return true;
}

}  // namespace detail

// Witness consistency against all six relations; prove() refuses to emit a
// transcript for a statement it cannot actually prove.
inline bool witness_satisfies(const GroupParams& pp, const groth::PreparedPk& mpk_prep,
                              const NymStatement& st, const NymWitness& w) {
  return detail::witness_satisfies(pp, mpk_prep, st, w, detail::statement_pairings(st));
}

inline NymProofTranscript prove(const GroupParams& pp, const groth::PreparedPk& mpk_prep,
                                const NymStatement& st, const NymWitness& w, RandomSource& rng) {
  if (mpk_prep.pk != st.mpk_sig) throw InvalidInput("prove: prepared key mismatch");
  auto gts = detail::statement_pairings(st);
  if (!detail::witness_satisfies(pp, mpk_prep, st, w, gts))
    throw WitnessMismatch("prove: witness does not satisfy the statement");

  Scalar m_r = Scalar::random(rng);
  Scalar m_s = Scalar::random(rng);
  Scalar m_usk = Scalar::random(rng);
  Scalar m_alpha = Scalar::random(rng);
  Scalar m_beta = Scalar::random(rng);

  std::array<GtElement, 2> gt_commit = {
      gts.sr.exp(m_alpha),                                                  // A1
      gt_multi_exp(std::array{gts.tr, gts.ug}, std::array{m_beta, -m_s}),   // A2
  };
  std::array<G1Point, 4> g1_commit = {
      pp.k() * m_r,                                  // A3
      st.upk_blind * m_s + st.mpk_enc * m_r,         // A4
      st.upk_blind * m_s + pp.h() * (-m_usk),        // A5
      st.sppk * m_usk,                               // A6
  };

  NymProofTranscript out;
  out.e = detail::challenge(pp, st, gt_commit, g1_commit);
  out.z_r = m_r + out.e * w.r;
  out.z_s = m_s + out.e * w.s;
  out.z_usk = m_usk + out.e * w.usk;
  out.z_alpha = m_alpha + out.e * w.alpha;
  out.z_beta = m_beta + out.e * w.beta;
  return out;
}

inline bool verify(const GroupParams& pp, const groth::PreparedPk& mpk_prep,
                   const NymStatement& st, const NymProofTranscript& pf) {
  if (mpk_prep.pk != st.mpk_sig) return false;
  if (!st.well_formed()) return false;

  auto gts = detail::statement_pairings(st);
  Scalar neg_e = -pf.e;
  std::array<GtElement, 2> gt_commit = {
      gt_multi_exp(std::array{gts.sr, pp.gt_y_g2() * mpk_prep.gt_g_pk},
                   std::array{pf.z_alpha, neg_e}),                           // A1'
      gt_multi_exp(std::array{gts.tr, gts.ug, mpk_prep.gt_y_pk},
                   std::array{pf.z_beta, -pf.z_s, neg_e}),                   // A2'
  };
  std::array<G1Point, 4> g1_commit = {
      pp.k() * pf.z_r + st.c.c1 * neg_e,                                     // A3'
      st.upk_blind * pf.z_s + st.mpk_enc * pf.z_r + st.c.c2 * neg_e,         // A4'
      st.upk_blind * pf.z_s + pp.h() * (-pf.z_usk),                          // A5'
      st.sppk * pf.z_usk + st.nym * neg_e,                                   // A6'
  };
  return detail::challenge(pp, st, gt_commit, g1_commit) == pf.e;
}

// The shipped proof object: escrow ciphertext, blinded signature, blinded
// public key, and the Fiat-Shamir transcript.
struct NymProof {
  elgamal::Ciphertext c;
  G2Point sig_r_hat;
  G1Point sig_s;
  G1Point sig_t;
  G1Point upk_blind;
  NymProofTranscript transcript;

  static constexpr std::size_t kBytes = 528;

  // Layout: c1(48) c2(48) R''(96) S''(48) T''(48) upk'(48)
  //         e, z_r, z_s, z_usk, z_alpha, z_beta (32 each).
  std::array<std::uint8_t, kBytes> serialize() const {
    std::array<std::uint8_t, kBytes> out{};
    std::size_t off = 0;
    auto put = [&](std::span<const std::uint8_t> b) {
      std::copy(b.begin(), b.end(), out.begin() + off);
      off += b.size();
    };
    put(c.c1.serialize());
    put(c.c2.serialize());
    put(sig_r_hat.serialize());
    put(sig_s.serialize());
    put(sig_t.serialize());
    put(upk_blind.serialize());
    put(transcript.e.to_bytes());
    put(transcript.z_r.to_bytes());
    put(transcript.z_s.to_bytes());
    put(transcript.z_usk.to_bytes());
    put(transcript.z_alpha.to_bytes());
    put(transcript.z_beta.to_bytes());
    return out;
  }

  static std::optional<NymProof> deserialize(std::span<const std::uint8_t> in) {
    if (in.size() != kBytes) return std::nullopt;
    NymProof p;
    std::size_t off = 0;
    auto g1 = [&](G1Point& out_pt) {
      auto v = G1Point::deserialize(in.subspan(off, 48));
      off += 48;
      if (!v) return false;
      out_pt = *v;
      return true;
    };
    auto g2 = [&](G2Point& out_pt) {
      auto v = G2Point::deserialize(in.subspan(off, 96));
      off += 96;
      if (!v) return false;
      out_pt = *v;
      return true;
    };
    auto sc = [&](Scalar& out_s) {
      auto v = Scalar::from_bytes(in.subspan(off, 32));
      off += 32;
      if (!v) return false;
      out_s = *v;
      return true;
    };
    if (!g1(p.c.c1) || !g1(p.c.c2) || !g2(p.sig_r_hat) || !g1(p.sig_s) || !g1(p.sig_t) ||
        !g1(p.upk_blind))
      return std::nullopt;
    if (!sc(p.transcript.e) || !sc(p.transcript.z_r) || !sc(p.transcript.z_s) ||
        !sc(p.transcript.z_usk) || !sc(p.transcript.z_alpha) || !sc(p.transcript.z_beta))
      return std::nullopt;
    return p;
  }

  NymStatement to_statement(const G2Point& mpk_sig, const G1Point& mpk_enc, const G1Point& sppk,
                            const G1Point& nym) const {
    return {mpk_sig, mpk_enc, sppk, nym, c, sig_r_hat, sig_s, sig_t, upk_blind};
  }
};

}  // namespace bpksharp::nizk
