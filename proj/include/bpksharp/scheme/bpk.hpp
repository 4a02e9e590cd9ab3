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

// The delegatable pseudonym scheme. The authority issues NIKE keys to users
// (signed) and service providers; a pseudonym is the NIKE shared key of a
// (user, SP) pair, so user-side and SP-side computation commute. User-side
// generation attaches a proof of well-formedness that escrows the user
// public key toward the authority's opening key.

#include <functional>

#include "bpksharp/nizk/nym_proof.hpp"
#include "bpksharp/primitives/nike.hpp"

namespace bpksharp::scheme {

struct PublicParams {
  GroupParams group;
};

// Only the 128-bit level is wired up; the group layer is generic over any
// prime-order type-3 pairing configuration.
inline PublicParams setup(int security_level, std::span<const std::uint8_t> seed) {
  if (security_level != 128) throw InvalidInput("setup: unsupported security level");
  if (seed.empty()) throw InvalidInput("setup: empty seed");
  return {GroupParams::derive(seed)};
}

struct MasterPublicKey {
  G2Point sig;  // Groth verification key
  G1Point enc;  // ElGamal opening key
  groth::PreparedPk prepared;

  static MasterPublicKey assemble(const GroupParams& pp, const G2Point& sig, const G1Point& enc) {
    return {sig, enc, groth::prepare(pp, sig)};
  }
};

struct MasterKeyPair {
  Scalar msk_sig;
  Scalar msk_enc;
  MasterPublicKey mpk;
};

struct UserKeyPair {
  Scalar usk;              // NIKE secret usk'
  groth::Signature sigma;  // authority signature on upk
  G1Point upk;             // = H^usk
};

struct SPKeyPair {
  Scalar spsk;
  G1Point sppk;  // = H^spsk
};

// A pseudonym is a G1 element bound to its domain by the SP key digest.
struct Pseudonym {
  G1Point nym;
  std::array<std::uint8_t, 32> sppk_digest{};

  bool operator==(const Pseudonym& o) const {
    return nym == o.nym && sppk_digest == o.sppk_digest;
  }
};

inline std::array<std::uint8_t, 32> sp_digest(const G1Point& sppk) {
  auto b = sppk.serialize();
  Bytes in;
  append(in, std::string("bpk-sharp/v1/sp-digest"));
  append(in, b);
  return sha256(in);
}

using NymProof = nizk::NymProof;

inline MasterKeyPair keygen(const PublicParams& pp, RandomSource& rng) {
  auto sig = groth::keygen(rng);
  auto enc = elgamal::keygen(pp.group, rng);
  MasterKeyPair mk;
  mk.msk_sig = sig.sk;
  mk.msk_enc = enc.sk;
  mk.mpk = MasterPublicKey::assemble(pp.group, sig.pk, enc.pk);
  return mk;
}

inline UserKeyPair keygen_user(const PublicParams& pp, const MasterKeyPair& msk,
                               RandomSource& rng) {
  auto nk = nike::keygen(pp.group, rng);
  UserKeyPair uk;
  uk.usk = nk.sk;
  uk.upk = nk.pk;
  uk.sigma = groth::sign(pp.group, msk.msk_sig, uk.upk, rng);
  return uk;
}

// msk is an authorization-only input here: the construction never uses it
// algebraically for SP keys. Callers enforce who may invoke this.
inline SPKeyPair keygen_sp(const PublicParams& pp, const MasterKeyPair& msk, RandomSource& rng) {
  (void)msk;
  auto nk = nike::keygen(pp.group, rng);
  return {nk.sk, nk.pk};
}

inline std::pair<Pseudonym, NymProof> nymgen_user(const PublicParams& pp, const UserKeyPair& usk,
                                                  const MasterPublicKey& mpk, const G1Point& sppk,
                                                  RandomSource& rng) {
  if (sppk.is_identity()) throw InvalidInput("nymgen: identity SP public key");
  if (usk.usk.is_zero()) throw InvalidInput("nymgen: zero user secret");

  const GroupParams& g = pp.group;
  G1Point upk = usk.upk;
  G1Point nym = nike::sharekey(sppk, usk.usk);

  Scalar r = Scalar::random_nonzero(rng);
  auto c = elgamal::encrypt(g, mpk.enc, upk, r);

  auto sigma_r = groth::rand(usk.sigma, rng);
  Scalar alpha = Scalar::random_nonzero(rng);
  Scalar beta = Scalar::random_nonzero(rng);
  Scalar s = Scalar::random_nonzero(rng);

  NymProof proof;
  proof.c = c;
  proof.sig_r_hat = sigma_r.r_hat;
  proof.sig_s = sigma_r.s * alpha.inverse();
  proof.sig_t = sigma_r.t * beta.inverse();
  proof.upk_blind = upk * s.inverse();

  nizk::NymStatement st = proof.to_statement(mpk.sig, mpk.enc, sppk, nym);
  nizk::NymWitness w{r, s, usk.usk, alpha, beta};
  proof.transcript = nizk::prove(g, mpk.prepared, st, w, rng);

  return {Pseudonym{nym, sp_digest(sppk)}, proof};
}

inline Pseudonym nymgen_sp(const PublicParams& pp, const Scalar& spsk,
                           const MasterPublicKey& mpk, const G1Point& upk) {
  (void)mpk;
  if (upk.is_identity()) throw InvalidInput("nymgen_sp: identity user public key");
  G1Point nym = nike::sharekey(upk, spsk);
  return {nym, sp_digest(nike::derive_pk(pp.group, spsk))};
}

inline bool nymvf(const PublicParams& pp, const MasterPublicKey& mpk, const G1Point& sppk,
                  const G1Point& nym, const NymProof& proof) {
  nizk::NymStatement st = proof.to_statement(mpk.sig, mpk.enc, sppk, nym);
  return nizk::verify(pp.group, mpk.prepared, st, proof.transcript);
}

// Decrypts the escrowed user public key. Correct openings require the
// proof to have been verified first; this operation itself is total.
inline G1Point open(const NymProof& proof, const MasterKeyPair& msk) {
  return elgamal::decrypt(msk.msk_enc, proof.c);
}

// Cross-domain translation: verify, open, recompute in the target domain.
inline Pseudonym link(const PublicParams& pp, const MasterKeyPair& msk, const G1Point& source_sppk,
                      const G1Point& source_nym, const NymProof& proof, const Scalar& target_spsk,
                      const std::function<bool(const G1Point&)>& upk_registered) {
  if (!nymvf(pp, msk.mpk, source_sppk, source_nym, proof))
    throw InvalidInput("link: proof does not verify for the source domain");
  G1Point upk = open(proof, msk);
  if (!upk_registered(upk)) throw InvalidInput("link: opened key is not a registered user");
  return nymgen_sp(pp, target_spsk, msk.mpk, upk);
}

}  // namespace bpksharp::scheme
