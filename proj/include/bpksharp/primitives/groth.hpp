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

// Structure-preserving signatures on single G1 messages. Keys live in G2,
// signatures are (R_hat, S, T) with
//   S = (Y * G^sk)^(1/r),  T = (Y^sk * msg)^(1/r),  R_hat = G2^r,
// verified by two pairing equations. Signatures rerandomize freely, which
// is what makes them blindable inside pseudonym proofs.

#include "bpksharp/algebra/group_params.hpp"

namespace bpksharp::groth {

struct KeyPair {
  Scalar sk;
  G2Point pk;  // = G2^sk
};

struct Signature {
  G2Point r_hat;
  G1Point s;
  G1Point t;
};

inline KeyPair keygen(RandomSource& rng) {
  KeyPair kp;
  kp.sk = Scalar::random_nonzero(rng);
  kp.pk = G2Point::generator() * kp.sk;
  return kp;
}

inline Signature sign(const GroupParams& pp, const Scalar& sk, const G1Point& msg,
                      RandomSource& rng) {
  if (sk.is_zero()) throw InvalidInput("groth sign: zero secret key");
  Scalar r = Scalar::random_nonzero(rng);
  Scalar rinv = r.inverse();
  Signature sig;
  sig.r_hat = G2Point::generator() * r;
  sig.s = (pp.y() + G1Point::generator() * sk) * rinv;
  sig.t = (pp.y() * sk + msg) * rinv;
  return sig;
}

// Rerandomization with an explicit randomizer; r' = 1 leaves sig unchanged.
inline Signature rand_with(const Signature& sig, const Scalar& r_prime) {
  if (r_prime.is_zero()) throw InvalidInput("groth rand: zero randomizer");
  Scalar inv = r_prime.inverse();
  return {sig.r_hat * r_prime, sig.s * inv, sig.t * inv};
}

inline Signature rand(const Signature& sig, RandomSource& rng) {
  return rand_with(sig, Scalar::random_nonzero(rng));
}

// Per-pk pairing constants reused across sign/verify heavy paths.
struct PreparedPk {
  G2Point pk;
  GtElement gt_g_pk;  // e(G, pk)
  GtElement gt_y_pk;  // e(Y, pk)
};

inline PreparedPk prepare(const GroupParams& pp, const G2Point& pk) {
  return {pk, pairing(G1Point::generator(), pk), pairing(pp.y(), pk)};
}

inline bool verify(const GroupParams& pp, const PreparedPk& pk, const Signature& sig,
                   const G1Point& msg) {
  if (sig.r_hat.is_identity()) return false;
  if (pairing(sig.s, sig.r_hat) != pp.gt_y_g2() * pk.gt_g_pk) return false;
  return pairing(sig.t, sig.r_hat) == pk.gt_y_pk * pairing(msg, G2Point::generator());
}

inline bool verify(const GroupParams& pp, const G2Point& pk, const Signature& sig,
                   const G1Point& msg) {
  return verify(pp, prepare(pp, pk), sig, msg);
}

}  // namespace bpksharp::groth
