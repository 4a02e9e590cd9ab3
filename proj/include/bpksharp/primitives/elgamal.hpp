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

// ElGamal over G1 with base K and message space G1.
// Enc(pk, m; r) = (K^r, pk^r * m), Dec(sk, (c1, c2)) = c2 * c1^(-sk).

#include "bpksharp/algebra/group_params.hpp"

namespace bpksharp::elgamal {

struct KeyPair {
  Scalar sk;
  G1Point pk;  // = K^sk
};

struct Ciphertext {
  G1Point c1, c2;

  bool operator==(const Ciphertext& o) const { return c1 == o.c1 && c2 == o.c2; }
};

inline KeyPair keygen(const GroupParams& pp, RandomSource& rng) {
  KeyPair kp;
  kp.sk = Scalar::random_nonzero(rng);
  kp.pk = pp.k() * kp.sk;
  return kp;
}

inline Ciphertext encrypt(const GroupParams& pp, const G1Point& pk, const G1Point& msg,
                          const Scalar& r) {
  if (r.is_zero()) throw InvalidInput("elgamal: zero encryption randomness");
  return {pp.k() * r, pk * r + msg};
}

inline Ciphertext encrypt(const GroupParams& pp, const G1Point& pk, const G1Point& msg,
                          RandomSource& rng) {
  return encrypt(pp, pk, msg, Scalar::random_nonzero(rng));
}

// Total on any ciphertext, including the degenerate c1 = identity case.
inline G1Point decrypt(const Scalar& sk, const Ciphertext& ct) {
  return ct.c2 - ct.c1 * sk;
}

}  // namespace bpksharp::elgamal
