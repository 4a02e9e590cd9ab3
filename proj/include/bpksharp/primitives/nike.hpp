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

// Diffie-Hellman key exchange in G1 with base H. ShareKey is deterministic
// and symmetric; pk = H^sk is injective on nonzero secrets, which the
// surrounding protocol relies on to identify users by public key.

#include "bpksharp/algebra/group_params.hpp"

namespace bpksharp::nike {

struct KeyPair {
  Scalar sk;
  G1Point pk;  // = H^sk
};

inline KeyPair keygen(const GroupParams& pp, RandomSource& rng) {
  KeyPair kp;
  kp.sk = Scalar::random_nonzero(rng);
  kp.pk = pp.h() * kp.sk;
  return kp;
}

inline G1Point derive_pk(const GroupParams& pp, const Scalar& sk) {
  if (sk.is_zero()) throw InvalidInput("nike: zero secret key");
  return pp.h() * sk;
}

inline G1Point sharekey(const G1Point& pk_other, const Scalar& sk) {
  if (pk_other.is_identity()) throw InvalidInput("nike sharekey: identity public key");
  if (sk.is_zero()) throw InvalidInput("nike sharekey: zero secret key");
  return pk_other * sk;
}

}  // namespace bpksharp::nike
