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

// JSON envelopes for every artifact that crosses a file or wire boundary.
// Group elements travel as base64 of their canonical compressed bytes;
// envelopes carrying secrets are marked "secret": true and should be kept
// with owner-only permissions.

#include <nlohmann/json.hpp>

#include <fstream>

#include "bpksharp/scheme/bpk.hpp"

namespace bpksharp::files {

using json = nlohmann::ordered_json;

inline std::string b64(std::span<const std::uint8_t> b) { return base64_encode(b); }

inline Bytes unb64(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    throw ParseError(std::string("missing field: ") + field);
  auto v = base64_decode(j[field].get<std::string>());
  if (!v) throw ParseError(std::string("bad base64 in field: ") + field);
  return *v;
}

inline void expect_kind(const json& j, const char* kind) {
  if (!j.is_object() || j.value("version", "") != kParamsVersion || j.value("kind", "") != kind)
    throw ParseError(std::string("envelope is not a ") + kind);
}

inline G1Point g1_field(const json& j, const char* field) {
  auto b = unb64(j, field);
  auto p = G1Point::deserialize(b);
  if (!p) throw ParseError(std::string("invalid G1 element: ") + field);
  return *p;
}

inline G2Point g2_field(const json& j, const char* field) {
  auto b = unb64(j, field);
  auto p = G2Point::deserialize(b);
  if (!p) throw ParseError(std::string("invalid G2 element: ") + field);
  return *p;
}

inline Scalar scalar_field(const json& j, const char* field) {
  auto b = unb64(j, field);
  auto s = Scalar::from_bytes(b);
  if (!s) throw ParseError(std::string("invalid scalar: ") + field);
  return *s;
}

// ---- params ----

inline json params_to_json(const scheme::PublicParams& pp) {
  json j;
  j["version"] = kParamsVersion;
  j["kind"] = "params";
  j["security_level"] = 128;
  j["seed"] = b64(pp.group.seed());
  j["y"] = b64(pp.group.y().serialize());
  j["h"] = b64(pp.group.h().serialize());
  j["k"] = b64(pp.group.k().serialize());
  return j;
}

// Re-derives the constants from the seed and insists the stored copies
// match, so a tampered params file cannot smuggle trapdoored bases.
inline scheme::PublicParams params_from_json(const json& j) {
  expect_kind(j, "params");
  if (j.value("security_level", 0) != 128) throw ParseError("unsupported security level");
  Bytes seed = unb64(j, "seed");
  auto pp = scheme::setup(128, seed);
  if (g1_field(j, "y") != pp.group.y() || g1_field(j, "h") != pp.group.h() ||
      g1_field(j, "k") != pp.group.k())
    throw ParseError("params constants do not match seed derivation");
  return pp;
}

// ---- master keys ----

inline json master_keypair_to_json(const scheme::MasterKeyPair& mk) {
  json j;
  j["version"] = kParamsVersion;
  j["kind"] = "master-keypair";
  j["secret"] = true;
  j["msk_sig"] = b64(mk.msk_sig.to_bytes());
  j["msk_enc"] = b64(mk.msk_enc.to_bytes());
  j["mpk_sig"] = b64(mk.mpk.sig.serialize());
  j["mpk_enc"] = b64(mk.mpk.enc.serialize());
  return j;
}

inline scheme::MasterKeyPair master_keypair_from_json(const json& j, const GroupParams& g) {
  expect_kind(j, "master-keypair");
  scheme::MasterKeyPair mk;
  mk.msk_sig = scalar_field(j, "msk_sig");
  mk.msk_enc = scalar_field(j, "msk_enc");
  G2Point sig = g2_field(j, "mpk_sig");
  G1Point enc = g1_field(j, "mpk_enc");
  if (sig != G2Point::generator() * mk.msk_sig || enc != g.k() * mk.msk_enc)
    throw ParseError("master public key does not match secret key");
  mk.mpk = scheme::MasterPublicKey::assemble(g, sig, enc);
  return mk;
}

inline json master_public_to_json(const scheme::MasterPublicKey& mpk) {
  json j;
  j["version"] = kParamsVersion;
  j["kind"] = "master-public";
  j["mpk_sig"] = b64(mpk.sig.serialize());
  j["mpk_enc"] = b64(mpk.enc.serialize());
  return j;
}

inline scheme::MasterPublicKey master_public_from_json(const json& j, const GroupParams& g) {
  expect_kind(j, "master-public");
  return scheme::MasterPublicKey::assemble(g, g2_field(j, "mpk_sig"), g1_field(j, "mpk_enc"));
}

// ---- user / SP keys ----

inline json user_keypair_to_json(const scheme::UserKeyPair& uk) {
  json j;
  j["version"] = kParamsVersion;
  j["kind"] = "user-keypair";
  j["secret"] = true;
  j["usk"] = b64(uk.usk.to_bytes());
  j["sigma_r_hat"] = b64(uk.sigma.r_hat.serialize());
  j["sigma_s"] = b64(uk.sigma.s.serialize());
  j["sigma_t"] = b64(uk.sigma.t.serialize());
  j["upk"] = b64(uk.upk.serialize());
  return j;
}

inline scheme::UserKeyPair user_keypair_from_json(const json& j, const GroupParams& g) {
  expect_kind(j, "user-keypair");
  scheme::UserKeyPair uk;
  uk.usk = scalar_field(j, "usk");
  uk.sigma = {g2_field(j, "sigma_r_hat"), g1_field(j, "sigma_s"), g1_field(j, "sigma_t")};
  uk.upk = g1_field(j, "upk");
  if (uk.usk.is_zero() || uk.upk != g.h() * uk.usk)
    throw ParseError("user public key does not match secret key");
  return uk;
}

inline json sp_keypair_to_json(const scheme::SPKeyPair& sp) {
  json j;
  j["version"] = kParamsVersion;
  j["kind"] = "sp-keypair";
  j["secret"] = true;
  j["spsk"] = b64(sp.spsk.to_bytes());
  j["sppk"] = b64(sp.sppk.serialize());
  return j;
}

inline scheme::SPKeyPair sp_keypair_from_json(const json& j, const GroupParams& g) {
  expect_kind(j, "sp-keypair");
  scheme::SPKeyPair sp;
  sp.spsk = scalar_field(j, "spsk");
  sp.sppk = g1_field(j, "sppk");
  if (sp.spsk.is_zero() || sp.sppk != g.h() * sp.spsk)
    throw ParseError("sp public key does not match secret key");
  return sp;
}

inline json sp_public_to_json(const G1Point& sppk) {
  json j;
  j["version"] = kParamsVersion;
  j["kind"] = "sp-public";
  j["sppk"] = b64(sppk.serialize());
  return j;
}

inline G1Point sp_public_from_json(const json& j) {
  expect_kind(j, "sp-public");
  return g1_field(j, "sppk");
}

// ---- pseudonyms and proofs ----

inline json pseudonym_to_json(const scheme::Pseudonym& nym) {
  json j;
  j["version"] = kParamsVersion;
  j["kind"] = "pseudonym";
  j["nym"] = b64(nym.nym.serialize());
  j["sppk_digest"] = b64(nym.sppk_digest);
  return j;
}

inline scheme::Pseudonym pseudonym_from_json(const json& j) {
  expect_kind(j, "pseudonym");
  scheme::Pseudonym n;
  n.nym = g1_field(j, "nym");
  Bytes d = unb64(j, "sppk_digest");
  if (d.size() != 32) throw ParseError("bad sppk digest length");
  std::copy(d.begin(), d.end(), n.sppk_digest.begin());
  if (n.nym.is_identity()) throw ParseError("identity pseudonym");
  return n;
}

inline json proof_to_json(const scheme::NymProof& proof) {
  json j;
  j["version"] = kParamsVersion;
  j["kind"] = "nym-proof";
  j["bytes"] = b64(proof.serialize());
  return j;
}

inline scheme::NymProof proof_from_json(const json& j) {
  expect_kind(j, "nym-proof");
  Bytes b = unb64(j, "bytes");
  auto p = scheme::NymProof::deserialize(b);
  if (!p) throw ParseError("malformed proof bytes");
  return *p;
}

// ---- file I/O ----

inline void save_json(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ParseError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in file: " + path);
  return j;
}

}  // namespace bpksharp::files
