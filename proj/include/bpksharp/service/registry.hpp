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

// The central authority: persistent registries of users and service
// providers, key issuance, SP-requested pseudonym computation behind an
// eligibility policy, opening, and cross-domain linking. Key material at
// rest is sealed with the service storage key; master and SP secrets never
// appear in any response, and user secrets are released only through the
// authenticated key-request flow.

#include <chrono>
#include <mutex>
#include <set>

#include "bpksharp/scheme/files.hpp"
#include "bpksharp/service/secretbox.hpp"
#include "bpksharp/service/store.hpp"

namespace bpksharp::service {

class ServiceError : public std::runtime_error {
 public:
  ServiceError(int http_status, const std::string& msg)
      : std::runtime_error(msg), status(http_status) {}
  int status;
};

struct ServiceConfig {
  std::string data_path = "bpksharp-data.jsonl";
  std::string listen_address = "127.0.0.1:8791";
  std::string passphrase;
  int kdf_iterations = 100000;
  // sp_id -> purposes the CA will compute pseudonyms for
  std::map<std::string, std::set<std::string>> eligibility;
  // optional fixed setup seed (hex); random when empty
  std::string setup_seed_hex;

  static ServiceConfig from_json(const json& j) {
    ServiceConfig c;
    c.data_path = j.value("data_path", c.data_path);
    c.listen_address = j.value("listen_address", c.listen_address);
    c.passphrase = j.value("passphrase", "");
    c.kdf_iterations = j.value("kdf_iterations", c.kdf_iterations);
    c.setup_seed_hex = j.value("setup_seed_hex", "");
    if (j.contains("eligibility")) {
      for (auto& [sp, purposes] : j.at("eligibility").items()) {
        for (auto& p : purposes) c.eligibility[sp].insert(p.get<std::string>());
      }
    }
    if (c.passphrase.empty()) throw ParseError("config: passphrase is required");
    if (c.kdf_iterations < 1000) throw ParseError("config: kdf_iterations too low");
    return c;
  }

  static ServiceConfig from_file(const std::string& path) {
    auto cfg = from_json(files::load_json(path));
    if (const char* env = std::getenv("BPKSHARP_LISTEN")) cfg.listen_address = env;
    if (const char* env = std::getenv("BPKSHARP_DATA")) cfg.data_path = env;
    return cfg;
  }
};

inline std::string iso8601_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Authority {
 public:
  explicit Authority(const ServiceConfig& cfg) : cfg_(cfg), store_(cfg.data_path) {
    bootstrap();
    next_seq_ = store_.count("audit");
    attempt_seq_ = store_.count("attempts");
  }

  const scheme::PublicParams& params() const { return *pp_; }
  const scheme::MasterKeyPair& master_keys() const { return *msk_; }
  json params_json() const { return files::params_to_json(*pp_); }

  struct RegisteredUser {
    std::string uid;
    G1Point upk;
    std::string auth_token;  // delivered once, out of band in a real system
  };

  RegisteredUser register_user(const json& identity_attrs, RandomSource& rng) {
    if (!identity_attrs.is_object() || identity_attrs.empty())
      throw ServiceError(400, "identity attributes required");
    std::string uid = derive_uid(identity_attrs);
    std::lock_guard lock(write_mu_);
    if (store_.contains("users", uid)) throw ServiceError(409, "user already registered");

    auto uk = scheme::keygen_user(*pp_, *msk_, rng);
    std::string token = fresh_token(rng);

    json rec;
    rec["uid"] = uid;
    rec["upk"] = base64_encode(uk.upk.serialize());
    rec["usk_sealed"] = base64_encode(seal_json(files::user_keypair_to_json(uk), uid));
    rec["token_hash"] = token_hash(token);
    rec["created_at"] = iso8601_now();
    rec["identity_attrs"] = identity_attrs;
    rec["issuance"] = json::array();
    store_.put("users", uid, rec);
    store_.put("upk_index", rec["upk"], json(uid));
    return {uid, uk.upk, token};
  }

  scheme::UserKeyPair request_user_key(const std::string& uid, const std::string& auth_token) {
    std::lock_guard lock(write_mu_);
    auto rec = store_.get("users", uid);
    if (!rec) throw ServiceError(404, "unknown user");
    if (token_hash(auth_token) != rec->value("token_hash", "")) {
      log_attempt("key-request-denied", uid);
      throw ServiceError(401, "authentication failed");
    }
    auto blob = base64_decode(rec->value("usk_sealed", ""));
    auto plain = blob ? open_sealed(storage_key_, *blob, aad(uid)) : std::nullopt;
    if (!plain) throw ServiceError(500, "stored key unsealing failed");
    auto uk = files::user_keypair_from_json(json::parse(plain->begin(), plain->end()),
                                            pp_->group);
    json updated = *rec;
    updated["issuance"].push_back(iso8601_now());
    store_.put("users", uid, updated);
    audit("issue", uid, uid, "");
    return uk;
  }

  struct RegisteredSp {
    std::string sp_id;
    G1Point sppk;
    std::string trust_class;
    // populated only for trusted SPs: simulated HSM provisioning
    std::optional<scheme::SPKeyPair> provisioned;
  };

  RegisteredSp register_sp(const std::string& sp_id, const json& metadata,
                           const std::string& trust_class, RandomSource& rng) {
    if (sp_id.empty() || sp_id.size() > 64 ||
        sp_id.find_first_not_of("abcdefghijklmnopqrstuvwxyz0123456789-") != std::string::npos)
      throw ServiceError(400, "sp_id must be lowercase alphanumeric/dash");
    if (trust_class != "plain" && trust_class != "trusted")
      throw ServiceError(400, "trust_class must be plain or trusted");
    std::lock_guard lock(write_mu_);
    if (store_.contains("sps", sp_id)) throw ServiceError(409, "sp_id already registered");

    auto sp = scheme::keygen_sp(*pp_, *msk_, rng);
    json rec;
    rec["sp_id"] = sp_id;
    rec["sppk"] = base64_encode(sp.sppk.serialize());
    rec["trust_class"] = trust_class;
    // the CA custodies every spsk for link(); trusted SPs additionally get
    // a copy provisioned at registration
    rec["spsk_sealed"] = base64_encode(seal_json(files::sp_keypair_to_json(sp), sp_id));
    rec["metadata"] = metadata;
    rec["created_at"] = iso8601_now();
    store_.put("sps", sp_id, rec);

    RegisteredSp out{sp_id, sp.sppk, trust_class, std::nullopt};
    if (trust_class == "trusted") out.provisioned = sp;
    return out;
  }

  json sp_record_public(const std::string& sp_id) const {
    auto rec = store_.get("sps", sp_id);
    if (!rec) throw ServiceError(404, "unknown sp");
    json out;
    out["sp_id"] = (*rec)["sp_id"];
    out["sppk"] = (*rec)["sppk"];
    out["trust_class"] = (*rec)["trust_class"];
    out["created_at"] = (*rec)["created_at"];
    return out;
  }

  json user_record_public(const std::string& uid) const {
    auto rec = store_.get("users", uid);
    if (!rec) throw ServiceError(404, "unknown user");
    json out;
    out["uid"] = (*rec)["uid"];
    out["upk"] = (*rec)["upk"];
    out["created_at"] = (*rec)["created_at"];
    out["issuance"] = (*rec)["issuance"];
    return out;
  }

  // SP-requested pseudonym computation, gated by the eligibility policy.
  scheme::Pseudonym compute_pseudonym(const std::string& sp_id, const std::string& uid,
                                      const std::string& purpose) {
    std::lock_guard lock(write_mu_);
    auto sprec = store_.get("sps", sp_id);
    if (!sprec) throw ServiceError(404, "unknown sp");
    auto urec = store_.get("users", uid);
    if (!urec) throw ServiceError(404, "unknown user");
    auto pol = cfg_.eligibility.find(sp_id);
    if (pol == cfg_.eligibility.end() || !pol->second.contains(purpose))
      throw ServiceError(403, "eligibility policy denies this purpose");

    auto sp = unseal_sp(*sprec, sp_id);
    G1Point upk = decode_upk(*urec);
    auto nym = scheme::nymgen_sp(*pp_, sp.spsk, msk_->mpk, upk);
    audit("compute-nym", sp_id, uid, sp_id);
    return nym;
  }

  struct Opened {
    std::string uid;
    G1Point upk;
  };

  Opened open_pseudonym(const scheme::NymProof& proof, const std::string& source_sp_id,
                        const G1Point& nym, const std::string& requester,
                        const std::string& justification) {
    std::lock_guard lock(write_mu_);
    require_justification(justification);
    G1Point sppk = sp_pubkey(source_sp_id);
    if (!scheme::nymvf(*pp_, msk_->mpk, sppk, nym, proof))
      throw ServiceError(400, "proof does not verify");
    G1Point upk = scheme::open(proof, *msk_);
    auto uid = store_.get("upk_index", base64_encode(upk.serialize()));
    if (!uid) throw ServiceError(404, "opened key matches no registered user");
    audit("open", requester, uid->get<std::string>(), source_sp_id);
    return {uid->get<std::string>(), upk};
  }

  scheme::Pseudonym link_pseudonym(const scheme::NymProof& proof, const std::string& source_sp_id,
                                   const G1Point& nym, const std::string& target_sp_id,
                                   const std::string& requester, const std::string& justification) {
    std::lock_guard lock(write_mu_);
    require_justification(justification);
    G1Point source_sppk = sp_pubkey(source_sp_id);
    auto target_rec = store_.get("sps", target_sp_id);
    if (!target_rec) throw ServiceError(404, "unknown target sp");
    auto target_sp = unseal_sp(*target_rec, target_sp_id);

    if (!scheme::nymvf(*pp_, msk_->mpk, source_sppk, nym, proof))
      throw ServiceError(400, "proof does not verify");
    G1Point upk = scheme::open(proof, *msk_);
    auto uid = store_.get("upk_index", base64_encode(upk.serialize()));
    if (!uid) throw ServiceError(404, "opened key matches no registered user");

    auto out = scheme::nymgen_sp(*pp_, target_sp.spsk, msk_->mpk, upk);
    audit("link", requester, uid->get<std::string>(), target_sp_id);
    return out;
  }

  std::vector<json> audit_log() const {
    std::vector<json> out;
    for (auto& [k, v] : store_.list("audit")) out.push_back(v);
    return out;
  }

  std::size_t audit_count(const std::string& action) const {
    std::size_t n = 0;
    for (auto& [k, v] : store_.list("audit"))
      if (v.value("action", "") == action) ++n;
    return n;
  }

  json export_store() const { return store_.export_json(); }

 private:
  void bootstrap() {
    auto meta = store_.get("meta", "service");
    if (meta) {
      Bytes salt = files::unb64(*meta, "salt");
      storage_key_ = derive_storage_key(cfg_.passphrase, salt, cfg_.kdf_iterations);
      pp_ = files::params_from_json((*meta)["params"]);
      auto blob = base64_decode(meta->value("msk_sealed", ""));
      auto plain = blob ? open_sealed(storage_key_, *blob, aad("master")) : std::nullopt;
      if (!plain) throw ParseError("cannot unseal master keys (wrong passphrase?)");
      msk_ = files::master_keypair_from_json(json::parse(plain->begin(), plain->end()),
                                             pp_->group);
      return;
    }
    SystemRng rng;
    Bytes seed;
    if (!cfg_.setup_seed_hex.empty()) {
      auto s = from_hex(cfg_.setup_seed_hex);
      if (!s) throw ParseError("config: setup_seed_hex is not hex");
      seed = *s;
    } else {
      seed.resize(32);
      rng.fill(seed);
    }
    pp_ = scheme::setup(128, seed);
    msk_ = scheme::keygen(*pp_, rng);

    Bytes salt(16);
    rng.fill(salt);
    storage_key_ = derive_storage_key(cfg_.passphrase, salt, cfg_.kdf_iterations);

    json meta_rec;
    meta_rec["salt"] = base64_encode(salt);
    meta_rec["params"] = files::params_to_json(*pp_);
    meta_rec["msk_sealed"] =
        base64_encode(seal_json(files::master_keypair_to_json(*msk_), "master"));
    meta_rec["created_at"] = iso8601_now();
    store_.put("meta", "service", meta_rec);
  }

  static std::string derive_uid(const json& attrs) {
    std::string canon = attrs.dump();
    Bytes b(canon.begin(), canon.end());
    return "u-" + to_hex(sha256(b)).substr(0, 16);
  }

  std::string fresh_token(RandomSource& rng) {
    Bytes t(32);
    rng.fill(t);
    return to_hex(t);
  }

  static std::string token_hash(const std::string& token) {
    Bytes b(token.begin(), token.end());
    return to_hex(sha256(b));
  }

  Bytes aad(const std::string& label) const {
    Bytes b;
    append(b, std::string("bpk-sharp/v1/sealed/") + label);
    return b;
  }

  Bytes seal_json(const json& j, const std::string& label) {
    std::string s = j.dump();
    Bytes plain(s.begin(), s.end());
    return seal(storage_key_, plain, aad(label));
  }

  scheme::SPKeyPair unseal_sp(const json& rec, const std::string& sp_id) {
    auto blob = base64_decode(rec.value("spsk_sealed", ""));
    auto plain = blob ? open_sealed(storage_key_, *blob, aad(sp_id)) : std::nullopt;
    if (!plain) throw ServiceError(500, "stored sp key unsealing failed");
    return files::sp_keypair_from_json(json::parse(plain->begin(), plain->end()), pp_->group);
  }

  G1Point sp_pubkey(const std::string& sp_id) const {
    auto rec = store_.get("sps", sp_id);
    if (!rec) throw ServiceError(404, "unknown sp");
    auto b = base64_decode(rec->value("sppk", ""));
    auto p = b ? G1Point::deserialize(*b) : std::nullopt;
    if (!p) throw ServiceError(500, "corrupt sp record");
    return *p;
  }

  static G1Point decode_upk(const json& urec) {
    auto b = base64_decode(urec.value("upk", ""));
    auto p = b ? G1Point::deserialize(*b) : std::nullopt;
    if (!p) throw ServiceError(500, "corrupt user record");
    return *p;
  }

  static void require_justification(const std::string& justification) {
    if (justification.empty())
      throw ServiceError(403, "a justification is required for this operation");
  }

  void audit(const std::string& action, const std::string& actor, const std::string& subject_uid,
             const std::string& target_domain) {
    json e;
    e["seq"] = next_seq_;
    e["timestamp"] = iso8601_now();
    e["actor"] = actor;
    e["action"] = action;
    e["subject_uid"] = subject_uid;
    e["target_domain"] = target_domain;
    char key[24];
    std::snprintf(key, sizeof(key), "%012llu", static_cast<unsigned long long>(next_seq_));
    store_.put("audit", key, e);
    ++next_seq_;
  }

  void log_attempt(const std::string& what, const std::string& uid) {
    json e;
    e["timestamp"] = iso8601_now();
    e["what"] = what;
    e["uid"] = uid;
    char key[24];
    std::snprintf(key, sizeof(key), "%012llu", static_cast<unsigned long long>(attempt_seq_++));
    store_.put("attempts", key, e);
  }

  ServiceConfig cfg_;
  KvStore store_;
  SecretKey storage_key_{};
  std::optional<scheme::PublicParams> pp_;
  std::optional<scheme::MasterKeyPair> msk_;
  std::mutex write_mu_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t attempt_seq_ = 0;
};

}  // namespace bpksharp::service
