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

// HTTP+JSON front of the authority. All group elements cross the wire as
// base64 of canonical compressed bytes; errors are {"error": ...} with a
// meaningful status code.

#include <httplib.h>

#include "bpksharp/service/registry.hpp"

namespace bpksharp::service {

class HttpServer {
 public:
  explicit HttpServer(Authority& authority) : auth_(authority) { route(); }

  // Blocking listen for the CLI `serve` command.
  bool listen(const std::string& host, int port) { return srv_.listen(host, port); }

  // Bind an ephemeral port (tests); call listen_after_bind() on a thread.
  int bind_any(const std::string& host = "127.0.0.1") { return srv_.bind_to_any_port(host); }
  bool listen_after_bind() { return srv_.listen_after_bind(); }
  void stop() { srv_.stop(); }
  bool is_running() const { return srv_.is_running(); }
  void wait_until_ready() const { srv_.wait_until_ready(); }

 private:
  static json body_json(const httplib::Request& req) {
    json j = json::parse(req.body, nullptr, false);
    if (j.is_discarded()) throw ServiceError(400, "request body is not valid JSON");
    return j;
  }

  static void reply(httplib::Response& res, const json& j, int status = 200) {
    res.status = status;
    res.set_content(j.dump(2) + "\n", "application/json");
  }

  template <typename F>
  static void guarded(httplib::Response& res, F&& f) {
    try {
      f();
    } catch (const ServiceError& e) {
      reply(res, json{{"error", e.what()}}, e.status);
    } catch (const ParseError& e) {
      reply(res, json{{"error", e.what()}}, 400);
    } catch (const InvalidInput& e) {
      reply(res, json{{"error", e.what()}}, 400);
    } catch (const std::exception& e) {
      reply(res, json{{"error", std::string("internal error: ") + e.what()}}, 500);
    }
  }

  scheme::NymProof parse_proof(const json& j) const {
    if (!j.contains("proof")) throw ServiceError(400, "missing proof");
    auto b = base64_decode(j["proof"].get<std::string>());
    auto p = b ? scheme::NymProof::deserialize(*b) : std::nullopt;
    if (!p) throw ServiceError(400, "malformed proof");
    return *p;
  }

  G1Point parse_nym(const json& j) const {
    if (!j.contains("nym")) throw ServiceError(400, "missing nym");
    auto b = base64_decode(j["nym"].get<std::string>());
    auto p = b ? G1Point::deserialize(*b) : std::nullopt;
    if (!p) throw ServiceError(400, "malformed nym");
    return *p;
  }

  void route() {
    srv_.Post("/v1/users", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        json body = body_json(req);
        if (!body.contains("identity_attrs")) throw ServiceError(400, "missing identity_attrs");
        auto r = auth_.register_user(body["identity_attrs"], rng_);
        reply(res,
              json{{"uid", r.uid},
                   {"upk", base64_encode(r.upk.serialize())},
                   {"auth_token", r.auth_token}},
              201);
      });
    });

    srv_.Post(R"(/v1/users/([a-z0-9-]+)/key)",
              [this](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] {
                  json body = body_json(req);
                  auto uk = auth_.request_user_key(req.matches[1],
                                                   body.value("auth_token", ""));
                  reply(res, files::user_keypair_to_json(uk));
                });
              });

    srv_.Post("/v1/sps", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        json body = body_json(req);
        auto r = auth_.register_sp(body.value("sp_id", ""), body.value("metadata", json::object()),
                                   body.value("trust_class", "plain"), rng_);
        json out{{"sp_id", r.sp_id},
                 {"sppk", base64_encode(r.sppk.serialize())},
                 {"trust_class", r.trust_class}};
        if (r.provisioned) out["sp_keypair"] = files::sp_keypair_to_json(*r.provisioned);
        reply(res, out, 201);
      });
    });

    srv_.Get(R"(/v1/sps/([a-z0-9-]+))", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { reply(res, auth_.sp_record_public(req.matches[1])); });
    });

    srv_.Get(R"(/v1/users/([a-z0-9-]+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] { reply(res, auth_.user_record_public(req.matches[1])); });
             });

    srv_.Post(R"(/v1/sps/([a-z0-9-]+)/pseudonyms)",
              [this](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] {
                  json body = body_json(req);
                  if (!body.contains("uid")) throw ServiceError(400, "missing uid");
                  auto nym = auth_.compute_pseudonym(req.matches[1], body["uid"],
                                                     body.value("purpose", ""));
                  reply(res, files::pseudonym_to_json(nym));
                });
              });

    srv_.Post("/v1/open", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        json body = body_json(req);
        auto r = auth_.open_pseudonym(parse_proof(body), body.value("source_sp_id", ""),
                                      parse_nym(body), body.value("requester", ""),
                                      body.value("justification", ""));
        reply(res, json{{"uid", r.uid}, {"upk", base64_encode(r.upk.serialize())}});
      });
    });

    srv_.Post("/v1/link", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        json body = body_json(req);
        auto nym = auth_.link_pseudonym(parse_proof(body), body.value("source_sp_id", ""),
                                        parse_nym(body), body.value("target_sp_id", ""),
                                        body.value("requester", ""),
                                        body.value("justification", ""));
        reply(res, files::pseudonym_to_json(nym));
      });
    });

    srv_.Get("/v1/params", [this](const httplib::Request&, httplib::Response& res) {
      guarded(res, [&] { reply(res, auth_.params_json()); });
    });

    srv_.Get("/v1/audit", [this](const httplib::Request&, httplib::Response& res) {
      guarded(res, [&] {
        json out;
        out["entries"] = auth_.audit_log();
        reply(res, out);
      });
    });
  }

  Authority& auth_;
  SystemRng rng_;
  httplib::Server srv_;
};

}  // namespace bpksharp::service
