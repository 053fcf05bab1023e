// CPPHTTPLIB_OPENSSL_SUPPORT comes from the build when OpenSSL is present
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "moea/llm.hpp"
#include "moea/util.hpp"

namespace moea::llm {

LiveBackend::LiveBackend(LiveConfig cfg) : cfg_(std::move(cfg)) {
    const char* key = std::getenv(cfg_.api_key_env.c_str());
    if (key == nullptr || *key == '\0')
        throw BackendError("live backend requires the " + cfg_.api_key_env +
                           " environment variable");
    api_key_ = key;
#ifndef MOEA_HAVE_TLS
    if (cfg_.base_url.rfind("https://", 0) == 0)
        throw BackendError("this build has no TLS support; use an http:// endpoint or rebuild "
                           "with MOEA_ENABLE_TLS");
#endif
}

std::string LiveBackend::describe() const { return "live:" + cfg_.base_url + " " + cfg_.model; }

std::string LiveBackend::request_body(const std::string& prompt) const {
    nlohmann::json body;
    body["model"] = cfg_.model;
    // stateless by construction: exactly one user message, no history
    body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", prompt}}});
    body["temperature"] = cfg_.temperature;
    return body.dump();
}

std::string LiveBackend::complete(const std::string& prompt) {
    if (cfg_.min_interval_ms > 0) {
        std::int64_t now = util::unix_time_ms();
        std::int64_t wait = last_request_ms_ + cfg_.min_interval_ms - now;
        if (wait > 0) std::this_thread::sleep_for(std::chrono::milliseconds(wait));
    }
    last_request_ms_ = util::unix_time_ms();

    httplib::Client client(cfg_.base_url);
    client.set_connection_timeout(cfg_.timeout_s, 0);
    client.set_read_timeout(cfg_.timeout_s, 0);
    httplib::Headers headers{{"Authorization", "Bearer " + api_key_}};
    auto res = client.Post(cfg_.path, headers, request_body(prompt), "application/json");
    if (!res) throw BackendError("live backend transport failure: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw BackendError("live backend HTTP " + std::to_string(res->status) + ": " + res->body);
    try {
        nlohmann::json j = nlohmann::json::parse(res->body);
        return j.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& err) {
        throw BackendError(std::string("live backend malformed response: ") + err.what());
    }
}

}  // namespace moea::llm
