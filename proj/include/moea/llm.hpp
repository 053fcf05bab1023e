#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moea/core.hpp"

namespace moea::llm {

/// Everything needed to render one optimization prompt. Parents are listed
/// worst first (descending aggregation value), matching the statement in
/// the prompt text that lower values are better and the best point comes
/// last.
struct PromptSpec {
    int d = 0;
    std::vector<std::pair<Vec, double>> parents_worst_first;
    int s = 2;
    int decimal_places = 3;
};

/// Renders the canonical prompt. Throws std::invalid_argument on an empty
/// parent list or a dimension mismatch.
std::string build_prompt(const PromptSpec& spec);

/// Extracts candidate points from a response: every <start>...<end> span
/// is split on commas and kept when it parses to exactly d finite numbers.
/// Returns at most s points, in order of appearance; an empty result means
/// no usable point was found (the caller's retry signal).
std::vector<Vec> parse_response(const std::string& text, int d, int s);

/// FNV-1a 64-bit digest of the canonical prompt text; keys the fixture
/// store.
std::uint64_t prompt_digest(const std::string& prompt);
std::string digest_hex(std::uint64_t digest);

/// One logged call: parents best first at full precision, the raw response
/// of the last attempt, and the parsed offspring.
struct InteractionRecord {
    int subproblem_index = 0;
    std::vector<Vec> parents;
    Vec parent_values;
    std::string response;
    std::vector<Vec> offspring;
    int attempts = 1;
    std::int64_t unix_time_ms = 0;
};

struct BackendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A text-completion backend. Each complete() call is stateless: exactly
/// one user message, no conversation history.
class Backend {
public:
    virtual ~Backend() = default;
    virtual std::string describe() const = 0;
    virtual std::string complete(const std::string& prompt) = 0;
};

/// Deterministic backend driven by a function of (prompt, call index).
class ScriptedBackend : public Backend {
public:
    using Fn = std::function<std::string(const std::string& prompt, int call_index)>;
    ScriptedBackend(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}
    std::string describe() const override { return "scripted:" + name_; }
    std::string complete(const std::string& prompt) override { return fn_(prompt, calls_++); }
    int calls() const { return calls_; }

private:
    std::string name_;
    Fn fn_;
    int calls_ = 0;
};

/// Built-in scripted behaviors: "echo-best" (returns the best input point
/// s times), "midpoint" (centroid of the inputs), "flaky" (malformed on
/// the first two attempts, then midpoint), "malformed" (never parseable).
/// Throws std::invalid_argument for unknown names, listing the valid ones.
std::unique_ptr<Backend> make_scripted(const std::string& behavior);

/// Replays stored responses keyed by prompt digest. A missing fixture
/// raises BackendError.
class RecordedBackend : public Backend {
public:
    explicit RecordedBackend(std::string dir) : dir_(std::move(dir)) {}
    std::string describe() const override { return "recorded:" + dir_; }
    std::string complete(const std::string& prompt) override;

private:
    std::string dir_;
};

/// Writes dir/<digest>.txt for later replay.
void write_fixture(const std::string& dir, const std::string& prompt, const std::string& response);

/// Tee: forwards to an inner backend and records every response as a
/// fixture.
class RecordingBackend : public Backend {
public:
    RecordingBackend(Backend& inner, std::string dir) : inner_(inner), dir_(std::move(dir)) {}
    std::string describe() const override { return inner_.describe() + "+record"; }
    std::string complete(const std::string& prompt) override;

private:
    Backend& inner_;
    std::string dir_;
};

/// Configuration of the HTTP chat-completion backend. The bearer token is
/// read from the environment (api_key_env), never from configuration
/// files.
struct LiveConfig {
    std::string base_url = "https://api.openai.com";
    std::string path = "/v1/chat/completions";
    std::string model = "gpt-3.5-turbo";
    double temperature = 1.0;
    int min_interval_ms = 0;
    int timeout_s = 60;
    std::string api_key_env = "LLM_API_KEY";
};

class LiveBackend : public Backend {
public:
    explicit LiveBackend(LiveConfig cfg);
    std::string describe() const override;
    std::string complete(const std::string& prompt) override;

    /// Request body for a given prompt: {model, messages:[one user
    /// message], temperature}. Exposed for tests of the wire format.
    std::string request_body(const std::string& prompt) const;

private:
    LiveConfig cfg_;
    std::string api_key_;
    std::int64_t last_request_ms_ = 0;
};

struct GenerateOutcome {
    std::vector<Vec> points;  // empty when every attempt failed to parse
    InteractionRecord record;
    bool ok() const { return !points.empty(); }
};

/// Calls the backend statelessly, retrying on unparseable output up to
/// max_retries attempts in total; backend transport errors count as failed
/// attempts. The outcome's record always carries the attempt count and the
/// last response, also on failure.
GenerateOutcome generate_with_retry(Backend& backend, const PromptSpec& spec, int max_retries,
                                    int subproblem_index);

/// Append-only line-delimited interaction log; numeric fields round-trip
/// at full precision. An I/O failure disables the log (append returns
/// false) instead of aborting the run.
class InteractionLog {
public:
    explicit InteractionLog(const std::string& path);
    ~InteractionLog();
    InteractionLog(const InteractionLog&) = delete;
    InteractionLog& operator=(const InteractionLog&) = delete;

    bool append(const InteractionRecord& rec);
    std::size_t written() const { return written_; }
    bool healthy() const { return healthy_; }
    const std::string& path() const { return path_; }

    struct ReadResult {
        std::vector<InteractionRecord> records;
        std::size_t skipped = 0;
    };
    static ReadResult read(const std::string& path);

private:
    std::string path_;
    void* out_;  // FILE*
    std::size_t written_ = 0;
    bool healthy_ = true;
};

std::string record_to_json(const InteractionRecord& rec);

}  // namespace moea::llm
