#include "moea/llm.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "moea/util.hpp"

namespace moea::llm {

namespace {

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

constexpr const char* kStart = "<start>";
constexpr const char* kEnd = "<end>";

}  // namespace

std::string build_prompt(const PromptSpec& spec) {
    if (spec.parents_worst_first.empty())
        throw std::invalid_argument("build_prompt: empty parent list");
    if (spec.d < 1) throw std::invalid_argument("build_prompt: dimension must be positive");
    for (const auto& [x, value] : spec.parents_worst_first)
        if (static_cast<int>(x.size()) != spec.d)
            detail::throw_size_mismatch("build_prompt", x.size(), spec.d);

    std::ostringstream out;
    out << "Now you will help me minimize a function with " << spec.d
        << " variables. I have some points and the function values of them. The points start "
           "with "
        << kStart << " and end with " << kEnd
        << ". The points are arranged in descending order based on their function values, where "
           "lower values are better.\n";
    for (const auto& [x, value] : spec.parents_worst_first) {
        out << "point: " << kStart;
        for (std::size_t k = 0; k < x.size(); ++k)
            out << (k ? "," : "") << format_fixed(x[k], spec.decimal_places);
        out << kEnd << "\n";
        out << "value: " << format_fixed(value, spec.decimal_places) << "\n";
    }
    out << "Give me " << spec.s
        << " new points that are different from all points above, and have a function value "
           "lower than any of the above. Do not write code. Do not give any explanation. Each "
           "output new point must start with "
        << kStart << " and end with " << kEnd << ".";
    return out.str();
}

std::vector<Vec> parse_response(const std::string& text, int d, int s) {
    std::vector<Vec> points;
    std::size_t pos = 0;
    const std::size_t start_len = std::strlen(kStart);
    while (static_cast<int>(points.size()) < s) {
        std::size_t begin = text.find(kStart, pos);
        if (begin == std::string::npos) break;
        std::size_t end = text.find(kEnd, begin + start_len);
        if (end == std::string::npos) break;
        pos = end + std::strlen(kEnd);

        std::string payload = text.substr(begin + start_len, end - begin - start_len);
        Vec point;
        bool valid = true;
        for (const auto& cell : util::split(payload, ',')) {
            std::string token = util::trim(cell);
            if (token.empty()) {
                valid = false;
                break;
            }
            char* parsed_end = nullptr;
            double v = std::strtod(token.c_str(), &parsed_end);
            if (parsed_end != token.c_str() + token.size() || !std::isfinite(v)) {
                valid = false;
                break;
            }
            point.push_back(v);
        }
        if (valid && static_cast<int>(point.size()) == d) points.push_back(std::move(point));
    }
    return points;
}

std::uint64_t prompt_digest(const std::string& prompt) {
    // FNV-1a 64
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : prompt) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest_hex(std::uint64_t digest) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

// --- scripted behaviors ----------------------------------------------------

namespace {

/// Pulls the embedded points back out of a prompt; the prompt lists
/// parents worst first, so the best input is the last one.
std::vector<Vec> prompt_points(const std::string& prompt) {
    std::vector<Vec> raw;
    std::size_t pos = 0;
    const std::size_t start_len = std::strlen(kStart);
    for (;;) {
        std::size_t begin = prompt.find(kStart, pos);
        if (begin == std::string::npos) break;
        std::size_t end = prompt.find(kEnd, begin + start_len);
        if (end == std::string::npos) break;
        pos = end + std::strlen(kEnd);
        std::string payload = prompt.substr(begin + start_len, end - begin - start_len);
        Vec point;
        bool ok = !payload.empty();
        for (const auto& cell : util::split(payload, ',')) {
            char* parsed_end = nullptr;
            std::string token = util::trim(cell);
            double v = std::strtod(token.c_str(), &parsed_end);
            if (token.empty() || parsed_end != token.c_str() + token.size()) {
                ok = false;
                break;
            }
            point.push_back(v);
        }
        if (ok) raw.push_back(std::move(point));
    }
    return raw;
}

int requested_points(const std::string& prompt) {
    std::size_t pos = prompt.rfind("Give me ");
    if (pos == std::string::npos) return 2;
    return std::max(1, std::atoi(prompt.c_str() + pos + 8));
}

std::string render_points(const std::vector<Vec>& points) {
    std::ostringstream out;
    for (const auto& p : points) {
        out << kStart;
        for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << format_fixed(p[k], 3);
        out << kEnd << "\n";
    }
    return out.str();
}

}  // namespace

std::unique_ptr<Backend> make_scripted(const std::string& behavior) {
    if (behavior == "echo-best") {
        // repeats the best input point; a degenerate stagnating operator
        return std::make_unique<ScriptedBackend>(behavior, [](const std::string& prompt, int) {
            auto pts = prompt_points(prompt);
            if (pts.empty()) return std::string("no points");
            std::vector<Vec> out(requested_points(prompt), pts.back());
            return render_points(out);
        });
    }
    if (behavior == "midpoint") {
        // centroid of the inputs plus a deterministic small offset per slot
        return std::make_unique<ScriptedBackend>(behavior, [](const std::string& prompt, int call) {
            auto pts = prompt_points(prompt);
            if (pts.empty()) return std::string("no points");
            Vec mid(pts.front().size(), 0.0);
            for (const auto& p : pts)
                for (std::size_t k = 0; k < mid.size(); ++k) mid[k] += p[k] / pts.size();
            std::vector<Vec> out;
            int s = requested_points(prompt);
            for (int i = 0; i < s; ++i) {
                Vec q = mid;
                double shift = 0.001 * ((call + i) % 7 - 3);
                for (double& v : q) v += shift;
                out.push_back(std::move(q));
            }
            return render_points(out);
        });
    }
    if (behavior == "flaky") {
        // unusable on the first two attempts, midpoint afterwards
        return std::make_unique<ScriptedBackend>(behavior, [](const std::string& prompt, int call) {
            if (call < 2) return std::string("I cannot answer that.");
            auto pts = prompt_points(prompt);
            if (pts.empty()) return std::string("no points");
            Vec mid(pts.front().size(), 0.0);
            for (const auto& p : pts)
                for (std::size_t k = 0; k < mid.size(); ++k) mid[k] += p[k] / pts.size();
            return render_points(std::vector<Vec>(requested_points(prompt), mid));
        });
    }
    if (behavior == "malformed") {
        return std::make_unique<ScriptedBackend>(behavior, [](const std::string&, int) {
            return std::string("Here is some prose with no usable payload.");
        });
    }
    throw std::invalid_argument("unknown scripted backend '" + behavior +
                                "'; valid: echo-best, midpoint, flaky, malformed");
}

// --- fixture store ----------------------------------------------------------

std::string RecordedBackend::complete(const std::string& prompt) {
    std::string path = dir_ + "/" + digest_hex(prompt_digest(prompt)) + ".txt";
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BackendError("missing fixture " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_fixture(const std::string& dir, const std::string& prompt, const std::string& response) {
    std::filesystem::create_directories(dir);
    std::string path = dir + "/" + digest_hex(prompt_digest(prompt)) + ".txt";
    std::ofstream out(path, std::ios::binary);
    out << response;
}

std::string RecordingBackend::complete(const std::string& prompt) {
    std::string response = inner_.complete(prompt);
    write_fixture(dir_, prompt, response);
    return response;
}

// --- retry loop -------------------------------------------------------------

GenerateOutcome generate_with_retry(Backend& backend, const PromptSpec& spec, int max_retries,
                                    int subproblem_index) {
    if (max_retries < 1) throw std::invalid_argument("generate_with_retry: max_retries >= 1");
    GenerateOutcome outcome;
    auto& rec = outcome.record;
    rec.subproblem_index = subproblem_index;
    rec.parents.reserve(spec.parents_worst_first.size());
    // the log stores parents best first at full precision
    for (auto it = spec.parents_worst_first.rbegin(); it != spec.parents_worst_first.rend(); ++it) {
        rec.parents.push_back(it->first);
        rec.parent_values.push_back(it->second);
    }
    const std::string prompt = build_prompt(spec);
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        rec.attempts = attempt;
        try {
            rec.response = backend.complete(prompt);
        } catch (const BackendError& err) {
            rec.response = std::string("[backend error] ") + err.what();
            continue;
        }
        auto points = parse_response(rec.response, spec.d, spec.s);
        if (!points.empty()) {
            outcome.points = std::move(points);
            break;
        }
    }
    rec.offspring = outcome.points;
    rec.unix_time_ms = util::unix_time_ms();
    return outcome;
}

// --- interaction log ---------------------------------------------------------

std::string record_to_json(const InteractionRecord& rec) {
    nlohmann::json j;
    j["subproblem_index"] = rec.subproblem_index;
    j["parents"] = rec.parents;
    j["parent_values"] = rec.parent_values;
    j["response"] = rec.response;
    j["offspring"] = rec.offspring;
    j["attempts"] = rec.attempts;
    j["unix_time_ms"] = rec.unix_time_ms;
    return j.dump();
}

InteractionLog::InteractionLog(const std::string& path) : path_(path) {
    out_ = std::fopen(path.c_str(), "ab");
    if (out_ == nullptr) healthy_ = false;
}

InteractionLog::~InteractionLog() {
    if (out_ != nullptr) std::fclose(static_cast<std::FILE*>(out_));
}

bool InteractionLog::append(const InteractionRecord& rec) {
    if (!healthy_) return false;
    std::string line = record_to_json(rec);
    line += "\n";
    auto* f = static_cast<std::FILE*>(out_);
    if (std::fwrite(line.data(), 1, line.size(), f) != line.size() || std::fflush(f) != 0) {
        healthy_ = false;  // logging off, run continues
        return false;
    }
    ++written_;
    return true;
}

InteractionLog::ReadResult InteractionLog::read(const std::string& path) {
    ReadResult result;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open interaction log " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (util::trim(line).empty()) continue;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            InteractionRecord rec;
            rec.subproblem_index = j.at("subproblem_index").get<int>();
            rec.parents = j.at("parents").get<std::vector<Vec>>();
            rec.parent_values = j.at("parent_values").get<Vec>();
            rec.response = j.at("response").get<std::string>();
            rec.offspring = j.at("offspring").get<std::vector<Vec>>();
            rec.attempts = j.at("attempts").get<int>();
            rec.unix_time_ms = j.at("unix_time_ms").get<std::int64_t>();
            result.records.push_back(std::move(rec));
        } catch (const nlohmann::json::exception&) {
            ++result.skipped;
        }
    }
    return result;
}

}  // namespace moea::llm
