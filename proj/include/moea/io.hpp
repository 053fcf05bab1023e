#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moea/core.hpp"
#include "moea/operators.hpp"

namespace moea::io {

/// Shortest representation that round-trips a double exactly (up to 17
/// significant digits).
std::string format_double(double v);

/// Front/population file: header f1..fm, optionally followed by x1..xd.
void write_front_csv(const std::string& path, const std::vector<Individual>& members, int m,
                     bool include_x);

/// Reads the f-columns of a front CSV (header optional; extra x-columns
/// ignored). Throws std::runtime_error on unreadable files or ragged rows.
std::vector<Vec> read_front_csv(const std::string& path);

struct TrajectoryRow {
    long long evals = 0;
    double hv = 0.0;
    double igd = 0.0;
};

void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRow>& rows);
std::vector<TrajectoryRow> read_trajectory_csv(const std::string& path);

/// Flat key = value text: '#' comments, blank lines ignored, whitespace
/// trimmed. Duplicate keys keep the last occurrence.
class KeyValues {
public:
    static KeyValues parse_text(const std::string& text);
    static KeyValues parse_file(const std::string& path);

    bool has(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key, long long fallback) const;

    void set(const std::string& key, const std::string& value);
    std::string serialize() const;

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

/// Operator definition file consumed by the command line: keys a, b, c, d,
/// theta, dim_prob, l.
void save_lo_weights(const std::string& path, const ops::LoWeights& w);
ops::LoWeights load_lo_weights(const std::string& path);

std::string slurp(const std::string& path);
void spit(const std::string& path, const std::string& content);

}  // namespace moea::io
