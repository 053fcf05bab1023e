#include "moea/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "moea/util.hpp"

namespace moea::io {

std::string format_double(double v) {
    // shortest representation that parses back exactly
    char buf[40];
    for (int precision : {15, 16, 17}) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

void write_front_csv(const std::string& path, const std::vector<Individual>& members, int m,
                     bool include_x) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (int j = 0; j < m; ++j) out << (j ? "," : "") << "f" << (j + 1);
    if (include_x && !members.empty())
        for (std::size_t k = 0; k < members.front().x.size(); ++k) out << ",x" << (k + 1);
    out << "\n";
    for (const auto& ind : members) {
        for (int j = 0; j < m; ++j) out << (j ? "," : "") << format_double(ind.f[j]);
        if (include_x)
            for (double v : ind.x) out << "," << format_double(v);
        out << "\n";
    }
}

std::vector<Vec> read_front_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Vec> rows;
    std::string line;
    int f_columns = -1;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (util::trim(line).empty()) continue;
        auto cells = util::split(line, ',');
        if (first) {
            first = false;
            if (!cells.empty() && cells[0].size() >= 1 && (cells[0][0] == 'f' || cells[0][0] == 'F')) {
                f_columns = 0;
                for (const auto& c : cells)
                    if (!c.empty() && (c[0] == 'f' || c[0] == 'F')) ++f_columns;
                continue;  // header row
            }
        }
        Vec row;
        for (const auto& cell : cells) {
            if (f_columns >= 0 && static_cast<int>(row.size()) == f_columns) break;
            std::size_t used = 0;
            double v = std::stod(cell, &used);
            if (used == 0) throw std::runtime_error("bad numeric cell in " + path);
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("ragged rows in " + path);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "evals,hv,igd\n";
    for (const auto& row : rows)
        out << row.evals << "," << format_double(row.hv) << "," << format_double(row.igd) << "\n";
}

std::vector<TrajectoryRow> read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<TrajectoryRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (util::trim(line).empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("evals", 0) == 0) continue;
        }
        auto cells = util::split(line, ',');
        if (cells.size() != 3) throw std::runtime_error("bad trajectory row in " + path);
        rows.push_back({std::stoll(cells[0]), std::stod(cells[1]), std::stod(cells[2])});
    }
    return rows;
}

KeyValues KeyValues::parse_text(const std::string& text) {
    KeyValues kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = util::trim(line.substr(0, eq));
        std::string value = util::trim(line.substr(eq + 1));
        if (!key.empty()) kv.values_[key] = value;
    }
    return kv;
}

KeyValues KeyValues::parse_file(const std::string& path) { return parse_text(slurp(path)); }

bool KeyValues::has(const std::string& key) const { return values_.count(key) > 0; }

std::optional<std::string> KeyValues::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::string KeyValues::get_or(const std::string& key, const std::string& fallback) const {
    auto v = get(key);
    return v ? *v : fallback;
}

double KeyValues::get_double(const std::string& key, double fallback) const {
    auto v = get(key);
    return v ? std::stod(*v) : fallback;
}

long long KeyValues::get_int(const std::string& key, long long fallback) const {
    auto v = get(key);
    return v ? std::stoll(*v) : fallback;
}

void KeyValues::set(const std::string& key, const std::string& value) { values_[key] = value; }

std::string KeyValues::serialize() const {
    std::string out;
    for (const auto& [key, value] : values_) out += key + " = " + value + "\n";
    return out;
}

void save_lo_weights(const std::string& path, const ops::LoWeights& w) {
    KeyValues kv;
    kv.set("a", format_double(w.a));
    kv.set("b", format_double(w.b));
    kv.set("c", format_double(w.c));
    kv.set("d", format_double(w.d));
    kv.set("theta", format_double(w.theta));
    kv.set("dim_prob", format_double(w.dim_prob));
    kv.set("l", std::to_string(w.l));
    spit(path, kv.serialize());
}

ops::LoWeights load_lo_weights(const std::string& path) {
    KeyValues kv = KeyValues::parse_file(path);
    ops::LoWeights w;
    w.a = kv.get_double("a", w.a);
    w.b = kv.get_double("b", w.b);
    w.c = kv.get_double("c", w.c);
    w.d = kv.get_double("d", w.d);
    w.theta = kv.get_double("theta", w.theta);
    w.dim_prob = kv.get_double("dim_prob", w.dim_prob);
    w.l = static_cast<int>(kv.get_int("l", w.l));
    return w;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

}  // namespace moea::io
