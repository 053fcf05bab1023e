// Command-line harness: single runs, batch experiments, operator
// distillation, indicator computation, and plot-data extraction.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "moea/algorithms.hpp"
#include "moea/fit.hpp"
#include "moea/indicators.hpp"
#include "moea/io.hpp"
#include "moea/llm.hpp"
#include "moea/stats.hpp"
#include "moea/util.hpp"

namespace fs = std::filesystem;
using namespace moea;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- algorithm dispatch -----------------------------------------------------

const std::vector<std::string> kAlgos = {
    "nsga2",          "moead",          "moead-de",       "moead-lo",      "moead-llm",
    "moead-lo-random", "moead-lo-equal", "moead-lo-linear"};

bool known_algo(const std::string& algo) {
    if (std::find(kAlgos.begin(), kAlgos.end(), algo) != kAlgos.end()) return true;
    return algo.rfind("moead-lo-l", 0) == 0;  // moead-lo-l20, moead-lo-l40, ...
}

std::string algo_list() {
    std::string out;
    for (const auto& a : kAlgos) out += (out.empty() ? "" : ", ") + a;
    return out + ", moead-lo-l<count>";
}

struct RunSettings {
    std::string algo = "moead";
    std::string problem = "zdt1";
    int dim = 0;
    std::uint64_t seed = 1;
    long long evals = -1;  // -1: suite default
    int pop = 0;           // 0: suite default
    int T = 0;
    double sigma1 = 1.0, sigma3 = 0.9;
    double sigma2 = -1.0;  // <0: per-algorithm default (1.0 for moead-de, 0.9 else)
    int l = 10, s = 2;
    double eta_c = 20.0, eta_m = 20.0, de_f = 0.5, de_cr = 1.0, mut_per_var = 0.0;
    std::string lo_file;
    double theta = -1.0, dim_prob = -1.0;  // <0: operator default
    int nr = -1;  // replacement cap; -1: per-algorithm default (2 for moead-de, unbounded else)
    std::size_t archive_cap = 0;
    int snapshot_pct = 5;
    std::string backend = "scripted:midpoint";
    std::string record_dir;
    std::string log_path;
    int max_retries = 3;
    bool mutate_llm = false;
};

long long default_evals(const std::string& problem) {
    if (problem.rfind("uf", 0) == 0) return 300000;
    if (problem.rfind("re", 0) == 0) return 1000;
    return 200000;
}

int default_pop(const problems::Problem& p) {
    if (p.name.rfind("re", 0) == 0) return 50;
    return p.m == 3 ? 300 : 200;
}

std::unique_ptr<llm::Backend> make_backend(const std::string& spec) {
    if (spec.rfind("scripted:", 0) == 0) return llm::make_scripted(spec.substr(9));
    if (spec.rfind("recorded:", 0) == 0)
        return std::make_unique<llm::RecordedBackend>(spec.substr(9));
    if (spec == "live" || spec.rfind("live:", 0) == 0) {
        llm::LiveConfig cfg;
        if (spec.size() > 5) cfg.base_url = spec.substr(5);
        if (const char* model = std::getenv("LLM_MODEL")) cfg.model = model;
        if (const char* temp = std::getenv("LLM_TEMPERATURE")) cfg.temperature = std::atof(temp);
        if (const char* interval = std::getenv("LLM_MIN_INTERVAL_MS"))
            cfg.min_interval_ms = std::atoi(interval);
        try {
            return std::make_unique<llm::LiveBackend>(cfg);
        } catch (const llm::BackendError& err) {
            throw UsageError(err.what());
        }
    }
    throw UsageError("unknown backend '" + spec +
                     "'; expected scripted:<name>, recorded:<dir>, or live[:<base-url>]");
}

algorithms::RunResult dispatch_run(const RunSettings& rs, const problems::Problem& problem) {
    if (!known_algo(rs.algo))
        throw UsageError("unknown algorithm '" + rs.algo + "'; valid: " + algo_list());

    long long evals = rs.evals >= 0 ? rs.evals : default_evals(rs.problem);
    int pop = rs.pop > 0 ? rs.pop : default_pop(problem);

    if (rs.algo == "nsga2") {
        algorithms::Nsga2Config cfg;
        cfg.population = pop;
        cfg.max_evals = evals;
        cfg.seed = rs.seed;
        cfg.eta_c = rs.eta_c;
        cfg.eta_m = rs.eta_m;
        cfg.mut_per_var = rs.mut_per_var;
        cfg.snapshot_percent = rs.snapshot_pct;
        return algorithms::run_nsga2(cfg, problem);
    }

    algorithms::MoeadConfig cfg;
    cfg.population = pop;
    // the engineering demonstration runs with a 10-vector neighborhood
    cfg.neighborhood = rs.T > 0 ? rs.T : (rs.problem.rfind("re", 0) == 0 ? 10 : 0);
    cfg.max_evals = evals;
    cfg.sigma3 = rs.sigma3;
    cfg.l = rs.l;
    cfg.seed = rs.seed;
    cfg.opcfg.sigma1 = rs.sigma1;
    cfg.opcfg.sigma2 = rs.sigma2 >= 0.0 ? rs.sigma2 : (rs.algo == "moead-de" ? 1.0 : 0.9);
    cfg.opcfg.eta_c = rs.eta_c;
    cfg.opcfg.eta_m = rs.eta_m;
    cfg.opcfg.de_f = rs.de_f;
    cfg.opcfg.de_cr = rs.de_cr;
    cfg.opcfg.mut_per_var = rs.mut_per_var;
    cfg.opcfg.s = rs.s;
    cfg.replace_limit = rs.nr >= 0 ? rs.nr : (rs.algo == "moead-de" ? 2 : 0);
    cfg.archive_capacity = rs.archive_cap;
    cfg.snapshot_percent = rs.snapshot_pct;
    cfg.llm_max_retries = rs.max_retries;
    cfg.mutate_llm_offspring = rs.mutate_llm;
    if (!rs.lo_file.empty()) cfg.lo = io::load_lo_weights(rs.lo_file);
    if (rs.theta >= 0.0) cfg.lo.theta = rs.theta;
    if (rs.dim_prob >= 0.0) cfg.lo.dim_prob = rs.dim_prob;

    if (rs.algo == "moead") {
        cfg.op = algorithms::OperatorKind::Sbx;
    } else if (rs.algo == "moead-de") {
        cfg.op = algorithms::OperatorKind::De;
    } else if (rs.algo == "moead-lo") {
        cfg.op = algorithms::OperatorKind::Lo;
        if (rs.lo_file.empty()) cfg.lo.l = rs.l;
    } else if (rs.algo == "moead-lo-random") {
        cfg.op = algorithms::OperatorKind::AblationRandom;
    } else if (rs.algo == "moead-lo-equal") {
        cfg.op = algorithms::OperatorKind::AblationEqual;
    } else if (rs.algo == "moead-lo-linear") {
        cfg.op = algorithms::OperatorKind::AblationLinear;
    } else if (rs.algo.rfind("moead-lo-l", 0) == 0) {
        cfg.op = algorithms::OperatorKind::Lo;
        int count = std::atoi(rs.algo.c_str() + 10);
        if (count < 1) throw UsageError("bad input size in '" + rs.algo + "'");
        cfg.lo.l = count;
        cfg.l = count;
    } else if (rs.algo == "moead-llm") {
        auto backend = make_backend(rs.backend);
        std::unique_ptr<llm::Backend> recorder;
        llm::Backend* active = backend.get();
        if (!rs.record_dir.empty()) {
            recorder = std::make_unique<llm::RecordingBackend>(*backend, rs.record_dir);
            active = recorder.get();
        }
        std::unique_ptr<llm::InteractionLog> log;
        if (!rs.log_path.empty()) {
            log = std::make_unique<llm::InteractionLog>(rs.log_path);
            if (!log->healthy())
                std::cerr << "warning: cannot open interaction log " << rs.log_path
                          << "; logging disabled\n";
        }
        return algorithms::run_moead_llm(cfg, problem, *active, log.get());
    }
    return algorithms::run_moead(cfg, problem);
}

// --- indicator helpers -------------------------------------------------------

std::vector<Vec> objectives_of(const std::vector<Individual>& members) {
    std::vector<Vec> out;
    out.reserve(members.size());
    for (const auto& ind : members) out.push_back(ind.f);
    return out;
}

bool use_scaled_hv(const std::string& problem) { return problem.rfind("re", 0) == 0; }

struct IndicatorValues {
    double hv = 0.0;
    double igd = 0.0;
};

IndicatorValues compute_indicators(const indicators::Suite& suite, const std::string& problem,
                                   const std::vector<Vec>& points) {
    IndicatorValues v;
    v.hv = use_scaled_hv(problem) ? suite.hv_scaled(points) : suite.hv_normalized(points);
    v.igd = suite.igd(points);
    return v;
}

// --- run command --------------------------------------------------------------

int cmd_run(const RunSettings& rs, const std::string& out_dir, bool with_x,
            const std::string& indicator_set) {
    problems::Problem problem = problems::make(rs.problem, rs.dim);
    algorithms::RunResult result = dispatch_run(rs, problem);

    std::optional<indicators::Suite> suite;
    try {
        suite.emplace(problem);
    } catch (const std::exception& err) {
        std::cerr << "warning: no reference front (" << err.what() << "); indicators skipped\n";
    }

    fs::create_directories(out_dir);
    io::write_front_csv(out_dir + "/population.csv", result.population, problem.m, with_x);
    io::write_front_csv(out_dir + "/archive.csv", result.archive, problem.m, with_x);

    io::KeyValues summary;
    summary.set("algo", rs.algo);
    summary.set("problem", rs.problem);
    summary.set("seed", std::to_string(rs.seed));
    summary.set("evals", std::to_string(result.evals));
    summary.set("pop", std::to_string(result.population.size()));
    summary.set("seconds", io::format_double(result.seconds));
    summary.set("operator_failures", std::to_string(result.operator_failures));
    if (rs.algo == "moead-llm") {
        summary.set("backend", rs.backend);
        if (!rs.log_path.empty()) summary.set("interaction_log", rs.log_path);
    }

    if (suite) {
        std::vector<io::TrajectoryRow> rows;
        rows.reserve(result.snapshots.size());
        for (const auto& snap : result.snapshots) {
            auto vals = compute_indicators(*suite, rs.problem, objectives_of(snap.population));
            rows.push_back({snap.evals, vals.hv, vals.igd});
        }
        io::write_trajectory_csv(out_dir + "/trajectory.csv", rows);

        const auto& scored = (indicator_set == "ep") ? result.archive : result.population;
        auto vals = compute_indicators(*suite, rs.problem, objectives_of(scored));
        summary.set("hv", io::format_double(vals.hv));
        summary.set("igd", io::format_double(vals.igd));
        summary.set("indicator_set", indicator_set);
        std::printf("%s %s seed=%llu  hv=%.6f  igd=%.6e  (%.2fs, %lld evals)\n", rs.algo.c_str(),
                    rs.problem.c_str(), static_cast<unsigned long long>(rs.seed), vals.hv,
                    vals.igd, result.seconds, result.evals);
    } else {
        std::printf("%s %s seed=%llu  (%.2fs, %lld evals; no reference front)\n", rs.algo.c_str(),
                    rs.problem.c_str(), static_cast<unsigned long long>(rs.seed), result.seconds,
                    result.evals);
    }
    io::spit(out_dir + "/summary.txt", summary.serialize());
    return 0;
}

// --- experiment command ---------------------------------------------------------

struct Cell {
    std::string algo;
    std::string problem;
    std::uint64_t seed = 0;
};

struct CellResult {
    bool ok = false;
    std::string error;
    double hv = 0.0, igd = 0.0, seconds = 0.0;
};

struct Plan {
    std::vector<std::string> algos;
    std::vector<std::string> problems;
    std::vector<std::uint64_t> seeds;
    RunSettings base;
    std::map<std::string, long long> evals_override;  // per problem
    std::map<std::string, int> pop_override;
    std::map<std::string, int> l_override;  // per algo
    std::string reference_algo;
    std::string indicator_set = "pop";
    unsigned workers = 0;
};

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        long long lo = std::stoll(text.substr(0, dots));
        long long hi = std::stoll(text.substr(dots + 2));
        for (long long s = lo; s <= hi; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
    } else {
        for (const auto& tok : util::split(text, ','))
            if (!util::trim(tok).empty()) seeds.push_back(std::stoull(util::trim(tok)));
    }
    std::set<std::uint64_t> unique(seeds.begin(), seeds.end());
    if (unique.size() != seeds.size()) throw UsageError("seeds must be distinct");
    return seeds;
}

std::vector<std::string> parse_list(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& tok : util::split(text, ','))
        if (!util::trim(tok).empty()) out.push_back(util::trim(tok));
    return out;
}

Plan preset_plan(const std::string& name) {
    Plan plan;
    if (name == "table2_hv" || name == "table3_igd") {
        plan.algos = {"nsga2", "moead", "moead-de", "moead-lo"};
        plan.problems = {"zdt1", "zdt2", "zdt3", "zdt4", "zdt6", "uf1", "uf2", "uf3",
                         "uf4",  "uf5",  "uf6",  "uf7",  "uf8",  "uf9"};
        plan.seeds = parse_seeds("1..30");
        plan.reference_algo = "moead-lo";
    } else if (name == "table4_ablation") {
        plan.algos = {"moead-lo-random", "moead-lo-equal", "moead-lo-linear", "moead-lo-l40",
                      "moead-lo-l30",    "moead-lo-l20",   "moead-lo"};
        plan.problems = {"uf1", "uf2", "uf3", "uf4", "uf5", "uf6", "uf7", "uf8", "uf9"};
        plan.seeds = parse_seeds("1..30");
        plan.reference_algo = "moead-lo";
    } else if (name == "table1_re_demo") {
        plan.algos = {"moead", "moead-llm"};
        plan.problems = {"re21", "re22", "re23", "re24", "re25"};
        plan.seeds = parse_seeds("1..3");
        plan.base.evals = 1000;
        plan.base.pop = 50;
        plan.base.T = 10;
        plan.reference_algo = "moead-llm";
    } else {
        throw UsageError("unknown preset '" + name +
                         "'; valid: table2_hv, table3_igd, table4_ablation, table1_re_demo");
    }
    return plan;
}

Plan load_plan(const std::string& path) {
    io::KeyValues kv = io::KeyValues::parse_file(path);
    Plan plan;
    plan.algos = parse_list(kv.get_or("algos", ""));
    plan.problems = parse_list(kv.get_or("problems", ""));
    if (kv.has("seeds")) plan.seeds = parse_seeds(*kv.get("seeds"));
    if (kv.has("evals")) plan.base.evals = kv.get_int("evals", -1);
    if (kv.has("pop")) plan.base.pop = static_cast<int>(kv.get_int("pop", 0));
    plan.base.T = static_cast<int>(kv.get_int("T", 0));
    plan.base.sigma1 = kv.get_double("sigma1", plan.base.sigma1);
    plan.base.sigma2 = kv.get_double("sigma2", plan.base.sigma2);
    plan.base.sigma3 = kv.get_double("sigma3", plan.base.sigma3);
    plan.base.l = static_cast<int>(kv.get_int("l", plan.base.l));
    plan.base.s = static_cast<int>(kv.get_int("s", plan.base.s));
    plan.base.theta = kv.get_double("theta", plan.base.theta);
    plan.base.dim_prob = kv.get_double("dim_prob", plan.base.dim_prob);
    plan.base.nr = static_cast<int>(kv.get_int("nr", plan.base.nr));
    plan.base.de_f = kv.get_double("F", plan.base.de_f);
    plan.base.de_cr = kv.get_double("CR", plan.base.de_cr);
    plan.base.eta_c = kv.get_double("eta_c", plan.base.eta_c);
    plan.base.eta_m = kv.get_double("eta_m", plan.base.eta_m);
    plan.base.mut_per_var = kv.get_double("mut_per_var", plan.base.mut_per_var);
    plan.base.backend = kv.get_or("backend", plan.base.backend);
    plan.base.lo_file = kv.get_or("lo_file", "");
    plan.reference_algo = kv.get_or("reference_algo", "");
    plan.indicator_set = kv.get_or("indicator_set", "pop");
    plan.workers = static_cast<unsigned>(kv.get_int("workers", 0));
    for (const auto& [key, value] : kv.values()) {
        if (key.rfind("evals.", 0) == 0) plan.evals_override[key.substr(6)] = std::stoll(value);
        if (key.rfind("pop.", 0) == 0) plan.pop_override[key.substr(4)] = std::stoi(value);
        if (key.rfind("l.", 0) == 0) plan.l_override[key.substr(2)] = std::stoi(value);
    }
    return plan;
}

std::string format_mean_std(double mean, double std) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4e (%.2e)", mean, std);
    return buf;
}

int cmd_experiment(Plan plan, const std::string& out_dir) {
    if (plan.algos.empty() || plan.problems.empty() || plan.seeds.empty())
        throw UsageError("experiment plan needs algos, problems and seeds");
    for (const auto& algo : plan.algos)
        if (!known_algo(algo)) throw UsageError("unknown algorithm '" + algo + "' in plan");
    for (const auto& name : plan.problems) problems::make(name);  // validates early
    if (plan.reference_algo.empty()) plan.reference_algo = plan.algos.back();

    std::vector<Cell> cells;
    for (const auto& problem : plan.problems)
        for (const auto& algo : plan.algos)
            for (auto seed : plan.seeds) cells.push_back({algo, problem, seed});

    fs::create_directories(out_dir);
    std::vector<CellResult> results(cells.size());

    // per-problem reference data is shared read-only across the pool
    std::map<std::string, problems::Problem> instances;
    std::map<std::string, std::unique_ptr<indicators::Suite>> suites;
    for (const auto& name : plan.problems) {
        instances.emplace(name, problems::make(name));
        suites.emplace(name, std::make_unique<indicators::Suite>(instances.at(name)));
    }

    std::mutex io_mutex;
    util::parallel_for(cells.size(), plan.workers, [&](std::size_t idx) {
        const Cell& cell = cells[idx];
        RunSettings rs = plan.base;
        rs.algo = cell.algo;
        rs.problem = cell.problem;
        rs.seed = cell.seed;
        if (auto it = plan.evals_override.find(cell.problem); it != plan.evals_override.end())
            rs.evals = it->second;
        if (auto it = plan.pop_override.find(cell.problem); it != plan.pop_override.end())
            rs.pop = it->second;
        if (auto it = plan.l_override.find(cell.algo); it != plan.l_override.end())
            rs.l = it->second;
        try {
            auto run = dispatch_run(rs, instances.at(cell.problem));
            const auto& scored = (plan.indicator_set == "ep") ? run.archive : run.population;
            auto vals =
                compute_indicators(*suites.at(cell.problem), cell.problem, objectives_of(scored));
            results[idx] = {true, "", vals.hv, vals.igd, run.seconds};
        } catch (const std::exception& err) {
            results[idx] = {false, err.what(), 0.0, 0.0, 0.0};
            std::lock_guard lock(io_mutex);
            std::cerr << "cell failed: " << cell.algo << " " << cell.problem << " seed "
                      << cell.seed << ": " << err.what() << "\n";
        }
    });

    {
        std::ofstream raw(out_dir + "/results.csv", std::ios::binary);
        raw << "problem,algo,seed,hv,igd,seconds,status\n";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            raw << cells[i].problem << "," << cells[i].algo << "," << cells[i].seed << ","
                << io::format_double(results[i].hv) << "," << io::format_double(results[i].igd)
                << "," << io::format_double(results[i].seconds) << ","
                << (results[i].ok ? "ok" : "failed") << "\n";
        }
    }

    for (bool hv_table : {true, false}) {
        const std::string label = hv_table ? "hv" : "igd";
        std::ostringstream text;
        std::ofstream csv(out_dir + "/table_" + label + ".csv", std::ios::binary);
        csv << "problem";
        for (const auto& algo : plan.algos)
            csv << "," << algo << "_mean," << algo << "_std," << algo << "_mark";
        csv << "\n";
        text << "criterion: " << (hv_table ? "hypervolume (higher better)" : "IGD (lower better)")
             << ", reference algorithm: " << plan.reference_algo << "\n";
        std::map<std::string, std::array<int, 3>> marks;  // algo -> {+, -, =}

        for (const auto& problem : plan.problems) {
            std::map<std::string, std::vector<double>> samples;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i].problem != problem || !results[i].ok) continue;
                samples[cells[i].algo].push_back(hv_table ? results[i].hv : results[i].igd);
            }
            csv << problem;
            text << problem << ":\n";
            const auto& ref = samples[plan.reference_algo];
            std::string best_algo;
            double best = hv_table ? -1e300 : 1e300;
            for (const auto& algo : plan.algos) {
                if (samples[algo].empty()) continue;
                double m = stats::mean(samples[algo]);
                if ((hv_table && m > best) || (!hv_table && m < best)) {
                    best = m;
                    best_algo = algo;
                }
            }
            for (const auto& algo : plan.algos) {
                const auto& xs = samples[algo];
                if (xs.empty()) {
                    csv << ",,,";
                    text << "  " << algo << ": (no data)\n";
                    continue;
                }
                double m = stats::mean(xs), sd = stats::stddev(xs);
                char mark = ' ';
                if (algo != plan.reference_algo && !ref.empty()) {
                    mark = stats::significance_mark(xs, ref, /*lower_is_better=*/!hv_table);
                    if (mark == '+') ++marks[algo][0];
                    if (mark == '-') ++marks[algo][1];
                    if (mark == '=') ++marks[algo][2];
                }
                csv << "," << io::format_double(m) << "," << io::format_double(sd) << "," << mark;
                text << "  " << algo << ": " << format_mean_std(m, sd) << " " << mark
                     << (algo == best_algo ? " *" : "") << "\n";
            }
            csv << "\n";
        }
        text << "+/-/= vs " << plan.reference_algo << ":";
        for (const auto& algo : plan.algos) {
            if (algo == plan.reference_algo) continue;
            text << "  " << algo << " " << marks[algo][0] << "/" << marks[algo][1] << "/"
                 << marks[algo][2];
        }
        text << "\n";
        io::spit(out_dir + "/table_" + label + ".txt", text.str());
        std::cout << text.str() << "\n";
    }

    std::size_t failures = 0;
    for (const auto& r : results)
        if (!r.ok) ++failures;
    if (failures > 0)
        std::cerr << failures << " of " << results.size() << " cells failed; tables have gaps\n";
    return 0;
}

// --- fit command ----------------------------------------------------------------

int cmd_fit(const std::string& log_path, const std::string& out_path,
            const std::string& report_path, bool per_call, bool every_offspring) {
    auto read = llm::InteractionLog::read(log_path);
    if (read.skipped > 0) std::cerr << "skipped " << read.skipped << " malformed log line(s)\n";
    if (read.records.empty()) {
        std::cerr << "no usable interaction records in " << log_path << "\n";
        return kExitRuntime;
    }
    fit::FitResult result;
    try {
        result = per_call ? fit::distill_fit_per_call(read.records)
                          : fit::distill_fit(read.records, every_offspring);
    } catch (const std::invalid_argument& err) {
        std::cerr << "fit failed: " << err.what() << "\n";
        return kExitRuntime;
    }
    io::save_lo_weights(out_path, fit::to_operator(result));
    std::string report = fit_report(result);
    if (!report_path.empty()) io::spit(report_path, report);
    std::cout << report;
    std::cout << "operator written to " << out_path << "\n";
    return 0;
}

// --- indicators command ------------------------------------------------------------

int cmd_indicators(const std::string& front_path, const std::string& problem_name,
                   const std::string& convention, const std::string& reference_csv,
                   int mc_samples) {
    std::vector<Vec> points = io::read_front_csv(front_path);
    if (points.empty()) throw UsageError("empty front file " + front_path);

    if (!reference_csv.empty()) {
        Vec ref;
        for (const auto& tok : util::split(reference_csv, ',')) ref.push_back(std::stod(tok));
        if (ref.size() != points.front().size())
            throw UsageError("reference point dimension mismatch");
        double volume;
        if (ref.size() == 2 || ref.size() == 3) {
            volume = indicators::hv(points, ref);
        } else {
            Rng rng(1);
            volume = indicators::hv_monte_carlo(points, ref, mc_samples, rng).value;
        }
        std::printf("hv=%.10g\n", volume);
        return 0;
    }

    problems::Problem problem = problems::make(problem_name);
    if (static_cast<int>(points.front().size()) != problem.m)
        throw UsageError("front has " + std::to_string(points.front().size()) +
                         " objectives but " + problem_name + " has " + std::to_string(problem.m));
    indicators::Suite suite(problem);
    bool scaled = convention == "re" || (convention.empty() && use_scaled_hv(problem_name));
    double volume = scaled ? suite.hv_scaled(points) : suite.hv_normalized(points);
    std::printf("hv=%.10g\nigd=%.10g\n", volume, suite.igd(points));
    return 0;
}

// --- reffront command ------------------------------------------------------------

/// Builds an approximated reference front for a problem by merging the
/// archives of long runs (two algorithms, several seeds), then thinning
/// evenly. This regenerates the data/ assets for the engineering suite.
int cmd_reffront(const std::string& problem_name, const std::string& out_path, long long evals,
                 int seeds, int points, unsigned workers) {
    problems::Problem problem = problems::make(problem_name);
    std::vector<std::vector<Individual>> archives(2 * seeds);
    util::parallel_for(archives.size(), workers, [&](std::size_t idx) {
        if (idx < static_cast<std::size_t>(seeds)) {
            algorithms::MoeadConfig cfg;
            cfg.population = problem.m == 3 ? 300 : 100;
            cfg.max_evals = evals;
            cfg.seed = idx + 1;
            cfg.op = algorithms::OperatorKind::Sbx;
            cfg.snapshot_percent = 0;
            archives[idx] = algorithms::run_moead(cfg, problem).archive;
        } else {
            algorithms::Nsga2Config cfg;
            cfg.population = 100;
            cfg.max_evals = evals;
            cfg.seed = 100 + (idx - seeds) + 1;
            cfg.snapshot_percent = 0;
            archives[idx] = algorithms::run_nsga2(cfg, problem).archive;
        }
    });
    decomp::ExternalArchive merged;
    for (const auto& archive : archives)
        for (const auto& ind : archive) merged.insert(ind);
    auto members = merged.members();
    if (members.empty()) throw std::runtime_error("no nondominated points collected");

    std::vector<Vec> front;
    if (static_cast<int>(members.size()) <= points) {
        for (const auto& m : members) front.push_back(m.f);
    } else {
        for (int i = 0; i < points; ++i) {
            std::size_t idx = static_cast<std::size_t>(i) * (members.size() - 1) / (points - 1);
            front.push_back(members[idx].f);
        }
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    for (const auto& p : front) {
        for (std::size_t j = 0; j < p.size(); ++j) out << (j ? " " : "") << io::format_double(p[j]);
        out << "\n";
    }
    std::printf("%s: %zu nondominated points collected, %zu written to %s\n", problem_name.c_str(),
                members.size(), front.size(), out_path.c_str());
    return 0;
}

// --- plotdata command ----------------------------------------------------------------

int cmd_plotdata(const std::string& kind, const std::vector<std::string>& run_dirs,
                 const std::string& out_path) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    std::vector<std::string> missing;
    if (kind == "convergence") {
        out << "algo,seed,evals,hv\n";
        for (const auto& dir : run_dirs) {
            if (!fs::exists(dir + "/trajectory.csv")) {
                missing.push_back(dir + "/trajectory.csv");
                continue;
            }
            auto summary = io::KeyValues::parse_file(dir + "/summary.txt");
            for (const auto& row : io::read_trajectory_csv(dir + "/trajectory.csv"))
                out << summary.get_or("algo", "?") << "," << summary.get_or("seed", "?") << ","
                    << row.evals << "," << io::format_double(row.hv) << "\n";
        }
    } else if (kind == "front") {
        bool header = false;
        for (const auto& dir : run_dirs) {
            if (!fs::exists(dir + "/population.csv")) {
                missing.push_back(dir + "/population.csv");
                continue;
            }
            auto summary = io::KeyValues::parse_file(dir + "/summary.txt");
            auto points = io::read_front_csv(dir + "/population.csv");
            if (!header && !points.empty()) {
                out << "algo";
                for (std::size_t j = 0; j < points.front().size(); ++j) out << ",f" << (j + 1);
                out << "\n";
                header = true;
            }
            for (const auto& p : points) {
                out << summary.get_or("algo", "?");
                for (double v : p) out << "," << io::format_double(v);
                out << "\n";
            }
        }
    } else {
        throw UsageError("unknown plot kind '" + kind + "'; valid: convergence, front");
    }
    if (!missing.empty()) {
        std::cerr << "missing inputs:\n";
        for (const auto& path : missing) std::cerr << "  " << path << "\n";
        return kExitRuntime;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposition-based multiobjective optimization harness"};
    app.require_subcommand(1);

    RunSettings rs;
    std::string out_dir = "run_out";
    bool with_x = false;
    std::string indicator_set = "pop";

    auto add_run_flags = [&](CLI::App* cmd) {
        cmd->add_option("--problem", rs.problem, "problem name (see `moea problems`)");
        cmd->add_option("--seed", rs.seed, "random seed");
        cmd->add_option("--evals", rs.evals, "evaluation budget");
        cmd->add_option("--pop", rs.pop, "population / subproblem count");
        cmd->add_option("--T", rs.T, "neighborhood size (default pop/10)");
        cmd->add_option("--dim", rs.dim, "variable count override");
        cmd->add_option("--sigma1", rs.sigma1, "primary operator probability");
        cmd->add_option("--sigma2", rs.sigma2,
                        "mutation probability (default 0.9; 1.0 for moead-de)");
        cmd->add_option("--sigma3", rs.sigma3, "neighborhood selection probability");
        cmd->add_option("--l", rs.l, "parents per linear/LLM call");
        cmd->add_option("--s", rs.s, "offspring per linear/LLM call");
        cmd->add_option("--eta-c", rs.eta_c, "SBX distribution index");
        cmd->add_option("--eta-m", rs.eta_m, "mutation distribution index");
        cmd->add_option("--F", rs.de_f, "DE scale factor");
        cmd->add_option("--CR", rs.de_cr, "DE crossover rate");
        cmd->add_option("--mut-per-var", rs.mut_per_var, "per-variable mutation prob (0 = 1/d)");
        cmd->add_option("--lo-file", rs.lo_file, "operator definition file for moead-lo");
        cmd->add_option("--theta", rs.theta, "linear operator noise scale override");
        cmd->add_option("--dim-prob", rs.dim_prob, "linear operator per-dimension probability");
        cmd->add_option("--nr", rs.nr,
                        "replacement cap per offspring (default: 2 for moead-de, unbounded else)");
        cmd->add_option("--archive-cap", rs.archive_cap,
                        "external archive capacity (0 = unbounded)");
        cmd->add_option("--snapshot-pct", rs.snapshot_pct, "trajectory cadence, % of budget");
        cmd->add_option("--backend", rs.backend,
                        "moead-llm backend: scripted:<name>, recorded:<dir>, live[:<url>]");
        cmd->add_option("--record", rs.record_dir, "record backend responses as fixtures");
        cmd->add_option("--log", rs.log_path, "interaction log path (JSONL)");
        cmd->add_option("--max-retries", rs.max_retries, "LLM parse retries per call");
        cmd->add_flag("--mutate-llm", rs.mutate_llm, "apply mutation to LLM offspring");
    };

    auto* run = app.add_subcommand("run", "execute one optimization run");
    run->add_option("--algo", rs.algo, "algorithm: " + algo_list());
    add_run_flags(run);
    run->add_option("--out", out_dir, "output directory");
    run->add_flag("--with-x", with_x, "include decision variables in CSV output");
    run->add_option("--indicator-set", indicator_set, "score 'pop' or 'ep'")
        ->check(CLI::IsMember({"pop", "ep"}));

    auto* experiment = app.add_subcommand("experiment", "run a (algos x problems x seeds) grid");
    std::string plan_path, preset_name, seeds_text, algos_text, problems_text;
    unsigned workers = 0;
    experiment->add_option("--plan", plan_path, "plan file (key = value)");
    experiment->add_option("--preset", preset_name,
                           "table2_hv | table3_igd | table4_ablation | table1_re_demo");
    experiment->add_option("--seeds", seeds_text, "override seeds, e.g. 1..10 or 1,2,3");
    experiment->add_option("--algos", algos_text, "override algorithm list");
    experiment->add_option("--problems", problems_text, "override problem list");
    experiment->add_option("--workers", workers, "worker threads (0 = hardware)");
    experiment->add_option("--out", out_dir, "output directory");
    add_run_flags(experiment);

    auto* fit_cmd = app.add_subcommand("fit", "distill an operator from an interaction log");
    std::string fit_log, fit_out = "lo_weights.txt", fit_report_path;
    bool per_call = false, every_offspring = false;
    fit_cmd->add_option("--log", fit_log, "interaction log (JSONL)")->required();
    fit_cmd->add_option("--out", fit_out, "operator definition output");
    fit_cmd->add_option("--report", fit_report_path, "fit report output");
    fit_cmd->add_flag("--per-call", per_call, "average per-call fits instead of one pooled fit");
    fit_cmd->add_flag("--every-offspring", every_offspring,
                      "use every parsed offspring as a response row");

    auto* ind = app.add_subcommand("indicators", "score a front CSV");
    std::string front_path, convention, reference_csv;
    int mc_samples = 100000;
    ind->add_option("--front", front_path, "CSV of objective vectors")->required();
    ind->add_option("--problem", rs.problem, "problem providing the reference front");
    ind->add_option("--convention", convention, "hv convention: zdt (normalized) or re (scaled)")
        ->check(CLI::IsMember({"", "zdt", "re"}));
    ind->add_option("--reference", reference_csv, "explicit hv reference point (raw objectives)");
    ind->add_option("--mc-samples", mc_samples, "Monte Carlo samples for m > 3");

    auto* plot = app.add_subcommand("plotdata", "emit tidy CSV for external plotting");
    std::string plot_kind = "convergence", plot_out = "plot.csv";
    std::vector<std::string> run_dirs;
    plot->add_option("--kind", plot_kind, "convergence | front");
    plot->add_option("--out", plot_out, "output CSV");
    plot->add_option("dirs", run_dirs, "run output directories")->required();

    auto* problems_cmd = app.add_subcommand("problems", "list registered problems");

    auto* reffront = app.add_subcommand("reffront", "regenerate an approximated reference front");
    std::string ref_problem, ref_out;
    long long ref_evals = 150000;
    int ref_seeds = 6, ref_points = 1000;
    unsigned ref_workers = 0;
    reffront->add_option("--problem", ref_problem, "problem name")->required();
    reffront->add_option("--out", ref_out, "output file")->required();
    reffront->add_option("--evals", ref_evals, "budget per contributing run");
    reffront->add_option("--seeds", ref_seeds, "seeds per algorithm");
    reffront->add_option("--points", ref_points, "points kept after thinning");
    reffront->add_option("--workers", ref_workers, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(rs, out_dir, with_x, indicator_set);
        if (experiment->parsed()) {
            Plan plan;
            if (!plan_path.empty())
                plan = load_plan(plan_path);
            else if (!preset_name.empty())
                plan = preset_plan(preset_name);
            else
                throw UsageError("experiment needs --plan or --preset");
            // flags that were actually given override the plan's values
            auto override_if = [&](const char* flag, auto apply) {
                if (experiment->count(flag) > 0) apply();
            };
            override_if("--evals", [&] { plan.base.evals = rs.evals; });
            override_if("--pop", [&] { plan.base.pop = rs.pop; });
            override_if("--T", [&] { plan.base.T = rs.T; });
            override_if("--sigma1", [&] { plan.base.sigma1 = rs.sigma1; });
            override_if("--sigma2", [&] { plan.base.sigma2 = rs.sigma2; });
            override_if("--sigma3", [&] { plan.base.sigma3 = rs.sigma3; });
            override_if("--l", [&] { plan.base.l = rs.l; });
            override_if("--s", [&] { plan.base.s = rs.s; });
            override_if("--theta", [&] { plan.base.theta = rs.theta; });
            override_if("--dim-prob", [&] { plan.base.dim_prob = rs.dim_prob; });
            override_if("--nr", [&] { plan.base.nr = rs.nr; });
            override_if("--F", [&] { plan.base.de_f = rs.de_f; });
            override_if("--CR", [&] { plan.base.de_cr = rs.de_cr; });
            override_if("--eta-c", [&] { plan.base.eta_c = rs.eta_c; });
            override_if("--eta-m", [&] { plan.base.eta_m = rs.eta_m; });
            override_if("--mut-per-var", [&] { plan.base.mut_per_var = rs.mut_per_var; });
            override_if("--backend", [&] { plan.base.backend = rs.backend; });
            override_if("--lo-file", [&] { plan.base.lo_file = rs.lo_file; });
            override_if("--max-retries", [&] { plan.base.max_retries = rs.max_retries; });
            override_if("--snapshot-pct", [&] { plan.base.snapshot_pct = rs.snapshot_pct; });
            if (!seeds_text.empty()) plan.seeds = parse_seeds(seeds_text);
            if (!algos_text.empty()) plan.algos = parse_list(algos_text);
            if (!problems_text.empty()) plan.problems = parse_list(problems_text);
            if (workers > 0) plan.workers = workers;
            return cmd_experiment(std::move(plan), out_dir);
        }
        if (fit_cmd->parsed())
            return cmd_fit(fit_log, fit_out, fit_report_path, per_call, every_offspring);
        if (ind->parsed())
            return cmd_indicators(front_path, rs.problem, convention, reference_csv, mc_samples);
        if (plot->parsed()) return cmd_plotdata(plot_kind, run_dirs, plot_out);
        if (reffront->parsed())
            return cmd_reffront(ref_problem, ref_out, ref_evals, ref_seeds, ref_points,
                                ref_workers);
        if (problems_cmd->parsed()) {
            for (const auto& name : problems::names()) {
                auto p = problems::make(name);
                std::printf("%-6s m=%d d=%d\n", name.c_str(), p.m, p.d);
            }
            return 0;
        }
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
