#pragma once

#include <functional>
#include <string>
#include <vector>

#include "moea/core.hpp"
#include "moea/decomp.hpp"
#include "moea/llm.hpp"
#include "moea/operators.hpp"
#include "moea/problems.hpp"
#include "moea/rng.hpp"

namespace moea::algorithms {

enum class OperatorKind {
    Sbx,             // genetic-algorithm variant
    De,              // differential-evolution variant
    Lo,              // distilled linear operator
    Llm,             // black-box language-model operator
    AblationRandom,  // linear operator with fresh normalized random weights
    AblationEqual,   // linear operator with equal weights
    AblationLinear,  // linear operator with arithmetic-sequence weights
};

struct MoeadConfig {
    int population = 200;
    int neighborhood = 0;  // 0 -> population / 10
    long long max_evals = 200000;
    double sigma3 = 0.9;  // neighborhood mating-scope probability
    int l = 10;           // parents per linear/LLM operator call
    std::uint64_t seed = 1;
    OperatorKind op = OperatorKind::Sbx;
    ops::OperatorConfig opcfg;
    ops::LoWeights lo;
    /// Maximum incumbents one offspring may replace. 0 keeps the classic
    /// rule (every improvable neighbor of subproblem i); a positive limit
    /// switches to the capped variant that replaces at most this many
    /// members of the mating scope, visited in random order.
    int replace_limit = 0;
    std::size_t archive_capacity = 0;  // 0 = unbounded
    int snapshot_percent = 5;          // trajectory cadence as % of budget
    int llm_max_retries = 3;
    bool mutate_llm_offspring = false;
};

struct Snapshot {
    long long evals = 0;
    std::vector<Individual> population;
};

struct RunResult {
    std::vector<Individual> population;
    std::vector<Individual> archive;
    std::vector<Snapshot> snapshots;
    long long evals = 0;
    double seconds = 0.0;
    int operator_failures = 0;  // LLM calls that exhausted retries and fell back
};

/// Mating pool for subproblem i: l distinct indices drawn from the
/// neighborhood with probability sigma3 (topped up from the whole
/// population when l exceeds it), otherwise from the whole population;
/// returned sorted by ascending aggregation value on subproblem i, ties
/// toward the lower index.
std::vector<int> select_mating_pool(int i, const std::vector<Individual>& pop,
                                    const std::vector<int>& neighborhood,
                                    const std::vector<Vec>& weights, const Vec& z, int l,
                                    double sigma3, Rng& rng);

using GenerationObserver =
    std::function<void(int generation, const std::vector<Individual>& pop, const Vec& z)>;

/// The decomposition loop: initialize lattice weights, neighborhoods,
/// random population, reference point and archive; then per generation
/// visit each subproblem, select a pool, produce offspring with the
/// configured operator, and update reference point, neighbors and archive
/// with every evaluated offspring. Stops once the evaluation budget is
/// reached (checked before each operator call). The population size must
/// match a simplex-lattice size for the problem's objective count.
RunResult run_moead(const MoeadConfig& cfg, const problems::Problem& problem,
                    const GenerationObserver& observer = {});

/// run_moead with the language-model operator: the pool is rendered
/// worst-first into the prompt, parsed offspring are clamped, and every
/// interaction is logged. A call that exhausts its retries falls back to
/// the linear operator so the run always consumes its budget.
RunResult run_moead_llm(const MoeadConfig& cfg, const problems::Problem& problem,
                        llm::Backend& backend, llm::InteractionLog* log = nullptr,
                        const GenerationObserver& observer = {});

struct Nsga2Config {
    int population = 200;
    long long max_evals = 200000;
    std::uint64_t seed = 1;
    double crossover_prob = 0.9;
    double eta_c = 20.0;
    double eta_m = 20.0;
    double mut_per_var = 0.0;  // 0 -> 1/d
    int snapshot_percent = 5;
};

/// Canonical generational NSGA-II (fast nondominated sort, crowding
/// distance, binary tournament, SBX + polynomial mutation). The returned
/// archive is the nondominated subset of the final population.
RunResult run_nsga2(const Nsga2Config& cfg, const problems::Problem& problem,
                    const GenerationObserver& observer = {});

/// Fronts of indices, best front first.
std::vector<std::vector<int>> fast_nondominated_sort(const std::vector<Vec>& objs);

/// Crowding distances of front members (aligned with `front`); boundary
/// members get +infinity.
std::vector<double> crowding_distance(const std::vector<Vec>& objs, const std::vector<int>& front);

}  // namespace moea::algorithms
