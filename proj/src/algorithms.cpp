#include "moea/algorithms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace moea::algorithms {

namespace {

using Clock = std::chrono::steady_clock;

/// count distinct draws from `scope`, topped up from {0..n-1} \ scope when
/// the scope is too small. Order of the result is the draw order.
std::vector<int> draw_distinct(const std::vector<int>& scope, int count, int n, Rng& rng) {
    std::vector<int> picks;
    picks.reserve(count);
    std::vector<int> scratch = scope;
    int take = std::min<int>(count, static_cast<int>(scratch.size()));
    for (int k = 0; k < take; ++k) {
        std::size_t j = k + rng.index(scratch.size() - k);
        std::swap(scratch[k], scratch[j]);
        picks.push_back(scratch[k]);
    }
    if (take < count) {
        std::vector<char> used(n, 0);
        for (int idx : picks) used[idx] = 1;
        std::vector<int> rest;
        rest.reserve(n - picks.size());
        for (int idx = 0; idx < n; ++idx)
            if (!used[idx]) rest.push_back(idx);
        int more = std::min<int>(count - take, static_cast<int>(rest.size()));
        for (int k = 0; k < more; ++k) {
            std::size_t j = k + rng.index(rest.size() - k);
            std::swap(rest[k], rest[j]);
            picks.push_back(rest[k]);
        }
    }
    return picks;
}

struct MoeadLoop {
    const MoeadConfig& cfg;
    const problems::Problem& problem;
    llm::Backend* backend;
    llm::InteractionLog* log;

    int n = 0;
    int t = 0;
    std::vector<Vec> weights;
    std::vector<std::vector<int>> nbhd;
    std::vector<Individual> pop;
    Vec z;
    decomp::ExternalArchive archive;
    Rng rng;
    RunResult result;
    std::vector<int> all_indices;
    long long snapshot_step = 0;
    long long next_snapshot = 0;

    MoeadLoop(const MoeadConfig& cfg_, const problems::Problem& problem_, llm::Backend* backend_,
              llm::InteractionLog* log_)
        : cfg(cfg_), problem(problem_), backend(backend_), log(log_),
          archive(cfg_.archive_capacity), rng(cfg_.seed) {}

    Individual evaluate(Vec x) {
        Vec f = problem.evaluate(x);
        if (!all_finite(f))
            throw std::runtime_error("run aborted: non-finite objective from " + problem.name +
                                     " at evaluation " + std::to_string(result.evals + 1));
        ++result.evals;
        return Individual{std::move(x), std::move(f),
                          static_cast<std::uint64_t>(result.evals)};
    }

    void maybe_snapshot() {
        if (snapshot_step <= 0) return;
        while (result.evals >= next_snapshot) {
            result.snapshots.push_back({result.evals, pop});
            next_snapshot += snapshot_step;
        }
    }

    void absorb(const Individual& offspring, int i, const std::vector<int>& mating_scope) {
        decomp::update_reference(z, offspring.f);
        if (cfg.replace_limit > 0) {
            // capped variant: at most replace_limit members of the mating
            // scope, visited in random order
            std::vector<int> order = mating_scope;
            for (std::size_t k = 0; k + 1 < order.size(); ++k)
                std::swap(order[k], order[k + rng.index(order.size() - k)]);
            int replaced = 0;
            for (int j : order) {
                if (replaced >= cfg.replace_limit) break;
                double g_new = decomp::tchebycheff(offspring.f, weights[j], z);
                double g_old = decomp::tchebycheff(pop[j].f, weights[j], z);
                if (g_new <= g_old) {
                    pop[j] = offspring;
                    ++replaced;
                }
            }
        } else {
            decomp::update_neighbors(pop, offspring, nbhd[i], weights, z);
        }
        archive.insert(offspring);
        maybe_snapshot();
    }

    const std::vector<int>& scope(int i) {
        return rng.chance(cfg.sigma3) ? nbhd[i] : all_indices;
    }

    Vec mutate(Vec x) {
        if (!rng.chance(cfg.opcfg.sigma2)) return x;
        double per_var = cfg.opcfg.mut_per_var > 0.0 ? cfg.opcfg.mut_per_var : 1.0 / problem.d;
        return ops::polynomial_mutation(x, per_var, cfg.opcfg.eta_m, rng, problem.bounds);
    }

    void run(const GenerationObserver& observer);
    void step_classic(int i);
    void step_linear(int i, std::span<const double> base, ops::AblationKind* ablation);
    void step_llm(int i, std::span<const double> fallback_base);
    Vec linear_child(const ops::ParentRefs& parents, const Vec& incumbent,
                     std::span<const double> base, ops::AblationKind* ablation, double theta,
                     double dim_prob);

    /// Mating pool sorted best-first on subproblem i, remembering which
    /// scope the draw used so capped replacement can revisit it.
    std::vector<int> pool_for(int i, int count, const std::vector<int>** used_scope) {
        const auto& source = scope(i);
        *used_scope = &source;
        auto picks = draw_distinct(source, count, n, rng);
        std::vector<std::pair<double, int>> ranked;
        ranked.reserve(picks.size());
        for (int idx : picks)
            ranked.emplace_back(decomp::tchebycheff(pop[idx].f, weights[i], z), idx);
        std::sort(ranked.begin(), ranked.end());
        std::vector<int> pool;
        pool.reserve(ranked.size());
        for (const auto& [g, idx] : ranked) pool.push_back(idx);
        return pool;
    }
};

void MoeadLoop::run(const GenerationObserver& observer) {
    auto started = Clock::now();
    n = cfg.population;
    if (n < 2) throw std::invalid_argument("run_moead: population must be at least 2");
    auto H = decomp::divisions_for_population(problem.m, n);
    if (!H)
        throw std::invalid_argument("run_moead: population " + std::to_string(n) +
                                    " does not match any simplex-lattice size for m = " +
                                    std::to_string(problem.m));
    weights = decomp::das_dennis(problem.m, *H);
    t = cfg.neighborhood > 0 ? cfg.neighborhood : std::max(1, n / 10);
    t = std::min(t, n);
    nbhd = decomp::neighborhoods(weights, t);
    all_indices.resize(n);
    std::iota(all_indices.begin(), all_indices.end(), 0);

    if (cfg.snapshot_percent > 0) {
        snapshot_step = std::max<long long>(1, cfg.max_evals * cfg.snapshot_percent / 100);
        next_snapshot = snapshot_step;
    }

    pop.reserve(n);
    z.assign(problem.m, std::numeric_limits<double>::infinity());
    for (int i = 0; i < n; ++i) {
        pop.push_back(evaluate(random_point(problem.bounds, rng)));
        decomp::update_reference(z, pop.back().f);
    }
    for (const auto& ind : pop) archive.insert(ind);
    result.snapshots.push_back({result.evals, pop});

    const int parents = (cfg.op == OperatorKind::Lo) ? cfg.lo.l : cfg.l;
    std::vector<double> base;
    ops::AblationKind ablation{};
    ops::AblationKind* ablation_ptr = nullptr;
    switch (cfg.op) {
        case OperatorKind::Lo: {
            ops::LoWeights w = cfg.lo;
            base = ops::lo_base_weights(w);
            break;
        }
        case OperatorKind::Llm: {
            ops::LoWeights w = cfg.lo;
            w.l = parents;
            base = ops::lo_base_weights(w);  // retry-exhaustion fallback
            break;
        }
        case OperatorKind::AblationRandom:
            ablation = ops::AblationKind::Random;
            ablation_ptr = &ablation;
            break;
        case OperatorKind::AblationEqual:
            ablation = ops::AblationKind::Equal;
            ablation_ptr = &ablation;
            base = ops::ablation_weights(ablation, parents, rng);
            break;
        case OperatorKind::AblationLinear:
            ablation = ops::AblationKind::Linear;
            ablation_ptr = &ablation;
            base = ops::ablation_weights(ablation, parents, rng);
            break;
        default:
            break;
    }

    int generation = 0;
    while (result.evals < cfg.max_evals) {
        for (int i = 0; i < n && result.evals < cfg.max_evals; ++i) {
            switch (cfg.op) {
                case OperatorKind::Sbx:
                case OperatorKind::De:
                    step_classic(i);
                    break;
                case OperatorKind::Llm:
                    step_llm(i, base);
                    break;
                default:
                    step_linear(i, base, ablation_ptr);
                    break;
            }
        }
        ++generation;
        if (observer) observer(generation, pop, z);
    }

    if (result.snapshots.empty() || result.snapshots.back().evals != result.evals)
        result.snapshots.push_back({result.evals, pop});
    result.population = pop;
    result.archive = archive.members();
    result.seconds = std::chrono::duration<double>(Clock::now() - started).count();
}

void MoeadLoop::step_classic(int i) {
    const auto& source = scope(i);
    auto mates = draw_distinct(source, 2, n, rng);
    Vec child;
    if (cfg.op == OperatorKind::Sbx) {
        child = rng.chance(cfg.opcfg.sigma1)
                    ? ops::sbx_crossover(pop[mates[0]].x, pop[mates[1]].x, cfg.opcfg.eta_c, rng,
                                         problem.bounds)
                    : pop[mates[0]].x;
    } else {
        child = rng.chance(cfg.opcfg.sigma1)
                    ? ops::de_rand_1(pop[i].x, pop[mates[0]].x, pop[mates[1]].x, cfg.opcfg.de_f,
                                     cfg.opcfg.de_cr, rng, problem.bounds)
                    : pop[i].x;
    }
    Individual offspring = evaluate(mutate(std::move(child)));
    absorb(offspring, i, source);
}

Vec MoeadLoop::linear_child(const ops::ParentRefs& parents, const Vec& incumbent,
                            std::span<const double> base, ops::AblationKind* ablation,
                            double theta, double dim_prob) {
    if (ablation != nullptr && *ablation == ops::AblationKind::Random) {
        std::vector<double> w =
            ops::ablation_weights(ops::AblationKind::Random, static_cast<int>(parents.size()), rng);
        return ops::weighted_recombination(parents, incumbent, w, 0.0, dim_prob, rng,
                                           problem.bounds);
    }
    double noise = (ablation != nullptr) ? 0.0 : theta;
    return ops::weighted_recombination(parents, incumbent, base, noise, dim_prob, rng,
                                       problem.bounds);
}

void MoeadLoop::step_linear(int i, std::span<const double> base, ops::AblationKind* ablation) {
    const int count = (cfg.op == OperatorKind::Lo) ? cfg.lo.l : cfg.l;
    const std::vector<int>* source = nullptr;
    auto pool = pool_for(i, count, &source);
    ops::ParentRefs parents;
    parents.reserve(pool.size());
    for (int idx : pool) parents.push_back(&pop[idx].x);

    // a call that started within budget evaluates all its offspring
    for (int k = 0; k < cfg.opcfg.s; ++k) {
        Vec child = rng.chance(cfg.opcfg.sigma1)
                        ? linear_child(parents, pop[i].x, base, ablation, cfg.lo.theta,
                                       cfg.lo.dim_prob)
                        : pop[i].x;
        Individual offspring = evaluate(mutate(std::move(child)));
        absorb(offspring, i, *source);
    }
}

void MoeadLoop::step_llm(int i, std::span<const double> fallback_base) {
    const std::vector<int>* source = nullptr;
    auto pool = pool_for(i, cfg.l, &source);

    llm::PromptSpec spec;
    spec.d = problem.d;
    spec.s = cfg.opcfg.s;
    spec.parents_worst_first.reserve(pool.size());
    for (auto it = pool.rbegin(); it != pool.rend(); ++it)
        spec.parents_worst_first.emplace_back(pop[*it].x,
                                              decomp::tchebycheff(pop[*it].f, weights[i], z));

    auto outcome = llm::generate_with_retry(*backend, spec, cfg.llm_max_retries, i);
    if (log != nullptr) log->append(outcome.record);

    if (outcome.ok()) {
        for (auto& point : outcome.points) {
            Vec x = clamp_to_bounds(std::move(point), problem.bounds);
            if (cfg.mutate_llm_offspring) x = mutate(std::move(x));
            Individual offspring = evaluate(std::move(x));
            absorb(offspring, i, *source);
        }
        return;
    }

    // retries exhausted: fall back to the linear operator for this call
    ++result.operator_failures;
    ops::ParentRefs parents;
    parents.reserve(pool.size());
    for (int idx : pool) parents.push_back(&pop[idx].x);
    for (int k = 0; k < cfg.opcfg.s; ++k) {
        Vec child = ops::weighted_recombination(parents, pop[i].x, fallback_base, cfg.lo.theta,
                                                cfg.lo.dim_prob, rng, problem.bounds);
        Individual offspring = evaluate(mutate(std::move(child)));
        absorb(offspring, i, *source);
    }
}

}  // namespace

std::vector<int> select_mating_pool(int i, const std::vector<Individual>& pop,
                                    const std::vector<int>& neighborhood,
                                    const std::vector<Vec>& weights, const Vec& z, int l,
                                    double sigma3, Rng& rng) {
    const int n = static_cast<int>(pop.size());
    if (l > n) throw std::invalid_argument("select_mating_pool: l exceeds the population");
    std::vector<int> all;
    const std::vector<int>* source;
    if (rng.chance(sigma3)) {
        source = &neighborhood;
    } else {
        all.resize(n);
        std::iota(all.begin(), all.end(), 0);
        source = &all;
    }
    std::vector<int> picks = draw_distinct(*source, l, n, rng);
    std::vector<std::pair<double, int>> ranked;
    ranked.reserve(picks.size());
    for (int idx : picks)
        ranked.emplace_back(decomp::tchebycheff(pop[idx].f, weights[i], z), idx);
    std::sort(ranked.begin(), ranked.end());
    std::vector<int> pool;
    pool.reserve(ranked.size());
    for (const auto& [g, idx] : ranked) pool.push_back(idx);
    return pool;
}

RunResult run_moead(const MoeadConfig& cfg, const problems::Problem& problem,
                    const GenerationObserver& observer) {
    if (cfg.op == OperatorKind::Llm)
        throw std::invalid_argument("run_moead: the LLM operator needs run_moead_llm");
    MoeadLoop loop(cfg, problem, nullptr, nullptr);
    loop.run(observer);
    return std::move(loop.result);
}

RunResult run_moead_llm(const MoeadConfig& cfg, const problems::Problem& problem,
                        llm::Backend& backend, llm::InteractionLog* log,
                        const GenerationObserver& observer) {
    MoeadConfig llm_cfg = cfg;
    llm_cfg.op = OperatorKind::Llm;
    MoeadLoop loop(llm_cfg, problem, &backend, log);
    loop.run(observer);
    return std::move(loop.result);
}

// --- NSGA-II ----------------------------------------------------------------

std::vector<std::vector<int>> fast_nondominated_sort(const std::vector<Vec>& objs) {
    const int n = static_cast<int>(objs.size());
    std::vector<int> domination_count(n, 0);
    std::vector<std::vector<int>> dominated(n);
    std::vector<std::vector<int>> fronts(1);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (dominates(objs[p], objs[q])) {
                dominated[p].push_back(q);
                ++domination_count[q];
            } else if (dominates(objs[q], objs[p])) {
                dominated[q].push_back(p);
                ++domination_count[p];
            }
        }
    }
    for (int p = 0; p < n; ++p)
        if (domination_count[p] == 0) fronts[0].push_back(p);
    for (std::size_t level = 0; level < fronts.size(); ++level) {
        std::vector<int> next;
        for (int p : fronts[level]) {
            for (int q : dominated[p]) {
                if (--domination_count[q] == 0) next.push_back(q);
            }
        }
        if (!next.empty()) fronts.push_back(std::move(next));
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<Vec>& objs, const std::vector<int>& front) {
    const std::size_t size = front.size();
    std::vector<double> crowd(size, 0.0);
    if (size == 0) return crowd;
    const std::size_t m = objs[front[0]].size();
    std::vector<int> order(size);
    for (std::size_t j = 0; j < m; ++j) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return objs[front[a]][j] < objs[front[b]][j]; });
        crowd[order.front()] = crowd[order.back()] = std::numeric_limits<double>::infinity();
        double span = objs[front[order.back()]][j] - objs[front[order.front()]][j];
        if (span <= 0.0) continue;
        for (std::size_t k = 1; k + 1 < size; ++k)
            crowd[order[k]] +=
                (objs[front[order[k + 1]]][j] - objs[front[order[k - 1]]][j]) / span;
    }
    return crowd;
}

namespace {

struct RankedPop {
    std::vector<int> rank;
    std::vector<double> crowd;
};

RankedPop rank_population(const std::vector<Individual>& pop) {
    std::vector<Vec> objs(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) objs[i] = pop[i].f;
    auto fronts = fast_nondominated_sort(objs);
    RankedPop ranked;
    ranked.rank.assign(pop.size(), 0);
    ranked.crowd.assign(pop.size(), 0.0);
    for (std::size_t level = 0; level < fronts.size(); ++level) {
        auto crowd = crowding_distance(objs, fronts[level]);
        for (std::size_t k = 0; k < fronts[level].size(); ++k) {
            ranked.rank[fronts[level][k]] = static_cast<int>(level);
            ranked.crowd[fronts[level][k]] = crowd[k];
        }
    }
    return ranked;
}

int tournament(const RankedPop& ranked, Rng& rng) {
    int a = static_cast<int>(rng.index(ranked.rank.size()));
    int b = static_cast<int>(rng.index(ranked.rank.size()));
    if (ranked.rank[a] != ranked.rank[b]) return ranked.rank[a] < ranked.rank[b] ? a : b;
    if (ranked.crowd[a] != ranked.crowd[b]) return ranked.crowd[a] > ranked.crowd[b] ? a : b;
    return a;
}

/// Paired SBX sharing the spread draws, the usual NSGA-II form.
std::pair<Vec, Vec> sbx_pair(const Vec& p1, const Vec& p2, double eta_c, Rng& rng,
                             const Bounds& bounds) {
    Vec c1 = p1, c2 = p2;
    for (std::size_t k = 0; k < p1.size(); ++k) {
        if (!rng.chance(0.5)) continue;
        double a = p1[k], b = p2[k];
        if (std::abs(a - b) <= 1e-14) continue;
        double u = rng.uniform();
        double beta = (u <= 0.5) ? std::pow(2.0 * u, 1.0 / (eta_c + 1.0))
                                 : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta_c + 1.0));
        double v1 = 0.5 * ((1.0 + beta) * a + (1.0 - beta) * b);
        double v2 = 0.5 * ((1.0 - beta) * a + (1.0 + beta) * b);
        if (rng.chance(0.5)) std::swap(v1, v2);
        c1[k] = v1;
        c2[k] = v2;
    }
    return {clamp_to_bounds(std::move(c1), bounds), clamp_to_bounds(std::move(c2), bounds)};
}

}  // namespace

RunResult run_nsga2(const Nsga2Config& cfg, const problems::Problem& problem,
                    const GenerationObserver& observer) {
    auto started = Clock::now();
    const int n = cfg.population;
    if (n < 2) throw std::invalid_argument("run_nsga2: population must be at least 2");
    Rng rng(cfg.seed);
    RunResult result;

    long long snapshot_step = 0, next_snapshot = 0;
    if (cfg.snapshot_percent > 0) {
        snapshot_step = std::max<long long>(1, cfg.max_evals * cfg.snapshot_percent / 100);
        next_snapshot = snapshot_step;
    }

    double per_var = cfg.mut_per_var > 0.0 ? cfg.mut_per_var : 1.0 / problem.d;
    auto evaluate = [&](Vec x) {
        Vec f = problem.evaluate(x);
        if (!all_finite(f))
            throw std::runtime_error("run aborted: non-finite objective from " + problem.name);
        ++result.evals;
        return Individual{std::move(x), std::move(f), static_cast<std::uint64_t>(result.evals)};
    };

    std::vector<Individual> pop;
    pop.reserve(n);
    for (int i = 0; i < n; ++i) pop.push_back(evaluate(random_point(problem.bounds, rng)));
    result.snapshots.push_back({result.evals, pop});

    int generation = 0;
    while (result.evals < cfg.max_evals) {
        RankedPop ranked = rank_population(pop);
        std::vector<Individual> children;
        children.reserve(n);
        while (static_cast<int>(children.size()) < n && result.evals < cfg.max_evals) {
            int pa = tournament(ranked, rng);
            int pb = tournament(ranked, rng);
            Vec c1 = pop[pa].x, c2 = pop[pb].x;
            if (rng.chance(cfg.crossover_prob)) {
                auto pair = sbx_pair(pop[pa].x, pop[pb].x, cfg.eta_c, rng, problem.bounds);
                c1 = std::move(pair.first);
                c2 = std::move(pair.second);
            }
            c1 = ops::polynomial_mutation(c1, per_var, cfg.eta_m, rng, problem.bounds);
            c2 = ops::polynomial_mutation(c2, per_var, cfg.eta_m, rng, problem.bounds);
            children.push_back(evaluate(std::move(c1)));
            if (static_cast<int>(children.size()) < n && result.evals < cfg.max_evals)
                children.push_back(evaluate(std::move(c2)));
        }
        // environmental selection over parents + children
        std::vector<Individual> merged = std::move(pop);
        for (auto& child : children) merged.push_back(std::move(child));
        std::vector<Vec> objs(merged.size());
        for (std::size_t i = 0; i < merged.size(); ++i) objs[i] = merged[i].f;
        auto fronts = fast_nondominated_sort(objs);
        pop.clear();
        pop.reserve(n);
        for (const auto& front : fronts) {
            if (static_cast<int>(pop.size() + front.size()) <= n) {
                for (int idx : front) pop.push_back(merged[idx]);
            } else {
                auto crowd = crowding_distance(objs, front);
                std::vector<int> order(front.size());
                std::iota(order.begin(), order.end(), 0);
                std::stable_sort(order.begin(), order.end(),
                                 [&](int a, int b) { return crowd[a] > crowd[b]; });
                for (int k : order) {
                    if (static_cast<int>(pop.size()) >= n) break;
                    pop.push_back(merged[front[k]]);
                }
            }
            if (static_cast<int>(pop.size()) >= n) break;
        }
        while (snapshot_step > 0 && result.evals >= next_snapshot) {
            result.snapshots.push_back({result.evals, pop});
            next_snapshot += snapshot_step;
        }
        ++generation;
        if (observer) {
            Vec z(problem.m, std::numeric_limits<double>::infinity());
            for (const auto& ind : pop) decomp::update_reference(z, ind.f);
            observer(generation, pop, z);
        }
    }

    if (result.snapshots.empty() || result.snapshots.back().evals != result.evals)
        result.snapshots.push_back({result.evals, pop});
    std::vector<Vec> objs(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) objs[i] = pop[i].f;
    auto fronts = fast_nondominated_sort(objs);
    for (int idx : fronts.front()) result.archive.push_back(pop[idx]);
    result.population = std::move(pop);
    result.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return result;
}

}  // namespace moea::algorithms
