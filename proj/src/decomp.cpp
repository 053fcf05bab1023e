#include "moea/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace moea::decomp {

namespace {

void lattice_recurse(int m, int H, int remaining, Vec& current, std::vector<Vec>& out) {
    if (static_cast<int>(current.size()) == m - 1) {
        current.push_back(static_cast<double>(remaining) / H);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        current.push_back(static_cast<double>(k) / H);
        lattice_recurse(m, H, remaining - k, current, out);
        current.pop_back();
    }
}

double sqdist(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double diff = a[j] - b[j];
        s += diff * diff;
    }
    return s;
}

}  // namespace

long long lattice_size(int m, int H) {
    // C(H+m-1, m-1)
    long long result = 1;
    for (int k = 1; k <= m - 1; ++k) result = result * (H + k) / k;
    return result;
}

std::vector<Vec> das_dennis(int m, int H) {
    if (m < 2) throw std::invalid_argument("das_dennis: need at least two objectives");
    if (H < 1) throw std::invalid_argument("das_dennis: need at least one division");
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(lattice_size(m, H)));
    Vec current;
    current.reserve(m);
    lattice_recurse(m, H, H, current, out);
    return out;
}

std::optional<int> divisions_for_population(int m, int n) {
    for (int H = 1;; ++H) {
        long long count = lattice_size(m, H);
        if (count == n) return H;
        if (count > n) return std::nullopt;
    }
}

std::vector<std::vector<int>> neighborhoods(const std::vector<Vec>& weights, int T) {
    const int n = static_cast<int>(weights.size());
    if (T < 1 || T > n) throw std::invalid_argument("neighborhoods: T must be in [1, N]");
    std::vector<std::vector<int>> result(n);
    std::vector<std::pair<double, int>> order(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) order[j] = {sqdist(weights[i], weights[j]), j};
        // ties resolved toward the lower index
        std::sort(order.begin(), order.end());
        auto& nb = result[i];
        nb.reserve(T);
        for (int k = 0; k < T; ++k) nb.push_back(order[k].second);
        std::sort(nb.begin(), nb.end());
    }
    return result;
}

double tchebycheff(const Vec& f, const Vec& lambda, const Vec& z) {
    if (f.size() != lambda.size()) detail::throw_size_mismatch("tchebycheff", f.size(), lambda.size());
    if (f.size() != z.size()) detail::throw_size_mismatch("tchebycheff", f.size(), z.size());
    double g = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < f.size(); ++j) g = std::max(g, lambda[j] * (f[j] - z[j]));
    return g;
}

void update_reference(Vec& z, const Vec& f) {
    if (z.size() != f.size()) detail::throw_size_mismatch("update_reference", z.size(), f.size());
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = std::min(z[j], f[j]);
}

int update_neighbors(std::vector<Individual>& pop, const Individual& offspring,
                     const std::vector<int>& neighborhood, const std::vector<Vec>& weights,
                     const Vec& z) {
    int replaced = 0;
    for (int j : neighborhood) {
        double g_new = tchebycheff(offspring.f, weights[j], z);
        double g_old = tchebycheff(pop[j].f, weights[j], z);
        if (g_new <= g_old) {
            pop[j] = offspring;
            ++replaced;
        }
    }
    return replaced;
}

// --- external archive ---------------------------------------------------

bool ExternalArchive::insert(const Individual& ind) {
    if (m_ == 0) m_ = static_cast<int>(ind.f.size());
    if (static_cast<int>(ind.f.size()) != m_)
        detail::throw_size_mismatch("ExternalArchive::insert", ind.f.size(), m_);
    bool inserted = (m_ == 2) ? insert2d(ind) : insertnd(ind);
    if (inserted && capacity_ > 0 && size() > capacity_) prune();
    return inserted;
}

std::size_t ExternalArchive::size() const { return m_ == 2 ? stair_.size() : flat_.size(); }

std::vector<Individual> ExternalArchive::members() const {
    if (m_ == 2) {
        std::vector<Individual> out;
        out.reserve(stair_.size());
        for (const auto& [f1, ind] : stair_) out.push_back(ind);
        return out;
    }
    return flat_;
}

bool ExternalArchive::insert2d(const Individual& ind) {
    const double f1 = ind.f[0], f2 = ind.f[1];
    auto it = stair_.lower_bound(f1);
    if (it != stair_.begin()) {
        auto prev = std::prev(it);
        // the predecessor has strictly smaller f1; it dominates when its
        // f2 does not exceed ours
        if (prev->second.f[1] <= f2) return false;
    }
    if (it != stair_.end() && it->first == f1) {
        if (it->second.f[1] <= f2) return false;  // dominated or duplicate
        it = stair_.erase(it);
    }
    while (it != stair_.end() && it->second.f[1] >= f2) it = stair_.erase(it);
    stair_.emplace(f1, ind);
    return true;
}

bool ExternalArchive::insertnd(const Individual& ind) {
    for (const auto& member : flat_) {
        if (member.f == ind.f) return false;
        if (dominates(member.f, ind.f)) return false;
    }
    std::erase_if(flat_, [&](const Individual& member) { return dominates(ind.f, member.f); });
    flat_.push_back(ind);
    return true;
}

void ExternalArchive::prune() {
    // drop the member with the smallest crowding distance; per-objective
    // extremes are protected by their infinite distance
    std::vector<Individual> all = members();
    const std::size_t n = all.size();
    std::vector<double> crowd(n, 0.0);
    std::vector<int> order(n);
    for (int j = 0; j < m_; ++j) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return all[a].f[j] < all[b].f[j]; });
        double span = all[order.back()].f[j] - all[order.front()].f[j];
        if (span <= 0.0) span = 1.0;
        crowd[order.front()] = crowd[order.back()] = std::numeric_limits<double>::infinity();
        for (std::size_t k = 1; k + 1 < n; ++k)
            crowd[order[k]] += (all[order[k + 1]].f[j] - all[order[k - 1]].f[j]) / span;
    }
    std::size_t victim = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (crowd[k] < crowd[victim]) victim = k;
    if (m_ == 2) {
        stair_.erase(all[victim].f[0]);
    } else {
        flat_.erase(flat_.begin() + static_cast<std::ptrdiff_t>(victim));
    }
}

}  // namespace moea::decomp
