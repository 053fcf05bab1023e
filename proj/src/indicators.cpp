#include "moea/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moea::indicators {

namespace {

/// Keeps points strictly inside the reference box (anything at or beyond
/// the reference contributes no volume).
std::vector<Vec> clip_to_reference(std::vector<Vec> points, const Vec& ref) {
    std::erase_if(points, [&](const Vec& p) {
        if (p.size() != ref.size())
            detail::throw_size_mismatch("hypervolume", p.size(), ref.size());
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p[j] >= ref[j]) return true;
        return false;
    });
    return points;
}

/// 2-D staircase area against (ref1, ref2); points need not be mutually
/// nondominated.
double staircase_area(std::vector<std::pair<double, double>>& pts, double ref1, double ref2) {
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double prev_f1 = 0.0, prev_f2 = std::numeric_limits<double>::infinity();
    bool open = false;
    for (const auto& [f1, f2] : pts) {
        if (f2 >= prev_f2) continue;  // dominated within the sweep
        if (open) area += (f1 - prev_f1) * (ref2 - prev_f2);
        prev_f1 = f1;
        prev_f2 = f2;
        open = true;
    }
    if (open) area += (ref1 - prev_f1) * (ref2 - prev_f2);
    return area;
}

}  // namespace

double hv_exact_2d(std::vector<Vec> points, const Vec& ref) {
    if (ref.size() != 2) throw std::invalid_argument("hv_exact_2d: reference must have 2 components");
    points = clip_to_reference(std::move(points), ref);
    std::vector<std::pair<double, double>> flat;
    flat.reserve(points.size());
    for (const auto& p : points) flat.emplace_back(p[0], p[1]);
    return staircase_area(flat, ref[0], ref[1]);
}

double hv_exact_3d(std::vector<Vec> points, const Vec& ref) {
    if (ref.size() != 3) throw std::invalid_argument("hv_exact_3d: reference must have 3 components");
    points = clip_to_reference(std::move(points), ref);
    if (points.empty()) return 0.0;
    // sweep slabs along f3: between consecutive f3 values the dominated
    // cross-section is the staircase of all points already passed
    std::sort(points.begin(), points.end(),
              [](const Vec& a, const Vec& b) { return a[2] < b[2]; });
    double volume = 0.0;
    std::vector<std::pair<double, double>> active;
    for (std::size_t i = 0; i < points.size(); ++i) {
        active.emplace_back(points[i][0], points[i][1]);
        double top = (i + 1 < points.size()) ? points[i + 1][2] : ref[2];
        double thickness = top - points[i][2];
        if (thickness <= 0.0) continue;
        std::vector<std::pair<double, double>> slab = active;
        volume += staircase_area(slab, ref[0], ref[1]) * thickness;
    }
    return volume;
}

McEstimate hv_monte_carlo(const std::vector<Vec>& points, const Vec& ref, int samples, Rng& rng) {
    if (samples < 1) throw std::invalid_argument("hv_monte_carlo: need at least one sample");
    std::vector<Vec> inside = clip_to_reference(points, ref);
    if (inside.empty()) return {0.0, 0.0};
    const std::size_t m = ref.size();
    Vec lo(m, std::numeric_limits<double>::infinity());
    for (const auto& p : inside)
        for (std::size_t j = 0; j < m; ++j) lo[j] = std::min(lo[j], p[j]);
    double box = 1.0;
    for (std::size_t j = 0; j < m; ++j) box *= ref[j] - lo[j];
    Vec sample(m);
    long long hits = 0;
    for (int i = 0; i < samples; ++i) {
        for (std::size_t j = 0; j < m; ++j) sample[j] = rng.uniform(lo[j], ref[j]);
        for (const auto& p : inside) {
            bool dominated = true;
            for (std::size_t j = 0; j < m; ++j)
                if (p[j] > sample[j]) {
                    dominated = false;
                    break;
                }
            if (dominated) {
                ++hits;
                break;
            }
        }
    }
    double frac = static_cast<double>(hits) / samples;
    double se = std::sqrt(std::max(frac * (1.0 - frac), 0.0) / samples);
    return {frac * box, se * box};
}

double hv(const std::vector<Vec>& points, const Vec& ref) {
    if (points.empty()) return 0.0;
    if (ref.size() == 2) return hv_exact_2d(points, ref);
    if (ref.size() == 3) return hv_exact_3d(points, ref);
    Rng rng(0x9d1c);
    return hv_monte_carlo(points, ref, 100000, rng).value;
}

double igd(const std::vector<Vec>& approx, const std::vector<Vec>& reference) {
    if (approx.empty()) throw std::invalid_argument("igd: empty approximation set");
    if (reference.empty()) throw std::invalid_argument("igd: empty reference set");
    const std::size_t m = reference.front().size();
    for (const auto& p : approx)
        if (p.size() != m) detail::throw_size_mismatch("igd", p.size(), m);

    if (m == 2) {
        // nearest-neighbor on the f1-sorted set, expanding outward from
        // the insertion point until the f1 gap alone exceeds the best
        std::vector<Vec> sorted = approx;
        std::sort(sorted.begin(), sorted.end());
        double total = 0.0;
        for (const auto& r : reference) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), r,
                                       [](const Vec& a, const Vec& b) { return a[0] < b[0]; });
            std::size_t pivot = static_cast<std::size_t>(it - sorted.begin());
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t k = pivot; k < sorted.size(); ++k) {
                double dx = sorted[k][0] - r[0];
                if (dx * dx >= best) break;
                double dy = sorted[k][1] - r[1];
                best = std::min(best, dx * dx + dy * dy);
            }
            for (std::size_t k = pivot; k-- > 0;) {
                double dx = sorted[k][0] - r[0];
                if (dx * dx >= best) break;
                double dy = sorted[k][1] - r[1];
                best = std::min(best, dx * dx + dy * dy);
            }
            total += std::sqrt(best);
        }
        return total / reference.size();
    }

    double total = 0.0;
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : approx) {
            double dist = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                double diff = p[j] - r[j];
                dist += diff * diff;
                if (dist >= best) break;
            }
            best = std::min(best, dist);
        }
        total += std::sqrt(best);
    }
    return total / reference.size();
}

Suite::Suite(const problems::Problem& p, int reference_points)
    : front_(p.sample_pf(reference_points)), m_(p.m) {
    if (front_.empty()) throw std::runtime_error("empty reference front for " + p.name);
    ideal_.assign(m_, std::numeric_limits<double>::infinity());
    nadir_.assign(m_, -std::numeric_limits<double>::infinity());
    for (const auto& f : front_) {
        for (int j = 0; j < m_; ++j) {
            ideal_[j] = std::min(ideal_[j], f[j]);
            nadir_[j] = std::max(nadir_[j], f[j]);
        }
    }
}

double Suite::hv_mapped(const std::vector<Vec>& points, const Vec& lower) const {
    std::vector<Vec> mapped;
    mapped.reserve(points.size());
    Vec span(m_);
    for (int j = 0; j < m_; ++j) {
        span[j] = nadir_[j] - lower[j];
        if (span[j] <= 0.0) span[j] = 1.0;
    }
    for (const auto& p : points) {
        Vec q(m_);
        for (int j = 0; j < m_; ++j) q[j] = (p[j] - lower[j]) / span[j];
        mapped.push_back(std::move(q));
    }
    Vec ref(m_, 1.1);
    return hv(mapped, ref);
}

double Suite::hv_normalized(const std::vector<Vec>& points) const {
    // platform convention: the mapping's lower corner never exceeds the
    // origin, so fronts with positive minima (zdt6) keep their published
    // scale
    Vec lower(m_);
    for (int j = 0; j < m_; ++j) lower[j] = std::min(ideal_[j], 0.0);
    return hv_mapped(points, lower) / std::pow(1.1, m_);
}

double Suite::hv_scaled(const std::vector<Vec>& points) const {
    return hv_mapped(points, ideal_);
}

double Suite::igd(const std::vector<Vec>& points) const {
    return indicators::igd(points, front_);
}

std::vector<std::pair<long long, double>> hv_trajectory(
    const std::vector<PopulationSnapshot>& run_log, const Suite& suite, bool normalized,
    const std::vector<long long>& checkpoints, std::vector<long long>* skipped) {
    std::vector<std::pair<long long, double>> out;
    for (long long checkpoint : checkpoints) {
        const PopulationSnapshot* chosen = nullptr;
        for (const auto& snap : run_log) {
            if (snap.evals <= checkpoint) chosen = &snap;
            else break;
        }
        // a checkpoint past the recorded budget has no meaningful state
        if (chosen == nullptr || (!run_log.empty() && checkpoint > run_log.back().evals)) {
            if (skipped != nullptr) skipped->push_back(checkpoint);
            continue;
        }
        double volume = normalized ? suite.hv_normalized(chosen->objectives)
                                   : suite.hv_scaled(chosen->objectives);
        out.emplace_back(checkpoint, volume);
    }
    return out;
}

}  // namespace moea::indicators
