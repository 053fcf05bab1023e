#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "moea/indicators.hpp"
#include "moea/problems.hpp"
#include "support/oracles.hpp"

using namespace moea;
using namespace moea::indicators;

namespace {
std::vector<Vec> random_set(Rng& rng, int count, int m, double lo = 0.0, double hi = 1.05) {
    std::vector<Vec> pts;
    for (int i = 0; i < count; ++i) {
        Vec p(m);
        for (auto& v : p) v = rng.uniform(lo, hi);
        pts.push_back(std::move(p));
    }
    return pts;
}
}  // namespace

TEST_CASE("hv 2d: frozen hand values") {
    CHECK(hv_exact_2d({{0, 0}}, {1, 1}) == 1.0);
    // union of the three boxes by inclusion-exclusion: 0.46
    CHECK(hv_exact_2d({{0, 1}, {1, 0}, {0.5, 0.5}}, {1.1, 1.1}) ==
          doctest::Approx(0.46).epsilon(1e-12));
    CHECK(hv_exact_2d({}, {1, 1}) == 0.0);
    // points at or beyond the reference contribute nothing
    CHECK(hv_exact_2d({{1.1, 0.0}, {2, 2}}, {1.1, 1.1}) == 0.0);
    // dominated points change nothing
    CHECK(hv_exact_2d({{0.2, 0.2}, {0.5, 0.5}}, {1, 1}) ==
          doctest::Approx(hv_exact_2d({{0.2, 0.2}}, {1, 1})).epsilon(1e-12));
}

TEST_CASE("hv 2d equals the grid-counting oracle on 100 random sets") {
    Rng rng(41);
    Vec ref = {1.1, 1.1};
    for (int set = 0; set < 100; ++set) {
        auto pts = random_set(rng, 2 + static_cast<int>(rng.index(30)), 2);
        double exact = hv_exact_2d(pts, ref);
        double grid = oracles::grid_hv_2d(pts, ref);
        CHECK(std::abs(exact - grid) < 1e-3);
    }
}

TEST_CASE("hv 3d equals the column-counting oracle on sets up to 20 points") {
    Rng rng(43);
    Vec ref = {1.1, 1.1, 1.1};
    for (int set = 0; set < 25; ++set) {
        auto pts = random_set(rng, 2 + static_cast<int>(rng.index(19)), 3);
        double exact = hv_exact_3d(pts, ref);
        double grid = oracles::grid_hv_3d(pts, ref);
        CHECK(std::abs(exact - grid) < 1e-3);
    }
    // single point: analytic volume
    CHECK(hv_exact_3d({{0.1, 0.2, 0.3}}, ref) == doctest::Approx(1.0 * 0.9 * 0.8).epsilon(1e-12));
}

TEST_CASE("hv monotone under adding a nondominated point") {
    Rng rng(47);
    for (int m : {2, 3}) {
        Vec ref(m, 1.1);
        for (int trial = 0; trial < 50; ++trial) {
            auto pts = random_set(rng, 8, m);
            double before = hv(pts, ref);
            Vec extra(m);
            for (auto& v : extra) v = rng.uniform(0.0, 1.0);
            pts.push_back(extra);
            CHECK(hv(pts, ref) >= before - 1e-12);
        }
    }
}

TEST_CASE("monte carlo hv agrees with the exact sweep within three standard errors") {
    Rng rng(53);
    int bad = 0;
    for (int set = 0; set < 100; ++set) {
        auto pts = random_set(rng, 10, 2);
        Vec ref = {1.1, 1.1};
        double exact = hv_exact_2d(pts, ref);
        Rng mc_rng(1000 + set);
        auto mc = hv_monte_carlo(pts, ref, 20000, mc_rng);
        if (mc.std_error > 0 && std::abs(mc.value - exact) > 3 * mc.std_error) ++bad;
    }
    // 3-sigma misses should be rare; allow a couple out of a hundred
    CHECK(bad <= 3);
}

TEST_CASE("igd: definition cases and oracle equality") {
    CHECK(igd({{0, 0}}, {{0, 0}}) == 0.0);
    CHECK(igd({{3, 4}}, {{0, 0}}) == 5.0);
    CHECK_THROWS_AS(igd({}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(igd({{0, 0}}, {}), std::invalid_argument);

    Rng rng(59);
    for (int m : {2, 3}) {
        for (int trial = 0; trial < 30; ++trial) {
            auto approx = random_set(rng, 50, m);
            auto reference = random_set(rng, 50, m);
            CHECK(igd(approx, reference) == oracles::brute_igd(approx, reference));
        }
    }
}

TEST_CASE("igd cannot increase when the approximation gains a point") {
    Rng rng(61);
    auto reference = random_set(rng, 80, 2);
    auto approx = random_set(rng, 10, 2);
    double before = igd(approx, reference);
    approx.push_back({0.5, 0.5});
    CHECK(igd(approx, reference) <= before + 1e-15);
}

TEST_CASE("suite: zdt1 conventions") {
    problems::Problem zdt1 = problems::make("zdt1");
    Suite suite(zdt1);
    CHECK(suite.ideal()[0] == doctest::Approx(0.0));
    CHECK(suite.nadir()[1] == doctest::Approx(1.0));

    // the dense true front itself: analytic normalized volume
    // (0.1 + 2/3 + 0.11) / 1.21
    double volume = suite.hv_normalized(suite.reference_front());
    CHECK(volume == doctest::Approx(0.876666667 / 1.21).epsilon(1.5e-3));
    CHECK(std::abs(volume - 0.7245) < 0.001);

    CHECK(suite.hv_scaled(suite.reference_front()) ==
          doctest::Approx(volume * 1.21).epsilon(1e-12));
    CHECK(suite.igd(suite.reference_front()) == 0.0);
}

TEST_CASE("suite: zdt6's positive front minimum keeps the published scale") {
    problems::Problem zdt6 = problems::make("zdt6");
    Suite suite(zdt6);
    CHECK(suite.ideal()[0] > 0.28);  // the front starts right of the origin
    double volume = suite.hv_normalized(suite.reference_front());
    // analytic volume of the dense front under the zero-clamped mapping
    CHECK(volume == doctest::Approx(0.39191).epsilon(2e-3));
}

TEST_CASE("normalized hv is invariant under per-objective affine rescaling") {
    Rng rng(67);
    auto normalized_volume = [](std::vector<Vec> pts, const Vec& ideal, const Vec& nadir) {
        for (auto& p : pts)
            for (int j = 0; j < 2; ++j) p[j] = (p[j] - ideal[j]) / (nadir[j] - ideal[j]);
        return hv_exact_2d(pts, {1.1, 1.1}) / (1.1 * 1.1);
    };
    for (int trial = 0; trial < 50; ++trial) {
        auto pts = random_set(rng, 12, 2);
        Vec ideal = {0.0, 0.0}, nadir = {1.0, 1.0};
        double base = normalized_volume(pts, ideal, nadir);
        double a0 = rng.uniform(0.5, 3.0), b0 = rng.uniform(-2, 2);
        double a1 = rng.uniform(0.5, 3.0), b1 = rng.uniform(-2, 2);
        auto scaled = pts;
        for (auto& p : scaled) {
            p[0] = a0 * p[0] + b0;
            p[1] = a1 * p[1] + b1;
        }
        Vec ideal2 = {a0 * ideal[0] + b0, a1 * ideal[1] + b1};
        Vec nadir2 = {a0 * nadir[0] + b0, a1 * nadir[1] + b1};
        CHECK(normalized_volume(scaled, ideal2, nadir2) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("hv_trajectory maps checkpoints onto snapshots") {
    problems::Problem zdt1 = problems::make("zdt1");
    Suite suite(zdt1);
    std::vector<PopulationSnapshot> log;
    log.push_back({100, {{0.0, 1.0}, {1.0, 0.0}}});
    log.push_back({200, {{0.0, 1.0}, {0.5, 0.3}, {1.0, 0.0}}});

    SUBCASE("single checkpoint at the end equals the final volume") {
        auto traj = hv_trajectory(log, suite, true, {200});
        REQUIRE(traj.size() == 1);
        CHECK(traj[0].second == doctest::Approx(suite.hv_normalized(log[1].objectives)));
    }
    SUBCASE("empty checkpoint list") {
        CHECK(hv_trajectory(log, suite, true, {}).empty());
    }
    SUBCASE("checkpoints beyond the recorded budget are skipped with a report") {
        std::vector<long long> skipped;
        auto traj = hv_trajectory(log, suite, true, {50, 150, 500}, &skipped);
        REQUIRE(traj.size() == 1);
        CHECK(traj[0].first == 150);
        CHECK(traj[0].second == doctest::Approx(suite.hv_normalized(log[0].objectives)));
        CHECK(skipped == std::vector<long long>{50, 500});
    }
}
