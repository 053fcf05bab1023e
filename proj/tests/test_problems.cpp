#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "moea/problems.hpp"
#include "moea/rng.hpp"
#include "support/oracles.hpp"

using namespace moea;
using problems::Problem;

namespace {

constexpr double kPi = std::numbers::pi;

/// A point of the published optimal set for each synthetic instance, at
/// position x1 (and x2 for the tri-objective ones).
Vec ps_point(const Problem& p, double x1, double x2 = 0.5) {
    const int n = p.d;
    Vec x(n, 0.0);
    x[0] = x1;
    if (p.name.rfind("zdt", 0) == 0) return x;  // optimal tails are zero
    if (p.name == "uf1" || p.name == "uf4" || p.name == "uf5" || p.name == "uf6" ||
        p.name == "uf7") {
        for (int j = 2; j <= n; ++j) x[j - 1] = std::sin(6.0 * kPi * x1 + j * kPi / n);
    } else if (p.name == "uf2") {
        for (int j = 2; j <= n; ++j) {
            double amp = 0.3 * x1 * x1 * std::cos(24.0 * kPi * x1 + 4.0 * j * kPi / n) + 0.6 * x1;
            x[j - 1] = (j % 2 == 1) ? amp * std::cos(6.0 * kPi * x1 + j * kPi / n)
                                    : amp * std::sin(6.0 * kPi * x1 + j * kPi / n);
        }
    } else if (p.name == "uf3") {
        for (int j = 2; j <= n; ++j)
            x[j - 1] = std::pow(x1, 0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0)));
    } else if (p.name == "uf8" || p.name == "uf9") {
        x[1] = x2;
        for (int j = 3; j <= n; ++j)
            x[j - 1] = 2.0 * x2 * std::sin(2.0 * kPi * x1 + j * kPi / n);
    }
    return x;
}

void check_mutually_nondominated(const std::vector<Vec>& pts) {
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = 0; b < pts.size(); ++b)
            if (a != b) CHECK_FALSE(dominates(pts[a], pts[b]));
}

}  // namespace

TEST_CASE("zdt1 spot values") {
    Problem p = problems::make("zdt1");
    Vec zero(30, 0.0);
    CHECK(p.evaluate(zero) == Vec{0.0, 1.0});

    Vec first_on(30, 0.0);
    first_on[0] = 1.0;
    CHECK(p.evaluate(first_on)[0] == 1.0);
    CHECK(p.evaluate(first_on)[1] == doctest::Approx(0.0).epsilon(1e-15));

    Vec ones(30, 1.0);
    Vec f = p.evaluate(ones);
    CHECK(f[0] == 1.0);
    // g = 10, f2 = 10 (1 - sqrt(1/10))
    CHECK(f[1] == doctest::Approx(10.0 * (1.0 - std::sqrt(0.1))).epsilon(1e-14));
    CHECK(f[1] == doctest::Approx(6.83772233983162).epsilon(1e-12));

    CHECK_THROWS_AS(p.evaluate(Vec(7, 0.0)), std::invalid_argument);
}

TEST_CASE("no sampled front point dominates an optimal-set evaluation") {
    for (const char* name :
         {"zdt1", "zdt2", "zdt4", "zdt6", "uf1", "uf2", "uf3", "uf4", "uf7"}) {
        Problem p = problems::make(name);
        auto front = p.sample_pf(2000);
        for (double t : {0.03, 0.2, 0.45, 0.71, 0.98}) {
            Vec f = p.evaluate(ps_point(p, t));
            for (const auto& q : front) CHECK_FALSE(dominates(q, f));
        }
    }
    // zdt3's front is disconnected; probe abscissas inside its segments
    Problem zdt3 = problems::make("zdt3");
    auto front = zdt3.sample_pf(2000);
    for (double t : {0.03, 0.2, 0.43, 0.63, 0.84}) {
        Vec f = zdt3.evaluate(ps_point(zdt3, t));
        for (const auto& q : front) CHECK_FALSE(dominates(q, f));
    }
}

TEST_CASE("zdt optimal tails reproduce the analytic curves exactly") {
    for (const char* name : {"zdt1", "zdt4"}) {
        Problem p = problems::make(name);
        for (double t : {0.0, 0.3, 0.82, 1.0}) {
            Vec f = p.evaluate(ps_point(p, t));
            CHECK(f[0] == doctest::Approx(t).epsilon(1e-15));
            CHECK(std::abs(f[1] - (1.0 - std::sqrt(t))) <= 1e-12);
        }
    }
    Problem zdt2 = problems::make("zdt2");
    for (double t : {0.1, 0.6}) {
        Vec f = zdt2.evaluate(ps_point(zdt2, t));
        CHECK(std::abs(f[1] - (1.0 - t * t)) <= 1e-12);
    }
    Problem zdt3 = problems::make("zdt3");
    for (double t : {0.05, 0.2, 0.43}) {  // inside the published segments
        Vec f = zdt3.evaluate(ps_point(zdt3, t));
        double curve = 1.0 - std::sqrt(t) - t * std::sin(10.0 * kPi * t);
        CHECK(std::abs(f[1] - curve) <= 1e-12);
    }
    Problem zdt6 = problems::make("zdt6");
    Vec f6 = zdt6.evaluate(ps_point(zdt6, 0.4));
    CHECK(std::abs(f6[1] - (1.0 - f6[0] * f6[0])) <= 1e-12);
}

TEST_CASE("uf optimal tails reproduce the published front shapes") {
    auto check_curve = [](const char* name, auto curve) {
        Problem p = problems::make(name);
        for (double t : {0.04, 0.37, 0.66, 0.93}) {
            Vec f = p.evaluate(ps_point(p, t));
            CHECK(f[0] == doctest::Approx(curve(t).first).epsilon(1e-10));
            CHECK(f[1] == doctest::Approx(curve(t).second).epsilon(1e-10));
        }
    };
    check_curve("uf1", [](double t) { return std::pair{t, 1.0 - std::sqrt(t)}; });
    check_curve("uf2", [](double t) { return std::pair{t, 1.0 - std::sqrt(t)}; });
    check_curve("uf3", [](double t) { return std::pair{t, 1.0 - std::sqrt(t)}; });
    check_curve("uf4", [](double t) { return std::pair{t, 1.0 - t * t}; });
    check_curve("uf7",
                [](double t) { return std::pair{std::pow(t, 0.2), 1.0 - std::pow(t, 0.2)}; });

    // uf5 touches its discrete front exactly at x1 = i/(2N)
    Problem uf5 = problems::make("uf5");
    for (int i : {0, 7, 20}) {
        Vec f = uf5.evaluate(ps_point(uf5, i / 20.0));
        CHECK(f[0] == doctest::Approx(i / 20.0).epsilon(1e-10));
        CHECK(f[1] == doctest::Approx(1.0 - i / 20.0).epsilon(1e-10));
    }
    // uf6 on the second published segment
    Problem uf6 = problems::make("uf6");
    Vec f6 = uf6.evaluate(ps_point(uf6, 0.3));
    CHECK(f6[0] == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(f6[1] == doctest::Approx(0.7).epsilon(1e-10));

    // uf8 optimum lies on the unit sphere octant
    Problem uf8 = problems::make("uf8");
    for (double t : {0.2, 0.7}) {
        Vec f = uf8.evaluate(ps_point(uf8, t, 0.4));
        CHECK(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] == doctest::Approx(1.0).epsilon(1e-10));
        for (double v : f) CHECK(v >= -1e-12);
    }
    // uf9 optimum: f3 = 1 - x2 and the three objectives sum to one when
    // the hump term vanishes
    Problem uf9 = problems::make("uf9");
    Vec f9 = uf9.evaluate(ps_point(uf9, 0.1, 0.5));
    CHECK(f9[2] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(f9[0] + f9[1] + f9[2] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("front samplers: counts, nondominance, endpoints") {
    Problem zdt1 = problems::make("zdt1");
    auto three = zdt1.sample_pf(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == Vec{0.0, 1.0});
    CHECK(three[1][0] == 0.5);
    CHECK(three[1][1] == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-15));
    CHECK(three[2] == Vec{1.0, 0.0});

    for (const char* name : {"zdt1", "zdt2", "zdt3", "zdt6", "uf1", "uf4", "uf5", "uf6", "uf7"}) {
        Problem p = problems::make(name);
        auto pts = p.sample_pf(300);
        CHECK(pts.size() <= 300);
        check_mutually_nondominated(pts);
    }
    for (const char* name : {"uf8", "uf9"}) {
        Problem p = problems::make(name);
        auto pts = p.sample_pf(400);
        CHECK(pts.size() >= 400);  // lattice surfaces may exceed the request
        check_mutually_nondominated(pts);
    }

    auto uf5 = problems::make("uf5").sample_pf(50);
    REQUIRE(uf5.size() == 21);
    for (int i = 0; i <= 20; ++i) {
        CHECK(uf5[i][0] == doctest::Approx(i / 20.0));
        CHECK(uf5[i][1] == doctest::Approx(1.0 - i / 20.0));
    }

    // zdt3 really is disconnected: gaps exist in f1
    auto zdt3 = problems::make("zdt3").sample_pf(500);
    double biggest_gap = 0;
    for (std::size_t i = 1; i < zdt3.size(); ++i)
        biggest_gap = std::max(biggest_gap, zdt3[i][0] - zdt3[i - 1][0]);
    CHECK(biggest_gap > 0.05);
}

TEST_CASE("registry: names, lookups, dimensions") {
    auto names = problems::names();
    CHECK(names.size() == 19);
    CHECK(problems::make("uf8").m == 3);
    CHECK(problems::make("zdt1").m == 2);
    CHECK(problems::make("zdt1").d == 30);
    CHECK(problems::make("zdt4").d == 30);          // table form
    CHECK(problems::make("zdt4", 10).d == 10);      // canonical form via override
    CHECK(problems::make("re21").d == 4);
    CHECK(problems::make("re24").d == 2);
    CHECK_THROWS_WITH_AS(problems::make("nonexistent"),
                         doctest::Contains("valid names"), std::invalid_argument);
    CHECK_THROWS_AS(problems::make("re21", 9), std::invalid_argument);

    Problem zdt4 = problems::make("zdt4");
    CHECK(zdt4.bounds.lower[0] == 0.0);
    CHECK(zdt4.bounds.lower[1] == -5.0);
    CHECK(zdt4.bounds.upper[1] == 5.0);
    Problem uf4 = problems::make("uf4");
    CHECK(uf4.bounds.lower[1] == -2.0);
    Problem uf8 = problems::make("uf8");
    CHECK(uf8.bounds.upper[1] == 1.0);
    CHECK(uf8.bounds.lower[2] == -2.0);
}

namespace second_transcription {

// The suite definitions written out a second time, phrased differently
// (explicit index sets, means instead of scaled sums), to cross-check the
// library evaluators away from the optimal set.

double mean_of(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / v.size();
}

Vec zdt(const std::string& name, const Vec& x) {
    const int n = static_cast<int>(x.size());
    double tail = 0;
    for (int j = 2; j <= n; ++j) tail += x[j - 1];
    if (name == "zdt1") {
        double g = 1 + 9 * tail / (n - 1);
        return {x[0], g - std::sqrt(x[0] * g)};  // g(1 - sqrt(f1/g)) rearranged
    }
    if (name == "zdt2") {
        double g = 1 + 9 * tail / (n - 1);
        return {x[0], g - x[0] * x[0] / g};
    }
    if (name == "zdt3") {
        double g = 1 + 9 * tail / (n - 1);
        return {x[0], g - std::sqrt(x[0] * g) - x[0] * std::sin(10 * kPi * x[0])};
    }
    if (name == "zdt4") {
        double g = 1 + 10 * (n - 1);
        for (int j = 2; j <= n; ++j)
            g += x[j - 1] * x[j - 1] - 10 * std::cos(4 * kPi * x[j - 1]);
        return {x[0], g - std::sqrt(x[0] * g)};
    }
    // zdt6
    double f1 = 1 - std::exp(-4 * x[0]) * std::pow(std::sin(6 * kPi * x[0]), 6);
    double g = 1 + 9 * std::pow(tail / (n - 1), 0.25);
    return {f1, g - f1 * f1 / g};
}

Vec uf_bi(const std::string& name, const Vec& x) {
    const int n = static_cast<int>(x.size());
    std::vector<int> odd, even;
    for (int j = 2; j <= n; ++j) (j % 2 == 1 ? odd : even).push_back(j);
    auto sine_shift = [&](int j) { return std::sin(6 * kPi * x[0] + j * kPi / n); };

    if (name == "uf1" || name == "uf7") {
        std::vector<double> sq1, sq2;
        for (int j : odd) sq1.push_back(std::pow(x[j - 1] - sine_shift(j), 2));
        for (int j : even) sq2.push_back(std::pow(x[j - 1] - sine_shift(j), 2));
        double head = (name == "uf1") ? x[0] : std::pow(x[0], 0.2);
        double tail1 = 2 * mean_of(sq1), tail2 = 2 * mean_of(sq2);
        double base2 = (name == "uf1") ? 1 - std::sqrt(x[0]) : 1 - std::pow(x[0], 0.2);
        return {head + tail1, base2 + tail2};
    }
    if (name == "uf2") {
        std::vector<double> sq1, sq2;
        for (int j : odd) {
            double a = (0.3 * x[0] * x[0] * std::cos(24 * kPi * x[0] + 4 * j * kPi / n) +
                        0.6 * x[0]) *
                       std::cos(6 * kPi * x[0] + j * kPi / n);
            sq1.push_back(std::pow(x[j - 1] - a, 2));
        }
        for (int j : even) {
            double a = (0.3 * x[0] * x[0] * std::cos(24 * kPi * x[0] + 4 * j * kPi / n) +
                        0.6 * x[0]) *
                       std::sin(6 * kPi * x[0] + j * kPi / n);
            sq2.push_back(std::pow(x[j - 1] - a, 2));
        }
        return {x[0] + 2 * mean_of(sq1), 1 - std::sqrt(x[0]) + 2 * mean_of(sq2)};
    }
    if (name == "uf3") {
        auto half = [&](const std::vector<int>& set, double head) {
            double sum = 0, prod = 1;
            for (int j : set) {
                double y = x[j - 1] -
                           std::pow(x[0], 0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0)));
                sum += y * y;
                prod *= std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
            }
            return head + 2.0 / set.size() * (4 * sum - 2 * prod + 2);
        };
        return {half(odd, x[0]), half(even, 1 - std::sqrt(x[0]))};
    }
    if (name == "uf4") {
        std::vector<double> h1, h2;
        auto h = [](double t) { return std::abs(t) / (1 + std::exp(2 * std::abs(t))); };
        for (int j : odd) h1.push_back(h(x[j - 1] - sine_shift(j)));
        for (int j : even) h2.push_back(h(x[j - 1] - sine_shift(j)));
        return {x[0] + 2 * mean_of(h1), 1 - x[0] * x[0] + 2 * mean_of(h2)};
    }
    if (name == "uf5") {
        auto h = [](double t) { return 2 * t * t - std::cos(4 * kPi * t) + 1; };
        std::vector<double> h1, h2;
        for (int j : odd) h1.push_back(h(x[j - 1] - sine_shift(j)));
        for (int j : even) h2.push_back(h(x[j - 1] - sine_shift(j)));
        double bump = (0.05 + 0.1) * std::abs(std::sin(20 * kPi * x[0]));  // N=10, eps=0.1
        return {x[0] + bump + 2 * mean_of(h1), 1 - x[0] + bump + 2 * mean_of(h2)};
    }
    // uf6, N=2, eps=0.1
    auto half = [&](const std::vector<int>& set, double head) {
        double sum = 0, prod = 1;
        for (int j : set) {
            double y = x[j - 1] - sine_shift(j);
            sum += y * y;
            prod *= std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
        }
        return head + 2.0 / set.size() * (4 * sum - 2 * prod + 2);
    };
    double bump = std::max(0.0, 2 * (0.25 + 0.1) * std::sin(4 * kPi * x[0]));
    return {half(odd, x[0] + bump), half(even, 1 - x[0] + bump)};
}

Vec uf_tri(const std::string& name, const Vec& x) {
    const int n = static_cast<int>(x.size());
    std::vector<int> sets[3];  // j = 1, 2, 0 modulo 3
    for (int j = 3; j <= n; ++j) sets[(j + 2) % 3].push_back(j);
    // sets[0] holds j with j-1 divisible by 3, sets[1] j-2 divisible, sets[2] j divisible
    double tail[3];
    for (int k = 0; k < 3; ++k) {
        std::vector<double> sq;
        for (int j : sets[k])
            sq.push_back(std::pow(x[j - 1] - 2 * x[1] * std::sin(2 * kPi * x[0] + j * kPi / n), 2));
        tail[k] = 2 * mean_of(sq);
    }
    if (name == "uf8") {
        return {std::cos(x[0] * kPi / 2) * std::cos(x[1] * kPi / 2) + tail[0],
                std::cos(x[0] * kPi / 2) * std::sin(x[1] * kPi / 2) + tail[1],
                std::sin(x[0] * kPi / 2) + tail[2]};
    }
    double hump = std::max(0.0, 1.1 * (1 - 4 * (2 * x[0] - 1) * (2 * x[0] - 1)));
    return {(0.5 * hump + x[0]) * x[1] + tail[0], (0.5 * hump - x[0] + 1) * x[1] + tail[1],
            1 - x[1] + tail[2]};
}

}  // namespace second_transcription

TEST_CASE("evaluators match an independent second transcription on random points") {
    Rng rng(31415);
    for (const char* name : {"zdt1", "zdt2", "zdt3", "zdt4", "zdt6"}) {
        Problem p = problems::make(name);
        for (int trial = 0; trial < 300; ++trial) {
            Vec x = random_point(p.bounds, rng);
            Vec got = p.evaluate(x);
            Vec want = second_transcription::zdt(name, x);
            for (int j = 0; j < 2; ++j)
                CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-11));
        }
    }
    for (const char* name : {"uf1", "uf2", "uf3", "uf4", "uf5", "uf6", "uf7"}) {
        Problem p = problems::make(name);
        for (int trial = 0; trial < 300; ++trial) {
            Vec x = random_point(p.bounds, rng);
            Vec got = p.evaluate(x);
            Vec want = second_transcription::uf_bi(name, x);
            for (int j = 0; j < 2; ++j)
                CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-11));
        }
    }
    for (const char* name : {"uf8", "uf9"}) {
        Problem p = problems::make(name);
        for (int trial = 0; trial < 300; ++trial) {
            Vec x = random_point(p.bounds, rng);
            Vec got = p.evaluate(x);
            Vec want = second_transcription::uf_tri(name, x);
            for (int j = 0; j < 3; ++j)
                CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-11));
        }
    }
}

TEST_CASE("evaluation is pure and deterministic") {
    Problem p = problems::make("uf2");
    Rng rng(5);
    Vec x = random_point(p.bounds, rng);
    CHECK(p.evaluate(x) == p.evaluate(x));
}

TEST_CASE("random evaluations never dominate sampled front points") {
    Rng rng(99);
    for (const char* name :
         {"zdt1", "zdt2", "zdt3", "zdt4", "zdt6", "uf1", "uf2", "uf3", "uf4", "uf5", "uf6", "uf7",
          "uf8", "uf9"}) {
        Problem p = problems::make(name);
        auto front = p.sample_pf(150);
        for (int trial = 0; trial < 1000; ++trial) {
            Vec f = p.evaluate(random_point(p.bounds, rng));
            CHECK(all_finite(f));
            for (const auto& q : front) {
                if (dominates(f, q)) {
                    CAPTURE(name);
                    CHECK_FALSE(dominates(f, q));
                }
            }
        }
    }
}

TEST_CASE("engineering instances evaluate finitely with nonnegative violation") {
    Rng rng(2025);
    for (const char* name : {"re21", "re22", "re23", "re24", "re25"}) {
        Problem p = problems::make(name);
        for (int trial = 0; trial < 2000; ++trial) {
            Vec f = p.evaluate(random_point(p.bounds, rng));
            REQUIRE(f.size() == 2);
            CHECK(all_finite(f));
            CHECK(f[1] >= 0.0);
        }
    }
}

TEST_CASE("engineering reference fronts load and are nondominated") {
    for (const char* name : {"re21", "re22", "re23", "re24", "re25"}) {
        Problem p = problems::make(name);
        auto front = p.sample_pf(200);
        REQUIRE_FALSE(front.empty());
        check_mutually_nondominated(front);
    }
}
