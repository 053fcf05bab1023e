#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "moea/operators.hpp"
#include "support/oracles.hpp"

using namespace moea;
using namespace moea::ops;

namespace {

// textbook formulas, written separately from the library implementation,
// consuming the rng in the same order
Vec reference_sbx(const Vec& p1, const Vec& p2, double eta, Rng& rng, const Bounds& b) {
    Vec child = p1;
    for (std::size_t k = 0; k < p1.size(); ++k) {
        if (rng.uniform() >= 0.5) continue;
        if (std::abs(p1[k] - p2[k]) <= 1e-14) continue;
        double u = rng.uniform();
        double beta = u <= 0.5 ? std::exp(std::log(2.0 * u) / (eta + 1.0))
                               : std::exp(-std::log(2.0 * (1.0 - u)) / (eta + 1.0));
        double c1 = 0.5 * ((1.0 + beta) * p1[k] + (1.0 - beta) * p2[k]);
        double c2 = 0.5 * ((1.0 - beta) * p1[k] + (1.0 + beta) * p2[k]);
        child[k] = (rng.uniform() < 0.5) ? c1 : c2;
        child[k] = std::min(std::max(child[k], b.lower[k]), b.upper[k]);
    }
    return child;
}

Vec reference_de(const Vec& xi, const Vec& xj, const Vec& xk, double f, double cr, Rng& rng,
                 const Bounds& b) {
    Vec child = xi;
    std::size_t forced = rng.index(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) {
        if (k == forced || rng.uniform() < cr) child[k] = xi[k] + f * (xj[k] - xk[k]);
        child[k] = std::min(std::max(child[k], b.lower[k]), b.upper[k]);
    }
    return child;
}

Bounds unit(int d) { return Bounds{Vec(d, 0.0), Vec(d, 1.0)}; }

}  // namespace

TEST_CASE("rank polynomial values at the shipped coefficients") {
    LoWeights w;  // shipped defaults
    w.l = 10;
    auto p = rank_polynomial_values(w);
    CHECK(p[0] == doctest::Approx(0.326159).epsilon(1e-9));   // rank 1, r = 0.1
    CHECK(p[4] == doctest::Approx(0.044875).epsilon(1e-9));   // rank 5, r = 0.5
    CHECK(p[9] == doctest::Approx(0.080).epsilon(1e-9));      // rank 10, r = 1
}

TEST_CASE("lo_base_weights: simplex, positivity, and the head/tail shape") {
    CHECK(lo_base_weights(1) == std::vector<double>{1.0});
    for (int l = 1; l <= 100; ++l) {
        auto w = lo_base_weights(l);
        REQUIRE(static_cast<int>(w.size()) == l);
        double sum = std::accumulate(w.begin(), w.end(), 0.0);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        for (double v : w) CHECK(v > 0.0);
    }
    auto w10 = lo_base_weights(10);
    CHECK(w10[0] > w10[9]);  // best parent outweighs the worst
    CHECK(w10[9] > w10[4]);  // the tail still outweighs the middle
}

TEST_CASE("lo_offspring fixed point and gating") {
    Bounds b = unit(4);
    Vec shared = {0.2, 0.4, 0.6, 0.8};
    std::vector<Vec> storage(10, shared);
    ParentRefs parents;
    for (auto& s : storage) parents.push_back(&s);

    LoWeights w;
    w.l = 10;
    w.theta = 0.0;

    SUBCASE("all parents equal the incumbent: exact fixed point") {
        w.dim_prob = 1.0;
        Rng rng(5);
        Vec child = lo_offspring(parents, shared, w, rng, b);
        for (int k = 0; k < 4; ++k) CHECK(child[k] == doctest::Approx(shared[k]).epsilon(1e-12));
    }
    SUBCASE("dim_prob = 0 copies the incumbent exactly") {
        w.dim_prob = 0.0;
        w.theta = 0.5;
        Rng rng(5);
        Vec incumbent = {0.9, 0.1, 0.5, 0.3};
        CHECK(lo_offspring(parents, incumbent, w, rng, b) == incumbent);
    }
}

TEST_CASE("lo_offspring l=2 equals the independently computed weighted sum") {
    // parents (0,0) best and (1,1) worst; child dims all equal w2
    Bounds b = unit(2);
    Vec p1 = {0.0, 0.0}, p2 = {1.0, 1.0};
    ParentRefs parents = {&p1, &p2};
    LoWeights w;
    w.l = 2;
    w.theta = 0.0;
    w.dim_prob = 1.0;
    // softmax over the cubic at r = 1/2 and r = 1, computed here directly
    auto poly = [&](double r) { return ((w.a * r + w.b) * r + w.c) * r + w.d; };
    double e1 = std::exp(poly(0.5)), e2 = std::exp(poly(1.0));
    double w2 = e2 / (e1 + e2);
    Rng rng(1);
    Vec child = lo_offspring(parents, {0.5, 0.5}, w, rng, b);
    CHECK(child[0] == doctest::Approx(w2).epsilon(1e-12));
    CHECK(child[1] == doctest::Approx(w2).epsilon(1e-12));
}

TEST_CASE("lo_offspring noise is shared across dimensions") {
    Bounds wide{Vec(3, -100.0), Vec(3, 100.0)};
    Vec p1 = {1.0, 1.0, 1.0}, p2 = {2.0, 2.0, 2.0};
    ParentRefs parents = {&p1, &p2};
    LoWeights w;
    w.l = 2;
    w.theta = 0.7;
    w.dim_prob = 1.0;
    Rng rng(9);
    Vec child = lo_offspring(parents, {0.0, 0.0, 0.0}, w, rng, wide);
    // identical parent columns + shared noise draws -> identical child dims
    CHECK(child[0] == child[1]);
    CHECK(child[1] == child[2]);
}

TEST_CASE("ablation weights") {
    Rng rng(3);
    auto equal = ablation_weights(AblationKind::Equal, 10, rng);
    for (double v : equal) CHECK(v == doctest::Approx(0.1).epsilon(1e-12));

    auto linear = ablation_weights(AblationKind::Linear, 10, rng);
    for (int i = 0; i < 10; ++i)
        CHECK(linear[i] == doctest::Approx(0.19 - 0.02 * i).epsilon(1e-12));

    for (int trial = 0; trial < 100; ++trial) {
        auto random = ablation_weights(AblationKind::Random, 4, rng);
        double sum = std::accumulate(random.begin(), random.end(), 0.0);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        for (double v : random) CHECK(v >= 0.0);
    }
    // fresh per call
    auto a = ablation_weights(AblationKind::Random, 4, rng);
    auto b = ablation_weights(AblationKind::Random, 4, rng);
    CHECK(a != b);
}

TEST_CASE("sbx: identical parents, reproducibility, oracle agreement") {
    Bounds b = unit(3);
    Vec p = {0.3, 0.5, 0.7};
    Rng rng(4);
    CHECK(sbx_crossover(p, p, 20.0, rng, b) == p);

    Rng r1(8), r2(8);
    Vec q = {0.9, 0.1, 0.4};
    CHECK(sbx_crossover(p, q, 20.0, r1, b) == sbx_crossover(p, q, 20.0, r2, b));

    Rng impl(99), oracle(99), gen(1234);
    for (int trial = 0; trial < 100; ++trial) {
        Vec a(3), c(3);
        for (int k = 0; k < 3; ++k) {
            a[k] = gen.uniform();
            c[k] = gen.uniform();
        }
        Vec got = sbx_crossover(a, c, 15.0, impl, b);
        Vec want = reference_sbx(a, c, 15.0, oracle, b);
        for (int k = 0; k < 3; ++k) CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-12));
    }
}

TEST_CASE("polynomial mutation: zero probability, bounds, reproducibility") {
    Bounds b{{-1, -1}, {2, 2}};
    Vec x = {0.5, 1.5};
    Rng rng(6);
    CHECK(polynomial_mutation(x, 0.0, 20.0, rng, b) == x);

    for (int trial = 0; trial < 1000; ++trial) {
        Vec y = polynomial_mutation(x, 1.0, 20.0, rng, b);
        for (int k = 0; k < 2; ++k) {
            CHECK(y[k] >= b.lower[k]);
            CHECK(y[k] <= b.upper[k]);
        }
    }
    Rng r1(12), r2(12);
    CHECK(polynomial_mutation(x, 0.5, 20.0, r1, b) == polynomial_mutation(x, 0.5, 20.0, r2, b));
    CHECK_THROWS_AS(polynomial_mutation(x, 1.5, 20.0, rng, b), std::invalid_argument);
}

TEST_CASE("de_rand_1: degenerate cases and direct arithmetic") {
    Bounds wide{Vec(2, -10.0), Vec(2, 10.0)};
    Vec xi = {0.5, 0.5}, xj = {1.0, 2.0};
    Rng rng(2);
    CHECK(de_rand_1(xi, xj, xj, 0.7, 1.0, rng, wide) == xi);   // zero difference vector
    CHECK(de_rand_1(xi, xj, {0.0, 0.0}, 0.0, 1.0, rng, wide) == xi);  // F = 0

    Vec a = {0, 0}, bj = {1, 0}, ck = {0, 1};
    Vec child = de_rand_1(a, bj, ck, 0.5, 1.0, rng, wide);
    CHECK(child == Vec{0.5, -0.5});

    Rng impl(77), oracle(77), gen(555);
    for (int trial = 0; trial < 100; ++trial) {
        Vec p1(2), p2(2), p3(2);
        for (int k = 0; k < 2; ++k) {
            p1[k] = gen.uniform(-5, 5);
            p2[k] = gen.uniform(-5, 5);
            p3[k] = gen.uniform(-5, 5);
        }
        Vec got = de_rand_1(p1, p2, p3, 0.5, 0.6, impl, wide);
        Vec want = reference_de(p1, p2, p3, 0.5, 0.6, oracle, wide);
        for (int k = 0; k < 2; ++k) CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-12));
    }
}

TEST_CASE("every operator respects bounds under fuzzing") {
    Bounds b{{-0.5, 0.0, 1.0}, {0.5, 0.25, 1.5}};
    Rng rng(31337);
    LoWeights w;
    w.l = 3;
    auto random_in = [&](Rng& r) {
        Vec x(3);
        for (int k = 0; k < 3; ++k) x[k] = r.uniform(b.lower[k] - 1.0, b.upper[k] + 1.0);
        return clamp_to_bounds(x, b);
    };
    auto check_in = [&](const Vec& x) {
        for (int k = 0; k < 3; ++k) {
            CHECK(x[k] >= b.lower[k]);
            CHECK(x[k] <= b.upper[k]);
        }
    };
    for (int trial = 0; trial < 25000; ++trial) {
        Vec p1 = random_in(rng), p2 = random_in(rng), p3 = random_in(rng);
        ParentRefs parents = {&p1, &p2, &p3};
        check_in(sbx_crossover(p1, p2, 10.0, rng, b));
        check_in(polynomial_mutation(p1, 0.8, 12.0, rng, b));
        check_in(de_rand_1(p1, p2, p3, 0.9, 0.9, rng, b));
        check_in(lo_offspring(parents, p1, w, rng, b));
    }
}
