#include "moea/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "moea/decomp.hpp"

namespace moea::problems {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(const Vec& x, int d, const char* name) {
    if (static_cast<int>(x.size()) != d)
        throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(d) +
                                    " variables, got " + std::to_string(x.size()));
}

Bounds unit_box(int d) { return Bounds{Vec(d, 0.0), Vec(d, 1.0)}; }

std::vector<Vec> linspace_curve(int n, double lo, double hi,
                                const std::function<double(double)>& f2) {
    std::vector<Vec> out;
    out.reserve(std::max(n, 1));
    if (n <= 1) {
        out.push_back({lo, f2(lo)});
        return out;
    }
    for (int i = 0; i < n; ++i) {
        double t = lo + (hi - lo) * i / (n - 1);
        out.push_back({t, f2(t)});
    }
    return out;
}

/// Keeps the nondominated staircase of a bi-objective point set.
std::vector<Vec> staircase_filter(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<Vec> keep;
    double best_f2 = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
        if (p[1] < best_f2) {
            keep.push_back(p);
            best_f2 = p[1];
        }
    }
    return keep;
}

std::vector<Vec> subsample_even(const std::vector<Vec>& pts, int n) {
    if (n <= 0 || pts.empty() || static_cast<std::size_t>(n) >= pts.size()) return pts;
    std::vector<Vec> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(pts.front());
        return out;
    }
    for (int i = 0; i < n; ++i) {
        std::size_t idx = static_cast<std::size_t>(
            std::llround(static_cast<double>(i) * (pts.size() - 1) / (n - 1)));
        out.push_back(pts[idx]);
    }
    return out;
}

// --- ZDT -----------------------------------------------------------------

double zdt_linear_g(const Vec& x) {
    double sum = 0.0;
    for (std::size_t k = 1; k < x.size(); ++k) sum += x[k];
    return 1.0 + 9.0 * sum / (x.size() - 1);
}

Vec zdt1_eval(const Vec& x) {
    double f1 = x[0];
    double g = zdt_linear_g(x);
    return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

Vec zdt2_eval(const Vec& x) {
    double f1 = x[0];
    double g = zdt_linear_g(x);
    return {f1, g * (1.0 - (f1 / g) * (f1 / g))};
}

Vec zdt3_eval(const Vec& x) {
    double f1 = x[0];
    double g = zdt_linear_g(x);
    return {f1, g * (1.0 - std::sqrt(f1 / g) - f1 / g * std::sin(10.0 * kPi * f1))};
}

Vec zdt4_eval(const Vec& x) {
    double f1 = x[0];
    double g = 1.0 + 10.0 * (x.size() - 1);
    for (std::size_t k = 1; k < x.size(); ++k)
        g += x[k] * x[k] - 10.0 * std::cos(4.0 * kPi * x[k]);
    return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

Vec zdt6_eval(const Vec& x) {
    double s = std::sin(6.0 * kPi * x[0]);
    double f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(s, 6.0);
    double sum = 0.0;
    for (std::size_t k = 1; k < x.size(); ++k) sum += x[k];
    double g = 1.0 + 9.0 * std::pow(sum / (x.size() - 1), 0.25);
    return {f1, g * (1.0 - (f1 / g) * (f1 / g))};
}

/// Left edge of the ZDT6 front: the minimum of its f1 over [0, 1],
/// located numerically once.
double zdt6_f1_min() {
    static const double value = [] {
        auto f1 = [](double t) {
            double s = std::sin(6.0 * kPi * t);
            return 1.0 - std::exp(-4.0 * t) * std::pow(s, 6.0);
        };
        double best_t = 0.0, best = f1(0.0);
        const int grid = 20000;
        for (int i = 1; i <= grid; ++i) {
            double t = static_cast<double>(i) / grid;
            double v = f1(t);
            if (v < best) {
                best = v;
                best_t = t;
            }
        }
        double lo = std::max(0.0, best_t - 1.0 / grid), hi = std::min(1.0, best_t + 1.0 / grid);
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
        double fa = f1(a), fb = f1(b);
        for (int iter = 0; iter < 200; ++iter) {
            if (fa < fb) {
                hi = b;
                b = a;
                fb = fa;
                a = hi - phi * (hi - lo);
                fa = f1(a);
            } else {
                lo = a;
                a = b;
                fa = fb;
                b = lo + phi * (hi - lo);
                fb = f1(b);
            }
        }
        return f1(0.5 * (lo + hi));
    }();
    return value;
}

// --- UF (CEC 2009 unconstrained suite) ------------------------------------

// Index sets use 1-based positions as published: J1 = odd j in [2, n],
// J2 = even j in [2, n] for the bi-objective instances.

Vec uf1_eval(const Vec& x) {
    const int n = static_cast<int>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        if (j % 2 == 1) {
            s1 += y * y;
            ++c1;
        } else {
            s2 += y * y;
            ++c2;
        }
    }
    return {x[0] + 2.0 * s1 / c1, 1.0 - std::sqrt(x[0]) + 2.0 * s2 / c2};
}

Vec uf2_eval(const Vec& x) {
    const int n = static_cast<int>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        double amp = 0.3 * x[0] * x[0] * std::cos(24.0 * kPi * x[0] + 4.0 * j * kPi / n) +
                     0.6 * x[0];
        double y;
        if (j % 2 == 1) {
            y = x[j - 1] - amp * std::cos(6.0 * kPi * x[0] + j * kPi / n);
            s1 += y * y;
            ++c1;
        } else {
            y = x[j - 1] - amp * std::sin(6.0 * kPi * x[0] + j * kPi / n);
            s2 += y * y;
            ++c2;
        }
    }
    return {x[0] + 2.0 * s1 / c1, 1.0 - std::sqrt(x[0]) + 2.0 * s2 / c2};
}

Vec uf3_eval(const Vec& x) {
    const int n = static_cast<int>(x.size());
    double s1 = 0.0, s2 = 0.0, p1 = 1.0, p2 = 1.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        double y = x[j - 1] - std::pow(x[0], 0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0)));
        double c = std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
        if (j % 2 == 1) {
            s1 += y * y;
            p1 *= c;
            ++c1;
        } else {
            s2 += y * y;
            p2 *= c;
            ++c2;
        }
    }
    return {x[0] + 2.0 * (4.0 * s1 - 2.0 * p1 + 2.0) / c1,
            1.0 - std::sqrt(x[0]) + 2.0 * (4.0 * s2 - 2.0 * p2 + 2.0) / c2};
}

Vec uf4_eval(const Vec& x) {
    const int n = static_cast<int>(x.size());
    auto h = [](double t) { return std::abs(t) / (1.0 + std::exp(2.0 * std::abs(t))); };
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        if (j % 2 == 1) {
            s1 += h(y);
            ++c1;
        } else {
            s2 += h(y);
            ++c2;
        }
    }
    return {x[0] + 2.0 * s1 / c1, 1.0 - x[0] * x[0] + 2.0 * s2 / c2};
}

Vec uf5_eval(const Vec& x) {
    const int n = static_cast<int>(x.size());
    const double N = 10.0, eps = 0.1;
    auto h = [](double t) { return 2.0 * t * t - std::cos(4.0 * kPi * t) + 1.0; };
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        if (j % 2 == 1) {
            s1 += h(y);
            ++c1;
        } else {
            s2 += h(y);
            ++c2;
        }
    }
    double bump = (0.5 / N + eps) * std::abs(std::sin(2.0 * N * kPi * x[0]));
    return {x[0] + bump + 2.0 * s1 / c1, 1.0 - x[0] + bump + 2.0 * s2 / c2};
}

Vec uf6_eval(const Vec& x) {
    const int n = static_cast<int>(x.size());
    const double N = 2.0, eps = 0.1;
    double s1 = 0.0, s2 = 0.0, p1 = 1.0, p2 = 1.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        double c = std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
        if (j % 2 == 1) {
            s1 += y * y;
            p1 *= c;
            ++c1;
        } else {
            s2 += y * y;
            p2 *= c;
            ++c2;
        }
    }
    double bump = std::max(0.0, 2.0 * (0.5 / N + eps) * std::sin(2.0 * N * kPi * x[0]));
    return {x[0] + bump + 2.0 * (4.0 * s1 - 2.0 * p1 + 2.0) / c1,
            1.0 - x[0] + bump + 2.0 * (4.0 * s2 - 2.0 * p2 + 2.0) / c2};
}

Vec uf7_eval(const Vec& x) {
    const int n = static_cast<int>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        if (j % 2 == 1) {
            s1 += y * y;
            ++c1;
        } else {
            s2 += y * y;
            ++c2;
        }
    }
    double root = std::pow(x[0], 0.2);
    return {root + 2.0 * s1 / c1, 1.0 - root + 2.0 * s2 / c2};
}

// Tri-objective index sets: J1 = {j : 3 <= j <= n, j-1 divisible by 3},
// J2 likewise with j-2, J3 with j.

Vec uf8_eval(const Vec& x) {
    const int n = static_cast<int>(x.size());
    double s[3] = {0.0, 0.0, 0.0};
    int c[3] = {0, 0, 0};
    for (int j = 3; j <= n; ++j) {
        double y = x[j - 1] - 2.0 * x[1] * std::sin(2.0 * kPi * x[0] + j * kPi / n);
        int set = (j % 3 == 1) ? 0 : (j % 3 == 2) ? 1 : 2;
        s[set] += y * y;
        ++c[set];
    }
    return {std::cos(0.5 * kPi * x[0]) * std::cos(0.5 * kPi * x[1]) + 2.0 * s[0] / c[0],
            std::cos(0.5 * kPi * x[0]) * std::sin(0.5 * kPi * x[1]) + 2.0 * s[1] / c[1],
            std::sin(0.5 * kPi * x[0]) + 2.0 * s[2] / c[2]};
}

Vec uf9_eval(const Vec& x) {
    const int n = static_cast<int>(x.size());
    const double eps = 0.1;
    double s[3] = {0.0, 0.0, 0.0};
    int c[3] = {0, 0, 0};
    for (int j = 3; j <= n; ++j) {
        double y = x[j - 1] - 2.0 * x[1] * std::sin(2.0 * kPi * x[0] + j * kPi / n);
        int set = (j % 3 == 1) ? 0 : (j % 3 == 2) ? 1 : 2;
        s[set] += y * y;
        ++c[set];
    }
    double hump = std::max(0.0, (1.0 + eps) * (1.0 - 4.0 * (2.0 * x[0] - 1.0) * (2.0 * x[0] - 1.0)));
    return {0.5 * (hump + 2.0 * x[0]) * x[1] + 2.0 * s[0] / c[0],
            0.5 * (hump - 2.0 * x[0] + 2.0) * x[1] + 2.0 * s[1] / c[1],
            1.0 - x[1] + 2.0 * s[2] / c[2]};
}

Bounds uf_bounds(const std::string& name, int d) {
    Bounds b{Vec(d, -1.0), Vec(d, 1.0)};
    b.lower[0] = 0.0;
    b.upper[0] = 1.0;
    if (name == "uf3") return unit_box(d);
    if (name == "uf4") {
        std::fill(b.lower.begin() + 1, b.lower.end(), -2.0);
        std::fill(b.upper.begin() + 1, b.upper.end(), 2.0);
    }
    if (name == "uf8" || name == "uf9") {
        b.lower[1] = 0.0;
        b.upper[1] = 1.0;
        std::fill(b.lower.begin() + 2, b.lower.end(), -2.0);
        std::fill(b.upper.begin() + 2, b.upper.end(), 2.0);
    }
    return b;
}

std::vector<Vec> sphere_front(int n) {
    int H = 1;
    while (decomp::lattice_size(3, H) < n) ++H;
    std::vector<Vec> pts = decomp::das_dennis(3, H);
    for (auto& p : pts) {
        double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        for (double& v : p) v /= norm;
    }
    return pts;
}

std::vector<Vec> uf9_front(int n) {
    std::vector<Vec> keep;
    int H = 1;
    while (static_cast<int>(keep.size()) < n) {
        while (decomp::lattice_size(3, H) < 2 * n) ++H;
        keep.clear();
        for (auto& p : decomp::das_dennis(3, H)) {
            double limit = 1.0 - p[2];
            if (p[0] <= 0.25 * limit + 1e-12 || p[0] >= 0.75 * limit - 1e-12) keep.push_back(p);
        }
        ++H;
    }
    return keep;
}

// --- RE (engineering suite, unconstrained reformulation) ------------------

double violation(double g) { return g < 0.0 ? -g : 0.0; }

double nearest_value(const double* table, std::size_t count, double x) {
    double best = table[0];
    double dist = std::abs(x - best);
    for (std::size_t i = 1; i < count; ++i) {
        double d = std::abs(x - table[i]);
        if (d < dist) {
            dist = d;
            best = table[i];
        }
    }
    return best;
}

Vec re21_eval(const Vec& x) {
    const double force = 10.0, elastic = 2e5, length = 200.0;
    double f1 = length * (2.0 * x[0] + std::sqrt(2.0) * x[1] + std::sqrt(x[2]) + x[3]);
    double f2 = force * length / elastic *
                (2.0 / x[0] + 2.0 * std::sqrt(2.0) / x[1] - 2.0 * std::sqrt(2.0) / x[2] +
                 2.0 / x[3]);
    return {f1, f2};
}

constexpr double kRe22Areas[] = {
    0.20, 0.31, 0.40, 0.44, 0.60, 0.62, 0.79, 0.80, 0.88, 0.93, 1.0,  1.20, 1.24,
    1.32, 1.40, 1.55, 1.58, 1.60, 1.76, 1.80, 1.86, 2.0,  2.17, 2.20, 2.37, 2.40,
    2.48, 2.60, 2.64, 2.79, 2.80, 3.0,  3.08, 3.10, 3.16, 3.41, 3.52, 3.60, 3.72,
    3.95, 3.96, 4.0,  4.03, 4.20, 4.34, 4.40, 4.65, 4.74, 4.80, 4.84, 5.0,  5.28,
    5.40, 5.53, 5.72, 6.0,  6.16, 6.32, 6.60, 7.11, 7.20, 7.80, 7.90, 8.0,  8.40,
    8.69, 9.0,  9.48, 10.27, 11.0, 11.06, 11.85, 12.0, 13.0, 14.0, 15.0};

Vec re22_eval(const Vec& x) {
    double x1 = nearest_value(kRe22Areas, std::size(kRe22Areas), x[0]);
    double x2 = std::max(x[1], 1e-12);
    double x3 = x[2];
    double f1 = 29.4 * x1 + 0.6 * x2 * x3;
    double g1 = x1 * x3 - 7.735 * x1 * x1 / x2 - 180.0;
    double g2 = 4.0 - x3 / x2;
    return {f1, violation(g1) + violation(g2)};
}

Vec re23_eval(const Vec& x) {
    double x1 = 0.0625 * std::round(x[0]);
    double x2 = 0.0625 * std::round(x[1]);
    double x3 = x[2], x4 = x[3];
    double f1 = 0.6224 * x1 * x3 * x4 + 1.7781 * x2 * x3 * x3 + 3.1661 * x1 * x1 * x4 +
                19.84 * x1 * x1 * x3;
    double g1 = x1 - 0.0193 * x3;
    double g2 = x2 - 0.00954 * x3;
    double g3 = kPi * x3 * x3 * x4 + 4.0 / 3.0 * kPi * x3 * x3 * x3 - 1296000.0;
    return {f1, violation(g1) + violation(g2) + violation(g3)};
}

Vec re24_eval(const Vec& x) {
    const double elastic = 700000.0, sigma_b_max = 700.0, tau_max = 450.0, delta_max = 1.5;
    double x1 = x[0], x2 = x[1];
    double f1 = x1 + 120.0 * x2;
    double sigma_k = elastic * x1 * x1 / 100.0;
    double sigma_b = 4500.0 / (x1 * x2);
    double tau = 1800.0 / x2;
    double delta = 56.2e4 / (elastic * x1 * x2 * x2);
    double g1 = 1.0 - sigma_b / sigma_b_max;
    double g2 = 1.0 - tau / tau_max;
    double g3 = 1.0 - delta / delta_max;
    double g4 = 1.0 - sigma_b / sigma_k;
    return {f1, violation(g1) + violation(g2) + violation(g3) + violation(g4)};
}

constexpr double kRe25Diameters[] = {
    0.009, 0.0095, 0.0104, 0.0118, 0.0128, 0.0132, 0.014, 0.015,  0.0162, 0.0173, 0.018,
    0.020, 0.023,  0.025,  0.028,  0.032,  0.035,  0.041, 0.047,  0.054,  0.063,  0.072,
    0.080, 0.092,  0.105,  0.120,  0.135,  0.148,  0.162, 0.177,  0.192,  0.207,  0.225,
    0.244, 0.263,  0.283,  0.307,  0.331,  0.362,  0.394, 0.4375, 0.500};

Vec re25_eval(const Vec& x) {
    double x1 = std::round(x[0]);
    double x2 = x[1];
    double x3 = nearest_value(kRe25Diameters, std::size(kRe25Diameters), x[2]);
    const double f_max = 1000.0, s_allow = 189000.0, l_max = 14.0, f_pre = 300.0;
    const double sigma_pm = 6.0, sigma_w = 1.25, shear_mod = 11.5e6;
    double f1 = kPi * kPi * x2 * x3 * x3 * (x1 + 2.0) / 4.0;
    double cf = (4.0 * (x2 / x3) - 1.0) / (4.0 * (x2 / x3) - 4.0) + 0.615 * x3 / x2;
    double stiff = shear_mod * std::pow(x3, 4.0) / (8.0 * x1 * std::pow(x2, 3.0));
    double sigma_p = f_pre / stiff;
    double lf = f_max / stiff + 1.05 * (x1 + 2.0) * x3;
    double g1 = -8.0 * cf * f_max * x2 / (kPi * std::pow(x3, 3.0)) + s_allow;
    double g2 = -lf + l_max;
    double g3 = -3.0 + x2 / x3;
    double g4 = -sigma_p + sigma_pm;
    double g5 = -sigma_p - (f_max - f_pre) / stiff - 1.05 * (x1 + 2.0) * x3 + lf;
    double g6 = sigma_w - (f_max - f_pre) / stiff;
    return {f1, violation(g1) + violation(g2) + violation(g3) + violation(g4) + violation(g5) +
                    violation(g6)};
}

std::shared_ptr<std::vector<Vec>> load_front_file(const std::string& name) {
    std::ifstream in(find_data_file(name));
    auto pts = std::make_shared<std::vector<Vec>>();
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        Vec p;
        double v;
        while (row >> v) p.push_back(v);
        if (!p.empty()) pts->push_back(std::move(p));
    }
    if (pts->empty()) throw std::runtime_error("reference front file " + name + " is empty");
    return pts;
}

std::function<std::vector<Vec>(int)> file_front_sampler(std::string filename) {
    // lazy so instances can be built (and optimized) before the asset exists
    auto cache = std::make_shared<std::shared_ptr<std::vector<Vec>>>();
    return [cache, filename](int n) {
        if (!*cache) *cache = load_front_file(filename);
        return subsample_even(**cache, n);
    };
}

struct Entry {
    int m;
    int d;
    bool fixed_dim;
};

const std::vector<std::pair<std::string, Entry>>& registry() {
    static const std::vector<std::pair<std::string, Entry>> entries = {
        {"zdt1", {2, 30, false}}, {"zdt2", {2, 30, false}}, {"zdt3", {2, 30, false}},
        {"zdt4", {2, 30, false}}, {"zdt6", {2, 30, false}}, {"uf1", {2, 30, false}},
        {"uf2", {2, 30, false}},  {"uf3", {2, 30, false}},  {"uf4", {2, 30, false}},
        {"uf5", {2, 30, false}},  {"uf6", {2, 30, false}},  {"uf7", {2, 30, false}},
        {"uf8", {3, 30, false}},  {"uf9", {3, 30, false}},  {"re21", {2, 4, true}},
        {"re22", {2, 3, true}},   {"re23", {2, 4, true}},   {"re24", {2, 2, true}},
        {"re25", {2, 3, true}},
    };
    return entries;
}

}  // namespace

std::vector<std::string> names() {
    std::vector<std::string> out;
    out.reserve(registry().size());
    for (const auto& [name, entry] : registry()) out.push_back(name);
    return out;
}

std::string find_data_file(const std::string& filename) {
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("MOEA_DATA_DIR")) dirs.push_back(env);
    dirs.push_back("data");
    dirs.push_back("../data");
#ifdef MOEA_SOURCE_DATA_DIR
    dirs.push_back(MOEA_SOURCE_DATA_DIR);
#endif
    for (const auto& dir : dirs) {
        std::string path = dir + "/" + filename;
        if (std::ifstream(path).good()) return path;
    }
    throw std::runtime_error("data file not found: " + filename);
}

Problem make(const std::string& name, int dim_override) {
    const Entry* entry = nullptr;
    for (const auto& [key, e] : registry())
        if (key == name) entry = &e;
    if (entry == nullptr) {
        std::string msg = "unknown problem '" + name + "'; valid names:";
        for (const auto& n : names()) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    if (entry->fixed_dim && dim_override > 0 && dim_override != entry->d)
        throw std::invalid_argument(name + " has a fixed dimension of " + std::to_string(entry->d));

    Problem p;
    p.name = name;
    p.m = entry->m;
    p.d = (dim_override > 0) ? dim_override : entry->d;
    if (!entry->fixed_dim && p.d < 3)
        throw std::invalid_argument(name + ": needs at least three variables");

    const int d = p.d;
    auto wrap = [d, name](Vec (*fn)(const Vec&)) {
        return [fn, d, name](const Vec& x) {
            check_dim(x, d, name.c_str());
            return fn(x);
        };
    };

    if (name == "zdt1" || name == "zdt4") {
        p.evaluate = wrap(name == "zdt1" ? zdt1_eval : zdt4_eval);
        p.sample_pf = [](int n) {
            return linspace_curve(n, 0.0, 1.0, [](double t) { return 1.0 - std::sqrt(t); });
        };
        p.bounds = unit_box(d);
        if (name == "zdt4") {
            std::fill(p.bounds.lower.begin() + 1, p.bounds.lower.end(), -5.0);
            std::fill(p.bounds.upper.begin() + 1, p.bounds.upper.end(), 5.0);
        }
    } else if (name == "zdt2") {
        p.evaluate = wrap(zdt2_eval);
        p.sample_pf = [](int n) {
            return linspace_curve(n, 0.0, 1.0, [](double t) { return 1.0 - t * t; });
        };
        p.bounds = unit_box(d);
    } else if (name == "zdt3") {
        p.evaluate = wrap(zdt3_eval);
        p.sample_pf = [](int n) {
            auto curve = linspace_curve(std::max(20 * n, 20000), 0.0, 1.0, [](double t) {
                return 1.0 - std::sqrt(t) - t * std::sin(10.0 * kPi * t);
            });
            return subsample_even(staircase_filter(std::move(curve)), n);
        };
        p.bounds = unit_box(d);
    } else if (name == "zdt6") {
        p.evaluate = wrap(zdt6_eval);
        p.sample_pf = [](int n) {
            return linspace_curve(n, zdt6_f1_min(), 1.0, [](double t) { return 1.0 - t * t; });
        };
        p.bounds = unit_box(d);
    } else if (name == "uf1" || name == "uf2" || name == "uf3") {
        p.evaluate = wrap(name == "uf1" ? uf1_eval : name == "uf2" ? uf2_eval : uf3_eval);
        p.sample_pf = [](int n) {
            return linspace_curve(n, 0.0, 1.0, [](double t) { return 1.0 - std::sqrt(t); });
        };
        p.bounds = uf_bounds(name, d);
    } else if (name == "uf4") {
        p.evaluate = wrap(uf4_eval);
        p.sample_pf = [](int n) {
            return linspace_curve(n, 0.0, 1.0, [](double t) { return 1.0 - t * t; });
        };
        p.bounds = uf_bounds(name, d);
    } else if (name == "uf5") {
        p.evaluate = wrap(uf5_eval);
        p.sample_pf = [](int n) {
            // discrete front: the 2N+1 points (i/2N, 1 - i/2N), N = 10
            std::vector<Vec> pts;
            for (int i = 0; i <= 20; ++i)
                pts.push_back({i / 20.0, 1.0 - i / 20.0});
            return subsample_even(pts, std::min(n, 21));
        };
        p.bounds = uf_bounds(name, d);
    } else if (name == "uf6") {
        p.evaluate = wrap(uf6_eval);
        p.sample_pf = [](int n) {
            // isolated point (0, 1) plus the segments f1 in [1/4, 1/2] and [3/4, 1]
            std::vector<Vec> pts{{0.0, 1.0}};
            int rest = std::max(n - 1, 2);
            for (int i = 0; i < rest; ++i) {
                double u = 0.5 * i / (rest - 1);
                double f1 = (u <= 0.25) ? 0.25 + u : 0.5 + u;
                pts.push_back({f1, 1.0 - f1});
            }
            return pts;
        };
        p.bounds = uf_bounds(name, d);
    } else if (name == "uf7") {
        p.evaluate = wrap(uf7_eval);
        p.sample_pf = [](int n) {
            return linspace_curve(n, 0.0, 1.0, [](double t) { return 1.0 - t; });
        };
        p.bounds = uf_bounds(name, d);
    } else if (name == "uf8") {
        p.evaluate = wrap(uf8_eval);
        p.sample_pf = sphere_front;
        p.bounds = uf_bounds(name, d);
    } else if (name == "uf9") {
        p.evaluate = wrap(uf9_eval);
        p.sample_pf = uf9_front;
        p.bounds = uf_bounds(name, d);
    } else if (name == "re21") {
        p.evaluate = wrap(re21_eval);
        p.sample_pf = file_front_sampler("re21_front.dat");
        double a = 1.0, s = std::sqrt(2.0);
        p.bounds = Bounds{{a, s, s, a}, {3.0 * a, 3.0 * a, 3.0 * a, 3.0 * a}};
    } else if (name == "re22") {
        p.evaluate = wrap(re22_eval);
        p.sample_pf = file_front_sampler("re22_front.dat");
        p.bounds = Bounds{{0.2, 0.0, 0.0}, {15.0, 20.0, 40.0}};
    } else if (name == "re23") {
        p.evaluate = wrap(re23_eval);
        p.sample_pf = file_front_sampler("re23_front.dat");
        p.bounds = Bounds{{1.0, 1.0, 10.0, 10.0}, {100.0, 100.0, 200.0, 240.0}};
    } else if (name == "re24") {
        p.evaluate = wrap(re24_eval);
        p.sample_pf = file_front_sampler("re24_front.dat");
        p.bounds = Bounds{{0.5, 4.0}, {4.0, 50.0}};
    } else if (name == "re25") {
        p.evaluate = wrap(re25_eval);
        p.sample_pf = file_front_sampler("re25_front.dat");
        p.bounds = Bounds{{1.0, 0.6, 0.09}, {70.0, 3.0, 0.5}};
    }
    return p;
}

}  // namespace moea::problems
