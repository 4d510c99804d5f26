#pragma once

// Independent reference computations and random generators shared by the
// unit tests and the acceptance binary. Nothing here calls into the library
// routine it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

using cd = std::complex<double>;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin() { return integer(0, 1) == 1; }
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

// Coefficients (ascending) of leading * prod (s - r_i), by direct expansion.
inline std::vector<cd> expand(const std::vector<cd>& roots, double leading) {
    std::vector<cd> c{leading};
    for (const cd& r : roots) {
        std::vector<cd> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return c;
}

inline std::vector<double> expand_real(const std::vector<cd>& roots, double leading) {
    const auto c = expand(roots, leading);
    std::vector<double> out;
    for (const cd& v : c) out.push_back(v.real());
    return out;
}

// sum a_k s^k by explicit powers.
inline cd eval_powers(const std::vector<double>& a, cd s) {
    cd acc = 0.0;
    cd power = 1.0;
    for (double c : a) {
        acc += c * power;
        power *= s;
    }
    return acc;
}

inline double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// int_0^inf f(t) dt with double-exponential quadrature.
template <class F>
double integrate_half_line(F f) {
    boost::math::quadrature::exp_sinh<double> integrator;
    auto guarded = [&](double t) {
        const double v = f(t);
        return std::isfinite(v) ? v : 0.0;
    };
    return integrator.integrate(guarded, 0.0, std::numeric_limits<double>::infinity());
}

template <class F>
double integrate_interval(F f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

// Conjugate-closed random roots inside |z| <= radius, pairwise separated by
// at least min_sep.
inline std::vector<cd> random_conjugate_roots(Rng& rng, int count, double radius, double min_sep) {
    std::vector<cd> roots;
    auto far_enough = [&](cd z) {
        for (const cd& r : roots)
            if (std::abs(r - z) < min_sep) return false;
        return std::abs(z.imag()) == 0.0 || std::abs(2.0 * z.imag()) >= min_sep;
    };
    while (static_cast<int>(roots.size()) < count) {
        const bool pair = count - static_cast<int>(roots.size()) >= 2 && rng.coin();
        if (pair) {
            const double r = radius * std::sqrt(rng.uniform(0.0, 1.0));
            const double theta = rng.uniform(0.05, std::acos(-1.0) - 0.05);
            const cd z = std::polar(r, theta);
            if (!far_enough(z)) continue;
            roots.push_back(z);
            roots.push_back(std::conj(z));
        } else {
            const cd z{rng.uniform(-radius, radius), 0.0};
            if (!far_enough(z)) continue;
            roots.push_back(z);
        }
    }
    return roots;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        const double x = k < a.size() ? a[k] : 0.0;
        const double y = k < b.size() ? b[k] : 0.0;
        m = std::max(m, std::abs(x - y));
    }
    return m;
}

inline double max_abs(const std::vector<double>& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

struct RootSpec {
    cd location;
    int multiplicity;
};

// Distinct conjugate-closed roots with multiplicities, total degree <= max_degree.
inline std::vector<RootSpec> random_root_specs(Rng& rng, int max_degree, double radius, double min_sep,
                                               int max_multiplicity) {
    const int distinct = rng.integer(1, std::max(1, max_degree / 2 + 1));
    std::vector<RootSpec> out;
    int degree = 0;
    for (const cd& z : random_conjugate_roots(rng, distinct, radius, min_sep)) {
        if (z.imag() < 0.0) continue;
        const int m = rng.integer(1, max_multiplicity);
        const int width = z.imag() > 0.0 ? 2 : 1;
        if (degree + width * m > max_degree) continue;
        out.push_back({z, m});
        if (width == 2) out.push_back({std::conj(z), m});
        degree += width * m;
    }
    if (out.empty()) out.push_back({cd{rng.uniform(-radius, radius), 0.0}, 1});
    return out;
}

inline std::vector<cd> flatten(const std::vector<RootSpec>& specs) {
    std::vector<cd> roots;
    for (const auto& r : specs)
        for (int k = 0; k < r.multiplicity; ++k) roots.push_back(r.location);
    return roots;
}

}  // namespace oracle
