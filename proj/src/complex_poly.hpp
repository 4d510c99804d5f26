#pragma once

// Complex-coefficient polynomial helpers used as intermediates when assembling
// transforms and residues. Ascending powers, untrimmed.

#include <algorithm>
#include <complex>
#include <vector>

namespace ltistab::detail {

using CPoly = std::vector<std::complex<double>>;

inline CPoly cpoly_mul(const CPoly& p, const CPoly& q) {
    if (p.empty() || q.empty()) return {};
    CPoly out(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

inline void cpoly_add_into(CPoly& acc, const CPoly& p, std::complex<double> scale = 1.0) {
    if (acc.size() < p.size()) acc.resize(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += scale * p[i];
}

/// (s - root)^power
inline CPoly cpoly_linear_power(std::complex<double> root, int power) {
    CPoly out{1.0};
    const CPoly factor{-root, 1.0};
    for (int i = 0; i < power; ++i) out = cpoly_mul(out, factor);
    return out;
}

inline std::complex<double> cpoly_eval(const CPoly& p, std::complex<double> s) {
    std::complex<double> acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * s + *it;
    return acc;
}

}  // namespace ltistab::detail
