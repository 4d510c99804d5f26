#pragma once

// Random instances of library types and the round-trip checks shared by the
// unit tests and the acceptance binary.

#include <sstream>
#include <string>

#include "ltistab/parser.hpp"
#include "ltistab/polynomial.hpp"
#include "ltistab/rational_tf.hpp"
#include "ltistab/signals.hpp"
#include "ltistab/transforms.hpp"
#include "support/oracles.hpp"

namespace gen {

using namespace ltistab;

// Up to max_terms terms (conjugate pairs count twice) with powers up to
// max_power and pairwise distinct rates at least min_sep apart. Causal rates
// sit left of a random split and anticausal ones right of it, so the strip is
// never empty.
inline ExpPolySignal random_signal(oracle::Rng& rng, int max_terms, double min_sep, int max_power) {
    const double split = rng.uniform(-1.5, 1.5);
    const int target = rng.integer(1, max_terms);
    ExpPolySignal sig;
    std::vector<Complex> used;
    auto separated = [&](Complex p) {
        for (const auto& q : used)
            if (std::abs(p - q) < min_sep) return false;
        return true;
    };
    int attempts = 0;
    while (static_cast<int>(sig.terms.size()) < target && ++attempts < 1000) {
        const Side side = rng.coin() ? Side::Causal : Side::Anticausal;
        const double offset = rng.uniform(0.05, 3.0);
        const double re = side == Side::Causal ? split - offset : split + offset;
        const int power = rng.integer(0, max_power);
        const bool pair = target - static_cast<int>(sig.terms.size()) >= 2 && rng.coin();
        const Complex rate = pair ? Complex(re, rng.uniform(min_sep, 3.0)) : Complex(re, 0.0);
        if (!separated(rate) || (pair && !separated(std::conj(rate)))) continue;
        if (pair) {
            const Complex c(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
            sig.terms.push_back({c, power, rate, side});
            sig.terms.push_back({std::conj(c), power, std::conj(rate), side});
            used.push_back(rate);
            used.push_back(std::conj(rate));
        } else {
            double c = rng.uniform(-2.0, 2.0);
            if (std::abs(c) < 0.1) c = 0.5;
            sig.terms.push_back({c, power, rate, side});
            used.push_back(rate);
        }
    }
    if (rng.integer(0, 3) == 0) sig.impulse_weight = rng.uniform(-2.0, 2.0);
    return sig;
}

// Empty when inverse_laplace(laplace(sig)) reproduces sig term by term.
// Output terms without a partner must have a coefficient below coeff_tol.
inline std::string laplace_roundtrip_mismatch(const ExpPolySignal& sig, double coeff_tol, double rate_tol) {
    const LaplaceResult res = laplace(sig);
    const ExpPolySignal back = inverse_laplace(res.tf, res.roc);
    std::ostringstream why;
    if (std::abs(back.impulse_weight - sig.impulse_weight) > coeff_tol)
        why << "impulse " << back.impulse_weight << " vs " << sig.impulse_weight << "; ";
    std::vector<bool> matched(back.terms.size(), false);
    for (const auto& t : sig.terms) {
        bool found = false;
        for (std::size_t i = 0; i < back.terms.size() && !found; ++i) {
            const auto& b = back.terms[i];
            if (matched[i] || b.side != t.side || b.power != t.power) continue;
            if (std::abs(b.rate - t.rate) > rate_tol || std::abs(b.coeff - t.coeff) > coeff_tol) continue;
            matched[i] = found = true;
        }
        if (!found) why << "missing term c=" << t.coeff << " k=" << t.power << " p=" << t.rate << "; ";
    }
    for (std::size_t i = 0; i < back.terms.size(); ++i)
        if (!matched[i] && std::abs(back.terms[i].coeff) > coeff_tol)
            why << "extra term c=" << back.terms[i].coeff << " k=" << back.terms[i].power << " p="
                << back.terms[i].rate << "; ";
    return why.str();
}

struct RootCase {
    std::vector<oracle::RootSpec> specs;
    Polynomial poly;
};

inline RootCase random_root_case(oracle::Rng& rng) {
    RootCase c;
    c.specs = oracle::random_root_specs(rng, 10, 10.0, 0.5, 3);
    RootSet rs;
    for (const auto& s : c.specs) rs.roots.push_back({s.location, s.multiplicity});
    c.poly = roots_to_poly(rs, rng.uniform(0.5, 2.0) * (rng.coin() ? 1.0 : -1.0));
    return c;
}

// Empty when poly_roots recovers every root with its multiplicity, within
// 1e-6 (1e-3 for multiplicity >= 3).
inline std::string roots_roundtrip_mismatch(const RootCase& c) {
    const RootSet got = poly_roots(c.poly);
    std::ostringstream why;
    if (got.total_multiplicity() != c.poly.degree()) why << "multiplicities do not sum to the degree; ";
    for (const auto& s : c.specs) {
        const double tol = s.multiplicity >= 3 ? 1e-3 : 1e-6;
        bool found = false;
        for (const auto& r : got.roots)
            if (r.multiplicity == s.multiplicity && std::abs(r.location - s.location) <= tol) found = true;
        if (!found) why << "root " << s.location << " x" << s.multiplicity << " not recovered; ";
    }
    return why.str();
}

// Proper TF of order <= max_order with arbitrary real coefficients.
inline TransferFunction random_proper_tf(oracle::Rng& rng, int max_order) {
    const int n = rng.integer(1, max_order);
    const int m = rng.integer(0, n);
    std::vector<double> den(static_cast<std::size_t>(n) + 1);
    std::vector<double> num(static_cast<std::size_t>(m) + 1);
    auto coefficient = [&] {
        const double mag = std::pow(10.0, rng.uniform(-4.0, 4.0));
        return rng.coin() ? mag : -mag;
    };
    for (double& v : den) v = coefficient();
    for (double& v : num) v = coefficient();
    if (rng.integer(0, 4) == 0 && m > 0) num[0] = 0.0;
    return tf_new(Polynomial(num), Polynomial(den));
}

// Empty when print then parse reproduces h bit for bit.
inline std::string parse_print_mismatch(const TransferFunction& h) {
    const std::string text = format_tf(h);
    const TransferFunction back = parse_transfer_function(text);
    return back == h ? std::string() : "round trip changed " + text + " into " + format_tf(back);
}

}  // namespace gen
