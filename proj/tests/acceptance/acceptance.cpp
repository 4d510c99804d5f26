// End-to-end acceptance checks. Prints one PASS/FAIL line per check and exits
// nonzero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "ltistab/error.hpp"
#include "ltistab/rational_tf.hpp"
#include "ltistab/signals.hpp"
#include "ltistab/stability.hpp"
#include "ltistab/transforms.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ltistab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << what;
        pass = pass && ok;
    }
};

int failures = 0;

void check(const char* name, const std::function<void(Outcome&)>& body) {
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << "unexpected exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %s%s%s\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().empty() ? "" : ": ",
                o.detail.str().c_str());
}

TransferFunction first_order(double k, double a) { return tf_new(Polynomial::constant(k), Polynomial{a, 1.0}); }

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
    return out;
}

// Smallest grid gain with a Stable verdict and largest with Unstable.
std::pair<double, double> flip(const std::vector<GainSweepEntry>& entries) {
    double first_stable = std::numeric_limits<double>::quiet_NaN();
    double last_unstable = std::numeric_limits<double>::quiet_NaN();
    for (const auto& e : entries) {
        if (e.report.verdict == Verdict::Stable && std::isnan(first_stable)) first_stable = e.gain;
        if (e.report.verdict == Verdict::Unstable) last_unstable = e.gain;
    }
    return {last_unstable, first_stable};
}

void rc_circuit(Outcome& o) {
    const double R = 1.0;
    const double C = 1.0;
    const TransferFunction h = first_order(1.0 / R, 1.0 / (R * C));
    const RootSet poles = tf_poles(h);
    o.require(poles.size() == 1 && std::abs(poles.roots[0].location - Complex(-1.0, 0.0)) <= 1e-12, "pole");
    o.require(bibo_from_poles(h).verdict == Verdict::Stable, "verdict");
    const ExpPolySignal impulse = inverse_laplace(h, roc_causal(h));
    o.require(impulse.impulse_weight == 0.0 && impulse.terms.size() == 1, "impulse response shape");
    if (impulse.terms.size() == 1) {
        const auto& t = impulse.terms[0];
        o.require(t.side == Side::Causal && t.power == 0, "impulse response side");
        o.require(std::abs(t.coeff - Complex(1.0, 0.0)) <= 1e-10, "impulse response coefficient");
        o.require(std::abs(t.rate - Complex(-1.0, 0.0)) <= 1e-10, "impulse response rate");
    }
    const NumericVerdict l1 = bibo_numeric(impulse);
    o.require(l1.verdict == Verdict::Stable && l1.l1_norm && std::abs(*l1.l1_norm - 1.0) <= 1e-7, "L1 norm");
}

void non_uniqueness(Outcome& o) {
    const LaplaceResult right = laplace(ExpPolySignal::causal_exp(1.0, -1.0));
    const LaplaceResult left = laplace(ExpPolySignal::anticausal_exp(-1.0, -1.0));
    o.require(right.tf == left.tf, "rational parts differ");
    o.require(right.tf == first_order(1.0, 1.0), "rational part is not 1/(s+1)");
    o.require(right.roc.lower() == -1.0 && right.roc.upper() == std::numeric_limits<double>::infinity(), "causal ROC");
    o.require(left.roc.lower() == -std::numeric_limits<double>::infinity() && left.roc.upper() == -1.0, "anticausal ROC");
}

void roc_deductions(Outcome& o) {
    oracle::Rng rng(101);
    int stable = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const TransferFunction h = gen::random_proper_tf(rng, 6);
        const Verdict by_poles = bibo_from_poles(h).verdict;
        const Verdict by_roc = bibo_from_roc(LaplaceResult{h, roc_causal(h)});
        o.require(by_poles == by_roc, "disagreement on trial " + std::to_string(trial) + "; ");
        stable += by_poles == Verdict::Stable;
    }
    if (o.pass) o.detail << stable << "/500 stable";
}

void closed_loop_formula(Outcome& o) {
    oracle::Rng rng(103);
    for (int trial = 0; trial < 1000; ++trial) {
        const double K = rng.uniform(-10.0, 10.0);
        const double a = rng.uniform(-10.0, 10.0);
        const TransferFunction closed = feedback_unity(series(TransferFunction::gain(K), first_order(1.0, a)));
        const RootSet poles = tf_poles(closed);
        const bool ok = closed.num().degree() == 0 && std::abs(closed.num()[0] - K) <= 1e-10 &&
                        poles.size() == 1 && poles.roots[0].multiplicity == 1 &&
                        std::abs(poles.roots[0].location - Complex(-(K + a), 0.0)) <= 1e-10;
        o.require(ok, "K=" + std::to_string(K) + " a=" + std::to_string(a));
    }
}

void gain_rule(Outcome& o) {
    const auto grid = linspace(-10.0, 10.0, 10000);
    const double step = grid[1] - grid[0];
    const auto start = std::chrono::steady_clock::now();
    const auto stable_plant = gain_sweep(first_order(1.0, 2.0), grid);
    const auto unstable_plant = gain_sweep(first_order(1.0, -1.0), grid);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& [entries, boundary] : {std::pair{&stable_plant, -2.0}, std::pair{&unstable_plant, 1.0}}) {
        const auto [last_unstable, first_stable] = flip(*entries);
        o.require(last_unstable < boundary && boundary - last_unstable <= step, "unstable side of K=" +
                                                                                     std::to_string(boundary));
        o.require(first_stable > boundary && first_stable - boundary <= step, "stable side of K=" +
                                                                                  std::to_string(boundary));
        o.require(entries->front().report.verdict == Verdict::Unstable, "low gains unstable");
        o.require(entries->back().report.verdict == Verdict::Stable, "high gains stable");
    }
    o.require(seconds < 5.0, "runtime");
    o.detail << "two 10000-point sweeps in " << seconds << " s";
}

void bibo_bound(Outcome& o) {
    const SampledSignal h = sample(ExpPolySignal::causal_exp(1.0, -1.0), 0.0, 10.0, 0.01);
    double l1 = 0.0;
    for (double v : h.values) l1 += std::abs(v);
    l1 *= h.dt;
    oracle::Rng rng(107);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double bx = rng.uniform(0.1, 10.0);
        SampledSignal x{rng.uniform(-5.0, 5.0), h.dt, std::vector<double>(static_cast<std::size_t>(rng.integer(1, 1500)))};
        for (double& v : x.values) v = rng.coin() ? (rng.coin() ? bx : -bx) : rng.uniform(-bx, bx);
        const SampledSignal y = convolve(x, h);
        double peak = 0.0;
        for (double v : y.values) peak = std::max(peak, std::abs(v));
        const double bound = bx * l1;
        o.require(peak <= bound * (1.0 + 1e-9), "trial " + std::to_string(trial));
        worst = std::max(worst, peak / bound);
    }
    const BoundWitness w = bound_witness(h, 1000, 1.0, 107);
    o.require(w.trials == 1000 && std::abs(w.bound - l1) <= 1e-12 * l1, "witness bound");
    o.require(w.max_abs_output <= w.bound * (1.0 + 1e-9), "witness outputs");
    o.detail << "largest output/bound ratio " << worst;
}

void adversarial(Outcome& o) {
    oracle::Rng rng(109);
    for (int trial = 0; trial < 100; ++trial) {
        SampledSignal h{rng.uniform(0.0, 2.0), rng.uniform(1e-3, 0.1),
                        std::vector<double>(static_cast<std::size_t>(rng.integer(1, 2000)))};
        for (double& v : h.values) v = rng.uniform(-3.0, 3.0);
        double expected = 0.0;
        for (double v : h.values) expected += std::abs(v);
        expected *= h.dt;
        const SampledSignal y = convolve(adversarial_input(h), h);
        const std::size_t zero = h.values.size() - 1;
        o.require(std::abs(y.time_at(zero)) <= 1e-9 * h.dt, "y(0) sample is not at t = 0");
        o.require(std::abs(y.values[zero] - expected) <= 1e-12 * expected, "trial " + std::to_string(trial));
    }
}

void convolution_property(Outcome& o) {
    const double dt = 1e-3;
    const ExpPolySignal x = ExpPolySignal::causal_exp(1.0, -1.0);
    const ExpPolySignal h = ExpPolySignal::causal_exp(1.0, -2.0);
    const SampledSignal y = convolve(sample(x, 0.0, 5.0, dt), sample(h, 0.0, 5.0, dt));
    const TransferFunction product = series(laplace(x).tf, laplace(h).tf);
    const ExpPolySignal exact = inverse_laplace(product, roc_causal(product));
    double worst = 0.0;
    for (std::size_t i = 0; i < y.values.size() && y.time_at(i) <= 5.0 + dt / 2; ++i)
        worst = std::max(worst, std::abs(y.values[i] - signal_eval(exact, y.time_at(i))));
    o.require(worst <= 5.0 * dt, "max error");
    o.detail << "max error " << worst;
}

void fourier_consistency(Outcome& o) {
    const TransferFunction rc = first_order(1.0, 1.0);
    const FourierTransform ft = fourier_from_laplace(LaplaceResult{rc, roc_causal(rc)});
    std::vector<double> omegas;
    for (int i = 0; i < 20; ++i) omegas.push_back(std::pow(10.0, -2.0 + 4.0 * i / 19.0));
    const auto from_laplace = ft.evaluate(omegas);
    const auto numeric = fourier_numeric(ExpPolySignal::causal_exp(1.0, -1.0), omegas);
    double worst = 0.0;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        const Complex closed = 1.0 / Complex(1.0, omegas[i]);
        o.require(std::abs(from_laplace[i] - closed) <= 1e-14, "closed form at " + std::to_string(omegas[i]));
        worst = std::max(worst, std::abs(numeric[i] - from_laplace[i]));
    }
    o.require(worst <= 1e-5, "numeric disagreement");
    bool refused = false;
    try {
        const TransferFunction grow = first_order(1.0, -1.0);
        fourier_from_laplace(LaplaceResult{grow, roc_causal(grow)});
    } catch (const Error& e) {
        refused = e.code() == ErrorCode::FourierDoesNotExist;
    }
    o.require(refused, "1/(s-1) not refused");
    o.detail << "max difference " << worst;
}

void round_trips(Outcome& o) {
    oracle::Rng rng(113);
    int laplace_fail = 0;
    int roots_fail = 0;
    int print_fail = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        laplace_fail += !gen::laplace_roundtrip_mismatch(gen::random_signal(rng, 6, 0.1, 0), 1e-9, 1e-9).empty();
        roots_fail += !gen::roots_roundtrip_mismatch(gen::random_root_case(rng)).empty();
        print_fail += !gen::parse_print_mismatch(gen::random_proper_tf(rng, 6)).empty();
    }
    o.require(laplace_fail == 0 && roots_fail == 0 && print_fail == 0, "");
    o.detail << "failures over 1000 each: laplace " << laplace_fail << ", roots " << roots_fail << ", parse/print "
             << print_fail;
}

}  // namespace

int main() {
    check("rc_circuit", rc_circuit);
    check("laplace_non_uniqueness", non_uniqueness);
    check("roc_deductions", roc_deductions);
    check("closed_loop_formula", closed_loop_formula);
    check("gain_rule", gain_rule);
    check("bibo_bound", bibo_bound);
    check("adversarial_input", adversarial);
    check("convolution_property", convolution_property);
    check("fourier_consistency", fourier_consistency);
    check("round_trips", round_trips);
    std::printf("%d of 10 checks failed\n", failures);
    return failures == 0 ? 0 : 1;
}
