#include "ltistab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include "ltistab/error.hpp"

namespace ltistab {

namespace {

constexpr double kBoundSlack = 1e-9;
constexpr std::size_t kParallelThreshold = 256;

Verdict classify_abscissa(double abscissa, double epsilon) {
    if (abscissa < -epsilon) return Verdict::Stable;
    if (abscissa > epsilon) return Verdict::Unstable;
    return Verdict::Marginal;
}

}  // namespace

bool GainRange::contains(double k) const noexcept {
    const bool above = boundary_open.lower ? k > lower : k >= lower;
    const bool below = boundary_open.upper ? k < upper : k <= upper;
    return above && below;
}

StabilityReport bibo_from_poles(const TransferFunction& h, double epsilon) {
    StabilityReport report;
    report.route = Route::Poles;
    const RootSet poles = tf_poles(h);
    if (poles.empty()) return report;

    const Root* dominant = &poles.roots.front();
    for (const auto& p : poles.roots) {
        const double re = p.location.real();
        const double best = dominant->location.real();
        if (re > best || (re == best && (p.multiplicity > dominant->multiplicity ||
                                         (p.multiplicity == dominant->multiplicity && p.location.imag() >= 0.0 &&
                                          dominant->location.imag() < 0.0))))
            dominant = &p;
    }
    report.spectral_abscissa = dominant->location.real();
    report.dominant_pole = dominant->location;
    report.dominant_multiplicity = dominant->multiplicity;
    report.verdict = classify_abscissa(report.spectral_abscissa, epsilon);
    if (report.verdict == Verdict::Stable) {
        report.decay_time_constant = 1.0 / std::abs(report.spectral_abscissa);
        report.settling_time_estimate = kSettlingConstant / std::abs(report.spectral_abscissa);
    } else {
        report.decay_time_constant = std::numeric_limits<double>::infinity();
        report.settling_time_estimate = std::numeric_limits<double>::infinity();
    }
    return report;
}

Verdict bibo_from_roc(const LaplaceResult& res, double epsilon) {
    const double lo = res.roc.lower();
    const double hi = res.roc.upper();
    if (lo < -epsilon && hi > epsilon) return Verdict::Stable;
    if (lo > epsilon || hi < -epsilon) return Verdict::Unstable;
    if (std::abs(lo) <= epsilon || std::abs(hi) <= epsilon) return Verdict::Marginal;
    return Verdict::Unstable;
}

NumericVerdict bibo_numeric(const ExpPolySignal& impulse_response) {
    const IntegralResult l1 = abs_integral(impulse_response);
    if (!l1.finite()) return {Verdict::Unstable, std::nullopt};
    return {Verdict::Stable, l1.value};
}

SampledSignal adversarial_input(const SampledSignal& h) {
    const std::size_t n = h.values.size();
    SampledSignal x{-h.t_end(), h.dt, std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
        const double v = h.values[n - 1 - i];
        x.values[i] = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
    }
    return x;
}

BoundWitness bound_witness(const SampledSignal& h, int trials, double bound_x, std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "bound_witness needs at least one trial");
    if (!(bound_x >= 0.0)) throw Error(ErrorCode::InvalidArgument, "input bound must be nonnegative");

    double abs_sum = 0.0;
    for (double v : h.values) abs_sum += std::abs(v);
    BoundWitness witness{0.0, bound_x * h.dt * abs_sum, trials};
    const double limit = witness.bound * (1.0 + kBoundSlack);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> level(-bound_x, bound_x);
    std::bernoulli_distribution coin(0.5);
    SampledSignal x{0.0, h.dt, std::vector<double>(h.values.size())};
    for (int trial = 0; trial < trials; ++trial) {
        // Alternate between uniform noise and bang-bang inputs at the bound.
        const bool saturated = trial % 2 == 1;
        for (double& v : x.values) v = saturated ? (coin(rng) ? bound_x : -bound_x) : level(rng);
        const SampledSignal y = convolve(x, h);
        for (double v : y.values) witness.max_abs_output = std::max(witness.max_abs_output, std::abs(v));
        if (witness.max_abs_output > limit)
            throw Error(ErrorCode::BoundViolated, "output exceeded bound_x * dt * sum|h|");
    }
    return witness;
}

GainRange gain_range_first_order(double a) { return GainRange{-a, std::numeric_limits<double>::infinity(), {true, true}}; }

std::vector<GainSweepEntry> gain_sweep(const TransferFunction& plant, const std::vector<double>& gains,
                                       double epsilon) {
    std::vector<GainSweepEntry> out(gains.size());
    auto evaluate = [&](std::size_t i) {
        const TransferFunction closed = feedback_unity(series(TransferFunction::gain(gains[i]), plant));
        out[i] = GainSweepEntry{gains[i], bibo_from_poles(closed, epsilon)};
    };

    const std::size_t workers =
        gains.size() < kParallelThreshold ? 1 : std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1) {
        for (std::size_t i = 0; i < gains.size(); ++i) evaluate(i);
        return out;
    }

    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < gains.size(); i += workers) evaluate(i);
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return out;
}

double settling_time(const StabilityReport& report) {
    if (report.verdict != Verdict::Stable)
        throw Error(ErrorCode::NotStable, "settling time is only defined for stable systems");
    return kSettlingConstant / std::abs(report.spectral_abscissa);
}

ExpPolySignal first_order_closed_loop_impulse(double k, double a) {
    return ExpPolySignal::causal_exp(k, -(k + a));
}

}  // namespace ltistab
