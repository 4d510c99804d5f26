#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "ltistab/polynomial.hpp"

namespace ltistab {

enum class Side { Causal, Anticausal };

/// coeff * t^power * e^{rate t} * u(t)     (Causal)
/// coeff * t^power * e^{rate t} * u(-t)    (Anticausal)
struct ExpPolyTerm {
    Complex coeff;
    int power = 0;
    Complex rate;
    Side side = Side::Causal;

    friend bool operator==(const ExpPolyTerm&, const ExpPolyTerm&) = default;
};

/// Finite sum of exponential-polynomial terms plus a symbolic impulse
/// impulse_weight * delta(t). Complex terms are expected in conjugate pairs so
/// the signal is real; evaluation takes the real part regardless.
///
/// The step convention is right-continuous, u(0) = 1, so at t = 0 both the
/// causal and the anticausal terms contribute. The impulse never contributes
/// to pointwise evaluation.
struct ExpPolySignal {
    std::vector<ExpPolyTerm> terms;
    double impulse_weight = 0.0;

    static ExpPolySignal causal_exp(Complex coeff, Complex rate, int power = 0);
    static ExpPolySignal anticausal_exp(Complex coeff, Complex rate, int power = 0);
    static ExpPolySignal impulse(double weight);

    ExpPolySignal& operator+=(const ExpPolySignal& rhs);
    friend ExpPolySignal operator+(ExpPolySignal lhs, const ExpPolySignal& rhs) { return lhs += rhs; }
    ExpPolySignal scaled(double factor) const;
};

/// Uniform grid t_i = t0 + i * dt, i = 0 .. values.size() - 1.
struct SampledSignal {
    double t0 = 0.0;
    double dt = 1.0;
    std::vector<double> values;

    double time_at(std::size_t i) const noexcept { return t0 + static_cast<double>(i) * dt; }
    double t_end() const noexcept { return values.empty() ? t0 : time_at(values.size() - 1); }
};

/// Merges terms with identical (side, power, rate) and drops exact zeros.
ExpPolySignal combine_like_terms(const ExpPolySignal& sig);

double signal_eval(const ExpPolySignal& sig, double t);

/// Samples on [t0, t1] with step dt (end point included when it lands on the
/// grid). Throws Error{ImpulseNotSamplable} if the signal carries an impulse.
SampledSignal sample(const ExpPolySignal& sig, double t0, double t1, double dt);

/// Riemann-sum convolution y[n] = dt * sum_k x[k] h[n-k].
/// Throws Error{GridMismatch} on unequal steps.
SampledSignal convolve(const SampledSignal& x, const SampledSignal& h);

enum class IntegralStatus { Finite, Divergent, DivergentImpulse };

struct IntegralResult {
    IntegralStatus status = IntegralStatus::Finite;
    double value = 0.0;

    bool finite() const noexcept { return status == IntegralStatus::Finite; }
    static IntegralResult finite_value(double v) { return {IntegralStatus::Finite, v}; }
    static IntegralResult divergent() { return {IntegralStatus::Divergent, 0.0}; }
};

/// True when some term does not decay toward its side's infinity.
bool has_growing_term(const ExpPolySignal& sig);

/// L1 norm of the signal, impulse weight included.
///
/// Closed form when every term has a real rate and the terms on each side
/// share one sign; adaptive Simpson quadrature otherwise.
IntegralResult abs_integral(const ExpPolySignal& sig);

/// Quadrature-only route to the same L1 norm (tolerance 1e-8 relative to the
/// term-wise bound, analytic tail below 1e-10).
IntegralResult abs_integral_quadrature(const ExpPolySignal& sig);

/// Energy integral of the signal. An impulse yields DivergentImpulse.
IntegralResult square_integral(const ExpPolySignal& sig);

/// Upper bound of int_T^inf |term| summed over one side's terms
/// (anticausal terms are measured on (-inf, -T]).
double tail_bound(const ExpPolySignal& sig, Side side, double T);

/// Smallest doubling horizon T with tail_bound below `target`.
double tail_horizon(const ExpPolySignal& sig, Side side, double target);

/// CSV with header `t,value`, 17 significant digits.
void write_csv(std::ostream& os, const SampledSignal& sig);
/// Reads the CSV produced by write_csv. Needs at least two rows on a uniform grid.
SampledSignal read_csv(std::istream& is);

}  // namespace ltistab
