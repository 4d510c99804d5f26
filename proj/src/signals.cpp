#include "ltistab/signals.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "ltistab/error.hpp"
#include "ltistab/format.hpp"
#include "ltistab/quadrature.hpp"

namespace ltistab {

namespace {

constexpr double kRateMatch = 1e-12;
constexpr double kTailTarget = 1e-10;
constexpr double kQuadratureTol = 1e-8;
constexpr int kMaxPanels = 20000;

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

double int_pow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

Complex term_value(const ExpPolyTerm& term, double t) {
    return term.coeff * int_pow(t, term.power) * std::exp(term.rate * t);
}

bool same_rate(Complex a, Complex b) {
    return std::abs(a - b) <= kRateMatch * std::max(1.0, std::abs(a));
}

// Decay rate of |term| toward the side's infinity; positive when it decays.
double decay_rate(const ExpPolyTerm& term) {
    return term.side == Side::Causal ? -term.rate.real() : term.rate.real();
}

// sum over one side of |c| k! / sigma^{k+1}: the L1 norm of the term moduli,
// an upper bound on the side's integral.
double modulus_l1(const ExpPolySignal& sig, Side side) {
    double total = 0.0;
    for (const auto& term : sig.terms) {
        if (term.side != side) continue;
        const double sigma = decay_rate(term);
        total += std::abs(term.coeff) * factorial(term.power) / int_pow(sigma, term.power + 1);
    }
    return total;
}

// Integrand on the side's half-line, parameterised by tau >= 0 (t = tau causal,
// t = -tau anticausal).
double side_value(const ExpPolySignal& sig, Side side, double tau) {
    const double t = side == Side::Causal ? tau : -tau;
    Complex acc = 0.0;
    for (const auto& term : sig.terms)
        if (term.side == side) acc += term_value(term, t);
    return acc.real();
}

int panel_count(const ExpPolySignal& sig, Side side, double T) {
    double fastest = 0.0;
    for (const auto& term : sig.terms)
        if (term.side == side) fastest = std::max(fastest, std::abs(term.rate));
    const double n = std::ceil(2.0 * T * fastest) + 16.0;
    return static_cast<int>(std::min(n, static_cast<double>(kMaxPanels)));
}

bool side_present(const ExpPolySignal& sig, Side side) {
    return std::any_of(sig.terms.begin(), sig.terms.end(), [&](const ExpPolyTerm& t) { return t.side == side; });
}

// Closed form is exact when every term is real and, per side, all terms have
// the same sign over the whole half-line.
bool sign_coherent(const ExpPolySignal& sig) {
    for (Side side : {Side::Causal, Side::Anticausal}) {
        int sign = 0;
        for (const auto& term : sig.terms) {
            if (term.side != side) continue;
            if (term.rate.imag() != 0.0) return false;
            if (std::abs(term.coeff.imag()) > 1e-14 * std::abs(term.coeff)) return false;
            double c = term.coeff.real();
            if (side == Side::Anticausal && term.power % 2 == 1) c = -c;
            const int s = c > 0.0 ? 1 : -1;
            if (sign == 0) sign = s;
            if (s != sign) return false;
        }
    }
    return true;
}

}  // namespace

ExpPolySignal ExpPolySignal::causal_exp(Complex coeff, Complex rate, int power) {
    return ExpPolySignal{{ExpPolyTerm{coeff, power, rate, Side::Causal}}, 0.0};
}

ExpPolySignal ExpPolySignal::anticausal_exp(Complex coeff, Complex rate, int power) {
    return ExpPolySignal{{ExpPolyTerm{coeff, power, rate, Side::Anticausal}}, 0.0};
}

ExpPolySignal ExpPolySignal::impulse(double weight) { return ExpPolySignal{{}, weight}; }

ExpPolySignal& ExpPolySignal::operator+=(const ExpPolySignal& rhs) {
    terms.insert(terms.end(), rhs.terms.begin(), rhs.terms.end());
    impulse_weight += rhs.impulse_weight;
    return *this;
}

ExpPolySignal ExpPolySignal::scaled(double factor) const {
    ExpPolySignal out = *this;
    for (auto& term : out.terms) term.coeff *= factor;
    out.impulse_weight *= factor;
    return out;
}

ExpPolySignal combine_like_terms(const ExpPolySignal& sig) {
    ExpPolySignal out;
    out.impulse_weight = sig.impulse_weight;
    for (const auto& term : sig.terms) {
        auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const ExpPolyTerm& t) {
            return t.side == term.side && t.power == term.power && same_rate(t.rate, term.rate);
        });
        if (it == out.terms.end())
            out.terms.push_back(term);
        else
            it->coeff += term.coeff;
    }
    std::erase_if(out.terms, [](const ExpPolyTerm& t) { return t.coeff == 0.0; });
    return out;
}

double signal_eval(const ExpPolySignal& sig, double t) {
    Complex acc = 0.0;
    for (const auto& term : sig.terms) {
        const bool active = term.side == Side::Causal ? t >= 0.0 : t <= 0.0;
        if (active) acc += term_value(term, t);
    }
    return acc.real();
}

SampledSignal sample(const ExpPolySignal& sig, double t0, double t1, double dt) {
    if (!(t1 > t0) || !(dt > 0.0))
        throw Error(ErrorCode::InvalidArgument, "sampling needs t0 < t1 and dt > 0");
    if (sig.impulse_weight != 0.0)
        throw Error(ErrorCode::ImpulseNotSamplable, "signal contains an impulse, which cannot be sampled");
    const auto n = static_cast<std::size_t>(std::floor((t1 - t0) / dt * (1.0 + 1e-12))) + 1;
    SampledSignal out{t0, dt, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) out.values[i] = signal_eval(sig, out.time_at(i));
    return out;
}

SampledSignal convolve(const SampledSignal& x, const SampledSignal& h) {
    if (std::abs(x.dt - h.dt) > 1e-12 * std::max(x.dt, h.dt))
        throw Error(ErrorCode::GridMismatch, "convolution operands have different sample steps");
    if (x.values.empty() || h.values.empty())
        throw Error(ErrorCode::InvalidArgument, "convolution operands must be nonempty");
    const std::size_t nx = x.values.size();
    const std::size_t nh = h.values.size();
    SampledSignal y{x.t0 + h.t0, x.dt, std::vector<double>(nx + nh - 1, 0.0)};
    for (std::size_t n = 0; n < y.values.size(); ++n) {
        const std::size_t k_lo = n >= nh ? n - nh + 1 : 0;
        const std::size_t k_hi = std::min(n, nx - 1);
        double acc = 0.0;
        for (std::size_t k = k_lo; k <= k_hi; ++k) acc += x.values[k] * h.values[n - k];
        y.values[n] = x.dt * acc;
    }
    return y;
}

bool has_growing_term(const ExpPolySignal& sig) {
    return std::any_of(sig.terms.begin(), sig.terms.end(),
                       [](const ExpPolyTerm& t) { return !(decay_rate(t) > 0.0); });
}

double tail_bound(const ExpPolySignal& sig, Side side, double T) {
    // int_T^inf tau^k e^{-sigma tau} = k! e^{-x} sum_{j<=k} x^j/j! / sigma^{k+1}, x = sigma T
    double total = 0.0;
    for (const auto& term : sig.terms) {
        if (term.side != side) continue;
        const double sigma = decay_rate(term);
        if (!(sigma > 0.0)) return std::numeric_limits<double>::infinity();
        const double x = sigma * T;
        double partial = 0.0;
        double power_term = 1.0;
        for (int j = 0; j <= term.power; ++j) {
            if (j > 0) power_term *= x / j;
            partial += power_term;
        }
        total += std::abs(term.coeff) * factorial(term.power) * std::exp(-x) * partial /
                 int_pow(sigma, term.power + 1);
    }
    return total;
}

double tail_horizon(const ExpPolySignal& sig, Side side, double target) {
    double T = 1.0;
    for (const auto& term : sig.terms)
        if (term.side == side) T = std::max(T, (term.power + 1) / decay_rate(term));
    while (tail_bound(sig, side, T) >= target && T < 1e12) T *= 2.0;
    return T;
}

IntegralResult abs_integral_quadrature(const ExpPolySignal& input) {
    const ExpPolySignal sig = combine_like_terms(input);
    if (has_growing_term(sig)) return IntegralResult::divergent();
    double total = std::abs(sig.impulse_weight);
    for (Side side : {Side::Causal, Side::Anticausal}) {
        if (!side_present(sig, side)) continue;
        const double scale = std::max(1.0, modulus_l1(sig, side));
        const double T = tail_horizon(sig, side, kTailTarget * scale);
        total += adaptive_simpson([&](double tau) { return std::abs(side_value(sig, side, tau)); }, 0.0, T,
                                  kQuadratureTol * scale, panel_count(sig, side, T));
    }
    return IntegralResult::finite_value(total);
}

IntegralResult abs_integral(const ExpPolySignal& input) {
    const ExpPolySignal sig = combine_like_terms(input);
    if (has_growing_term(sig)) return IntegralResult::divergent();
    if (!sign_coherent(sig)) return abs_integral_quadrature(sig);
    double total = std::abs(sig.impulse_weight);
    for (const auto& term : sig.terms) {
        const double sigma = decay_rate(term);
        total += std::abs(term.coeff) * factorial(term.power) / int_pow(sigma, term.power + 1);
    }
    return IntegralResult::finite_value(total);
}

IntegralResult square_integral(const ExpPolySignal& input) {
    const ExpPolySignal sig = combine_like_terms(input);
    if (sig.impulse_weight != 0.0) return {IntegralStatus::DivergentImpulse, 0.0};
    if (has_growing_term(sig)) return IntegralResult::divergent();

    // The real signal is (1/2) sum (g + conj g); square and integrate pairwise.
    Complex total = 0.0;
    for (Side side : {Side::Causal, Side::Anticausal}) {
        std::vector<ExpPolyTerm> halves;
        for (const auto& term : sig.terms) {
            if (term.side != side) continue;
            halves.push_back({0.5 * term.coeff, term.power, term.rate, side});
            halves.push_back({0.5 * std::conj(term.coeff), term.power, std::conj(term.rate), side});
        }
        for (const auto& a : halves) {
            for (const auto& b : halves) {
                const int m = a.power + b.power;
                const Complex q = a.rate + b.rate;
                // causal: int_0^inf t^m e^{q t} = m! / (-q)^{m+1}
                // anticausal: int_-inf^0 t^m e^{q t} = (-1)^m m! / q^{m+1}
                Complex piece = side == Side::Causal ? factorial(m) / std::pow(-q, m + 1)
                                                     : factorial(m) / std::pow(q, m + 1);
                if (side == Side::Anticausal && m % 2 == 1) piece = -piece;
                total += a.coeff * b.coeff * piece;
            }
        }
    }
    return IntegralResult::finite_value(total.real());
}

void write_csv(std::ostream& os, const SampledSignal& sig) {
    os << "t,value\n";
    for (std::size_t i = 0; i < sig.values.size(); ++i)
        os << format_double(sig.time_at(i)) << ',' << format_double(sig.values[i]) << '\n';
}

SampledSignal read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw Error(ErrorCode::InvalidInput, "signal CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,value") throw Error(ErrorCode::InvalidInput, "signal CSV must start with header 't,value'");

    std::vector<double> times;
    std::vector<double> values;
    std::size_t row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorCode::InvalidInput, "signal CSV row " + std::to_string(row) + " lacks a comma");
        try {
            std::size_t used_t = 0;
            std::size_t used_v = 0;
            const std::string ts = line.substr(0, comma);
            const std::string vs = line.substr(comma + 1);
            const double t = std::stod(ts, &used_t);
            const double v = std::stod(vs, &used_v);
            if (used_t != ts.size() || used_v != vs.size()) throw std::invalid_argument("trailing");
            times.push_back(t);
            values.push_back(v);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidInput, "signal CSV row " + std::to_string(row) + " is not numeric");
        }
    }
    if (values.size() < 2) throw Error(ErrorCode::InvalidInput, "signal CSV needs at least two samples");

    const double t0 = times.front();
    const double dt = (times.back() - t0) / static_cast<double>(times.size() - 1);
    if (!(dt > 0.0)) throw Error(ErrorCode::InvalidInput, "signal CSV times must increase");
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double expected = t0 + static_cast<double>(i) * dt;
        if (std::abs(times[i] - expected) > 1e-6 * dt)
            throw Error(ErrorCode::InvalidInput, "signal CSV is not on a uniform grid");
    }
    return SampledSignal{t0, dt, std::move(values)};
}

}  // namespace ltistab
