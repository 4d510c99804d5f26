#include "ltistab/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "complex_poly.hpp"
#include "ltistab/error.hpp"
#include "ltistab/quadrature.hpp"

namespace ltistab {

namespace {

using detail::CPoly;

constexpr double kRealTolerance = 1e-10;
constexpr double kBoundMargin = 1e-9;
constexpr double kFourierTol = 1e-7;
constexpr double kTailTarget = 1e-10;

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

struct RateGroup {
    Complex rate;
    int multiplicity = 0;
};

Polynomial real_part_checked(const CPoly& p, const char* what) {
    double scale = 0.0;
    for (const auto& c : p) scale = std::max(scale, std::abs(c));
    std::vector<double> out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (std::abs(p[k].imag()) > kRealTolerance * std::max(1.0, scale))
            throw Error(ErrorCode::NonRealSignal,
                        std::string("transform ") + what + " has complex coefficients; signal terms are not conjugate-closed");
        out[k] = p[k].real();
    }
    return Polynomial(std::move(out));
}

// Coefficients of p(center + u) in powers of u (repeated synthetic division).
CPoly taylor_shift(std::span<const double> p, Complex center) {
    CPoly a(p.begin(), p.end());
    const std::size_t n = a.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j-- > k;) a[j] += center * a[j + 1];
    return a;
}

double side_scale(const ExpPolySignal& sig, Side side) {
    double total = 0.0;
    for (const auto& term : sig.terms) {
        if (term.side != side) continue;
        const double sigma = side == Side::Causal ? -term.rate.real() : term.rate.real();
        total += std::abs(term.coeff) * factorial(term.power) / std::pow(sigma, term.power + 1);
    }
    return std::max(1.0, total);
}

Complex fourier_side(const ExpPolySignal& sig, Side side, double omega) {
    const bool present = std::any_of(sig.terms.begin(), sig.terms.end(),
                                     [&](const ExpPolyTerm& t) { return t.side == side; });
    if (!present) return 0.0;
    const double scale = side_scale(sig, side);
    const double T = tail_horizon(sig, side, kTailTarget * scale);
    double fastest = std::abs(omega);
    for (const auto& term : sig.terms)
        if (term.side == side) fastest = std::max(fastest, std::abs(term.rate) + std::abs(omega));
    const int panels = static_cast<int>(std::min(2.0 * T * fastest + 16.0, 200000.0));
    const double sign = side == Side::Causal ? 1.0 : -1.0;
    return adaptive_simpson_complex(
        [&](double tau) {
            const double t = sign * tau;
            Complex value = 0.0;
            for (const auto& term : sig.terms)
                if (term.side == side) value += term.coeff * std::pow(t, term.power) * std::exp(term.rate * t);
            return value.real() * std::exp(Complex(0.0, -omega * t));
        },
        0.0, T, kFourierTol * scale, panels);
}

}  // namespace

Roc Roc::make(double lower, double upper) {
    if (!(lower < upper)) throw Error(ErrorCode::EmptyRoc, "region of convergence is empty");
    return Roc(lower, upper);
}

Roc Roc::intersect(const Roc& other) const {
    return make(std::max(lower_, other.lower_), std::min(upper_, other.upper_));
}

Complex PartialFractions::evaluate(Complex s) const {
    Complex acc = direct;
    for (const auto& e : entries) {
        Complex power = 1.0;
        for (const auto& r : e.residues) {
            power *= (s - e.pole);
            acc += r / power;
        }
    }
    return acc;
}

LaplaceResult laplace(const ExpPolySignal& input) {
    const ExpPolySignal sig = combine_like_terms(input);

    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    for (const auto& term : sig.terms) {
        if (term.side == Side::Causal)
            lower = std::max(lower, term.rate.real());
        else
            upper = std::min(upper, term.rate.real());
    }
    if (!(lower < upper))
        throw Error(ErrorCode::EmptyRoc, "no common strip of convergence: the Laplace transform does not exist");
    const Roc roc = Roc::make(lower, upper);

    std::vector<RateGroup> groups;
    std::vector<std::size_t> group_of(sig.terms.size());
    for (std::size_t i = 0; i < sig.terms.size(); ++i) {
        const auto& term = sig.terms[i];
        auto it = std::find_if(groups.begin(), groups.end(), [&](const RateGroup& g) {
            return std::abs(g.rate - term.rate) <= 1e-12 * std::max(1.0, std::abs(term.rate));
        });
        if (it == groups.end()) {
            groups.push_back({term.rate, term.power + 1});
            group_of[i] = groups.size() - 1;
        } else {
            it->multiplicity = std::max(it->multiplicity, term.power + 1);
            group_of[i] = static_cast<std::size_t>(it - groups.begin());
        }
    }

    CPoly den{1.0};
    for (const auto& g : groups) den = detail::cpoly_mul(den, detail::cpoly_linear_power(g.rate, g.multiplicity));

    // c k! / (s-p)^{k+1} over the common denominator; anticausal terms flip sign.
    CPoly num(den.size(), 0.0);
    for (std::size_t i = 0; i < sig.terms.size(); ++i) {
        const auto& term = sig.terms[i];
        CPoly piece{1.0};
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const int power = g == group_of[i] ? groups[g].multiplicity - term.power - 1 : groups[g].multiplicity;
            piece = detail::cpoly_mul(piece, detail::cpoly_linear_power(groups[g].rate, power));
        }
        const double sign = term.side == Side::Causal ? 1.0 : -1.0;
        detail::cpoly_add_into(num, piece, sign * term.coeff * factorial(term.power));
    }
    detail::cpoly_add_into(num, den, sig.impulse_weight);

    return LaplaceResult{tf_new(real_part_checked(num, "numerator"), real_part_checked(den, "denominator")), roc};
}

PartialFractions partial_fractions(const TransferFunction& h, double tol) {
    PartialFractions pf;
    const Polynomial& den = h.den();
    if (h.num().degree() == den.degree()) pf.direct = h.num().leading();
    if (den.degree() < 1) return pf;

    const Polynomial remainder = h.num() - den.scaled(pf.direct);
    const RootSet poles = tf_poles(h, tol);

    for (std::size_t i = 0; i < poles.roots.size(); ++i) {
        const Complex p = poles.roots[i].location;
        const int m = poles.roots[i].multiplicity;
        PartialFractionEntry entry{p, m, std::vector<Complex>(static_cast<std::size_t>(m), 0.0)};
        if (remainder.is_zero()) {
            pf.entries.push_back(std::move(entry));
            continue;
        }

        // Q(u) = prod over the other poles (u + p - q)^{m_q}; N(u) = R(p + u).
        CPoly q{1.0};
        for (std::size_t j = 0; j < poles.roots.size(); ++j) {
            if (j == i) continue;
            q = detail::cpoly_mul(q, detail::cpoly_linear_power(poles.roots[j].location - p, poles.roots[j].multiplicity));
        }
        const CPoly n = taylor_shift(remainder.coeffs(), p);

        // Power-series quotient N/Q to order m-1; r_j is the coefficient of u^{m-j}.
        std::vector<Complex> e(static_cast<std::size_t>(m), 0.0);
        for (int k = 0; k < m; ++k) {
            Complex acc = k < static_cast<int>(n.size()) ? n[k] : Complex(0.0);
            for (int t = 1; t <= k && t < static_cast<int>(q.size()); ++t) acc -= q[t] * e[k - t];
            e[k] = acc / q[0];
        }
        for (int j = 1; j <= m; ++j) entry.residues[j - 1] = e[m - j];
        if (p.imag() == 0.0)
            for (auto& r : entry.residues) r = r.real();
        pf.entries.push_back(std::move(entry));
    }

    // Conjugate poles carry conjugate residues exactly.
    for (auto& lower : pf.entries) {
        if (lower.pole.imag() >= 0.0) continue;
        for (const auto& upper : pf.entries) {
            if (upper.pole == std::conj(lower.pole) && upper.multiplicity == lower.multiplicity) {
                for (int j = 0; j < lower.multiplicity; ++j) lower.residues[j] = std::conj(upper.residues[j]);
                break;
            }
        }
    }
    return pf;
}

ExpPolySignal inverse_laplace(const TransferFunction& h, const Roc& roc) {
    const PartialFractions pf = partial_fractions(h);
    ExpPolySignal out;
    out.impulse_weight = pf.direct;
    for (const auto& e : pf.entries) {
        const double re = e.pole.real();
        const double margin = kBoundMargin * std::max(1.0, std::abs(e.pole));
        const bool left_of_strip = re <= roc.lower() + margin;
        const bool right_of_strip = re >= roc.upper() - margin;
        if (left_of_strip && right_of_strip)
            throw Error(ErrorCode::AmbiguousRoc, "pole lies on both bounds of a degenerate strip");
        if (!left_of_strip && !right_of_strip)
            throw Error(ErrorCode::PoleInsideRoc, "a pole lies inside the region of convergence");
        const Side side = left_of_strip ? Side::Causal : Side::Anticausal;
        const double sign = left_of_strip ? 1.0 : -1.0;
        for (int j = 1; j <= e.multiplicity; ++j) {
            const Complex r = e.residues[j - 1];
            if (r == 0.0) continue;
            out.terms.push_back({sign * r / factorial(j - 1), j - 1, e.pole, side});
        }
    }
    return out;
}

Roc roc_causal(const TransferFunction& h) {
    const RootSet poles = tf_poles(h);
    if (poles.empty()) return Roc::entire_plane();
    double rightmost = -std::numeric_limits<double>::infinity();
    for (const auto& p : poles.roots) rightmost = std::max(rightmost, p.location.real());
    return Roc::right_of(rightmost);
}

Complex FourierTransform::operator()(double omega) const { return tf_eval(tf_, Complex(0.0, omega)); }

std::vector<Complex> FourierTransform::evaluate(const std::vector<double>& omegas) const {
    std::vector<Complex> out;
    out.reserve(omegas.size());
    for (const auto& point : freq_response(tf_, omegas)) out.push_back(point.value);
    return out;
}

FourierTransform fourier_from_laplace(const LaplaceResult& res) {
    if (!res.roc.contains_imaginary_axis())
        throw Error(ErrorCode::FourierDoesNotExist,
                    "the Fourier transform does not exist: the imaginary axis is outside the region of convergence");
    return FourierTransform(res.tf);
}

std::vector<Complex> fourier_numeric(const ExpPolySignal& input, const std::vector<double>& omegas) {
    const ExpPolySignal sig = combine_like_terms(input);
    if (!abs_integral(sig).finite())
        throw Error(ErrorCode::NotAbsolutelyIntegrable,
                    "signal is not absolutely integrable; its Fourier integral is not guaranteed to converge");
    std::vector<Complex> out;
    out.reserve(omegas.size());
    for (double w : omegas)
        out.push_back(sig.impulse_weight + fourier_side(sig, Side::Causal, w) + fourier_side(sig, Side::Anticausal, w));
    return out;
}

}  // namespace ltistab
