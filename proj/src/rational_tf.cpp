#include "ltistab/rational_tf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ltistab/error.hpp"

namespace ltistab {

namespace {

constexpr double kPoleProximity = 1e-12;

bool near_pole(const RootSet& poles, Complex s) {
    return std::any_of(poles.roots.begin(), poles.roots.end(), [&](const Root& p) {
        return std::abs(s - p.location) <= kPoleProximity * std::max(1.0, std::abs(p.location));
    });
}

Complex eval_checked(const TransferFunction& h, const RootSet& poles, Complex s) {
    const Complex d = poly_eval(h.den(), s);
    if (d == 0.0 || near_pole(poles, s))
        throw Error(ErrorCode::EvaluationAtPole, "transfer function evaluated at a pole");
    return poly_eval(h.num(), s) / d;
}

}  // namespace

TransferFunction TransferFunction::make(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is identically zero");
    if (!num.is_zero() && num.degree() > den.degree())
        throw Error(ErrorCode::ImproperTransferFunction,
                    "improper transfer function: numerator degree " + std::to_string(num.degree()) +
                        " exceeds denominator degree " + std::to_string(den.degree()));
    const double lead = den.leading();
    if (lead != 1.0) {
        auto divide = [lead](const Polynomial& p) {
            std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
            for (double& v : c) v /= lead;
            return Polynomial(std::move(c));
        };
        num = divide(num);
        den = divide(den);
    }
    return TransferFunction(std::move(num), std::move(den));
}

TransferFunction TransferFunction::gain(double k) {
    return make(Polynomial::constant(k), Polynomial::constant(1.0));
}

TransferFunction tf_new(Polynomial num, Polynomial den) {
    return TransferFunction::make(std::move(num), std::move(den));
}

RootSet tf_poles(const TransferFunction& h, double tol) {
    if (h.den().degree() < 1) return {};
    return poly_roots(h.den(), tol);
}

RootSet tf_zeros(const TransferFunction& h, double tol) {
    if (h.num().degree() < 1) return {};
    return poly_roots(h.num(), tol);
}

PoleZeroForm to_pole_zero(const TransferFunction& h, double tol) {
    return PoleZeroForm{h.num().leading(), tf_zeros(h, tol), tf_poles(h, tol)};
}

TransferFunction from_pole_zero(const PoleZeroForm& pz) {
    return tf_new(roots_to_poly(pz.zeros, pz.gain), roots_to_poly(pz.poles, 1.0));
}

Complex tf_eval(const TransferFunction& h, Complex s) {
    return eval_checked(h, tf_poles(h), s);
}

std::vector<FrequencyPoint> freq_response(const TransferFunction& h, const std::vector<double>& omegas) {
    const RootSet poles = tf_poles(h);
    std::vector<FrequencyPoint> out;
    out.reserve(omegas.size());
    for (double w : omegas) {
        const Complex v = eval_checked(h, poles, Complex(0.0, w));
        out.push_back({w, v, std::abs(v), std::arg(v) * 180.0 / std::numbers::pi});
    }
    return out;
}

TransferFunction series(const TransferFunction& h1, const TransferFunction& h2) {
    return tf_new(h1.num() * h2.num(), h1.den() * h2.den());
}

TransferFunction parallel(const TransferFunction& h1, const TransferFunction& h2) {
    return tf_new(h1.num() * h2.den() + h2.num() * h1.den(), h1.den() * h2.den());
}

TransferFunction feedback_unity(const TransferFunction& forward) {
    const Polynomial& n = forward.num();
    const Polynomial& d = forward.den();
    const Polynomial closed = d + n;
    const double scale = d.norm_inf() + n.norm_inf();
    if (closed.is_zero() || closed.norm_inf() <= 1e-14 * scale)
        throw Error(ErrorCode::DegenerateLoop, "degenerate loop: 1 + forward(s) is identically zero");
    return tf_new(n, closed);
}

TransferFunction cancel_common(const TransferFunction& h, double tol) {
    if (h.is_zero()) return h;
    const double root_tol = std::min(tol, kDefaultRootTolerance);
    PoleZeroForm pz = to_pole_zero(h, root_tol);

    bool cancelled = false;
    for (auto& z : pz.zeros.roots) {
        while (z.multiplicity > 0) {
            auto best = pz.poles.roots.end();
            double best_dist = std::numeric_limits<double>::infinity();
            for (auto it = pz.poles.roots.begin(); it != pz.poles.roots.end(); ++it) {
                if (it->multiplicity == 0) continue;
                const double d = std::abs(z.location - it->location);
                if (d <= tol * (1.0 + std::abs(it->location)) && d < best_dist) {
                    best_dist = d;
                    best = it;
                }
            }
            if (best == pz.poles.roots.end()) break;
            const int k = std::min(z.multiplicity, best->multiplicity);
            z.multiplicity -= k;
            best->multiplicity -= k;
            cancelled = true;
        }
    }
    if (!cancelled) return h;

    auto drop_empty = [](RootSet& rs) {
        std::erase_if(rs.roots, [](const Root& r) { return r.multiplicity == 0; });
    };
    drop_empty(pz.zeros);
    drop_empty(pz.poles);
    return from_pole_zero(pz);
}

}  // namespace ltistab
