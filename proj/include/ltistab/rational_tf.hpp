#pragma once

#include <vector>

#include "ltistab/polynomial.hpp"

namespace ltistab {

/// Proper rational transfer function H(s) = num(s) / den(s).
///
/// Always held in canonical form: the denominator is monic and the overall
/// scale lives in the numerator. Construct through tf_new or
/// TransferFunction::make; both reject a zero denominator and an improper
/// ratio (deg num > deg den).
class TransferFunction {
public:
    static TransferFunction make(Polynomial num, Polynomial den);
    static TransferFunction gain(double k);

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    int order() const noexcept { return den_.degree(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_biproper() const noexcept { return !num_.is_zero() && num_.degree() == den_.degree(); }

    friend bool operator==(const TransferFunction&, const TransferFunction&) = default;

private:
    TransferFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

struct PoleZeroForm {
    double gain = 0.0;
    RootSet zeros;
    RootSet poles;
};

TransferFunction tf_new(Polynomial num, Polynomial den);

RootSet tf_poles(const TransferFunction& h, double tol = kDefaultRootTolerance);
RootSet tf_zeros(const TransferFunction& h, double tol = kDefaultRootTolerance);

PoleZeroForm to_pole_zero(const TransferFunction& h, double tol = kDefaultRootTolerance);
TransferFunction from_pole_zero(const PoleZeroForm& pz);

/// num(s)/den(s). Throws Error{EvaluationAtPole} within 1e-12 of a pole.
Complex tf_eval(const TransferFunction& h, Complex s);

struct FrequencyPoint {
    double omega = 0.0;
    Complex value;
    double magnitude = 0.0;
    double phase_deg = 0.0;
};

/// Mechanical evaluation at s = j*omega. Whether that is a legitimate Fourier
/// transform is decided in the transforms module.
std::vector<FrequencyPoint> freq_response(const TransferFunction& h, const std::vector<double>& omegas);

TransferFunction series(const TransferFunction& h1, const TransferFunction& h2);
TransferFunction parallel(const TransferFunction& h1, const TransferFunction& h2);

/// Negative unity feedback around `forward`: n / (d + n).
TransferFunction feedback_unity(const TransferFunction& forward);

/// Removes pole/zero pairs closer than tol * (1 + |pole|).
TransferFunction cancel_common(const TransferFunction& h, double tol = kDefaultRootTolerance);

}  // namespace ltistab
