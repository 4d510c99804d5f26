#pragma once

#include <limits>
#include <vector>

#include "ltistab/rational_tf.hpp"
#include "ltistab/signals.hpp"

namespace ltistab {

/// Region of convergence: the open vertical strip lower < Re s < upper.
/// Bounds may be infinite. An empty strip is never constructed; asking for
/// one throws Error{EmptyRoc}.
class Roc {
public:
    static Roc make(double lower, double upper);
    static Roc entire_plane() { return Roc(-kInf, kInf); }
    static Roc right_of(double sigma) { return Roc(sigma, kInf); }
    static Roc left_of(double sigma) { return Roc(-kInf, sigma); }

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

    bool contains(double sigma) const noexcept { return lower_ < sigma && sigma < upper_; }
    bool contains_imaginary_axis() const noexcept { return contains(0.0); }
    bool is_entire_plane() const noexcept { return lower_ == -kInf && upper_ == kInf; }

    Roc intersect(const Roc& other) const;

    friend bool operator==(const Roc&, const Roc&) = default;

private:
    static constexpr double kInf = std::numeric_limits<double>::infinity();
    Roc(double lower, double upper) : lower_(lower), upper_(upper) {}

    double lower_;
    double upper_;
};

/// A rational transform together with its strip; the pair identifies the
/// time signal uniquely.
struct LaplaceResult {
    TransferFunction tf;
    Roc roc;
};

/// residues[j-1] is the coefficient of 1 / (s - pole)^j.
struct PartialFractionEntry {
    Complex pole;
    int multiplicity = 1;
    std::vector<Complex> residues;
};

struct PartialFractions {
    std::vector<PartialFractionEntry> entries;
    double direct = 0.0;

    /// direct + sum r_j / (s - p)^j
    Complex evaluate(Complex s) const;
};

/// Bilateral Laplace transform of an exponential-polynomial signal.
/// Throws Error{EmptyRoc} when the per-term strips do not intersect and
/// Error{NonRealSignal} when the terms are not conjugate-closed.
LaplaceResult laplace(const ExpPolySignal& sig);

/// Residues come from exact polynomial algebra around each pole (Taylor shift
/// plus power-series division), not from numeric differentiation.
PartialFractions partial_fractions(const TransferFunction& h, double tol = kDefaultRootTolerance);

/// Inverse transform selected by the strip: poles left of the strip become
/// causal terms, poles right of it anticausal ones, the direct term becomes an
/// impulse.
ExpPolySignal inverse_laplace(const TransferFunction& h, const Roc& roc);

/// Right half-plane beyond the rightmost pole; the whole plane without poles.
Roc roc_causal(const TransferFunction& h);

/// H(j omega) for a transform whose strip contains the imaginary axis.
class FourierTransform {
public:
    Complex operator()(double omega) const;
    std::vector<Complex> evaluate(const std::vector<double>& omegas) const;
    const TransferFunction& tf() const noexcept { return tf_; }

private:
    friend FourierTransform fourier_from_laplace(const LaplaceResult& res);
    explicit FourierTransform(TransferFunction tf) : tf_(std::move(tf)) {}

    TransferFunction tf_;
};

/// Throws Error{FourierDoesNotExist} unless roc.lower < 0 < roc.upper.
FourierTransform fourier_from_laplace(const LaplaceResult& res);

/// Direct quadrature of int x(t) e^{-j omega t} dt (tolerance 1e-7).
/// Throws Error{NotAbsolutelyIntegrable} for signals that are not in L1.
std::vector<Complex> fourier_numeric(const ExpPolySignal& sig, const std::vector<double>& omegas);

}  // namespace ltistab
