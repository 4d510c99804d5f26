#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ltistab/rational_tf.hpp"
#include "ltistab/signals.hpp"
#include "ltistab/transforms.hpp"

namespace ltistab {

enum class Verdict { Stable, Marginal, Unstable };
enum class Route { Poles, Roc, NumericL1 };

/// Width of the band |Re p| <= epsilon treated as "on the axis".
inline constexpr double kDefaultMarginalBand = 1e-9;

/// Settling-time estimate = kSettlingConstant / |spectral abscissa|
/// (2% band, dominant real pole).
inline constexpr double kSettlingConstant = 4.0;

struct StabilityReport {
    Verdict verdict = Verdict::Stable;
    /// max Re over the poles, -inf without poles
    double spectral_abscissa = -std::numeric_limits<double>::infinity();
    /// absent when the system has no poles
    std::optional<Complex> dominant_pole;
    int dominant_multiplicity = 0;
    /// 1/|abscissa| when stable, +inf otherwise, 0 without poles
    double decay_time_constant = 0.0;
    double settling_time_estimate = 0.0;
    Route route = Route::Poles;
};

struct GainRange {
    struct BoundaryOpen {
        bool lower = true;
        bool upper = true;
    };

    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    BoundaryOpen boundary_open;

    bool contains(double k) const noexcept;
};

struct NumericVerdict {
    Verdict verdict = Verdict::Stable;
    std::optional<double> l1_norm;
};

struct BoundWitness {
    double max_abs_output = 0.0;
    double bound = 0.0;
    int trials = 0;
};

struct GainSweepEntry {
    double gain = 0.0;
    StabilityReport report;
};

/// Causal pole test: Stable when every pole has Re p < -epsilon, Unstable when
/// any pole has Re p > epsilon, Marginal otherwise. Repeated poles inside the
/// band stay Marginal; dominant_multiplicity lets callers tell them apart.
StabilityReport bibo_from_poles(const TransferFunction& h, double epsilon = kDefaultMarginalBand);

/// Stable iff the strip contains the band [-epsilon, epsilon] around the
/// imaginary axis; Marginal when a strip bound lies inside that band.
Verdict bibo_from_roc(const LaplaceResult& res, double epsilon = kDefaultMarginalBand);

/// Stable iff the impulse response is absolutely integrable.
NumericVerdict bibo_numeric(const ExpPolySignal& impulse_response);

/// x(t) = sgn(h(-t)) on the reversed grid, so that the convolution with h at
/// t = 0 equals dt * sum |h|.
SampledSignal adversarial_input(const SampledSignal& h);

/// Drives `trials` random inputs with |x| <= bound_x through h and checks
/// max |y| <= bound_x * dt * sum |h|. Deterministic for a fixed seed.
/// Error{BoundViolated} means the convolution is wrong, not the system.
BoundWitness bound_witness(const SampledSignal& h, int trials, double bound_x, std::uint64_t seed);

/// Plant 1/(s+a) under proportional gain K and unity negative feedback is
/// stable exactly for K > -a.
GainRange gain_range_first_order(double a);

/// Closes the loop around K * plant for each K on the grid and reports the
/// pole verdict. Results follow the grid order.
std::vector<GainSweepEntry> gain_sweep(const TransferFunction& plant, const std::vector<double>& gains,
                                       double epsilon = kDefaultMarginalBand);

/// kSettlingConstant / |spectral abscissa|; Error{NotStable} unless stable.
double settling_time(const StabilityReport& report);

/// Closed-loop impulse response K e^{-(K+a)t} u(t) of plant 1/(s+a) under
/// proportional gain K.
ExpPolySignal first_order_closed_loop_impulse(double k, double a);

}  // namespace ltistab
