#pragma once

#include <complex>
#include <functional>

namespace ltistab {

/// Adaptive Simpson quadrature of f over [a, b].
///
/// The interval is first cut into `panels` equal pieces (useful when the
/// integrand oscillates or has kinks), then each piece is refined recursively
/// until the Richardson estimate meets its share of `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int panels = 16, int max_depth = 32);

std::complex<double> adaptive_simpson_complex(const std::function<std::complex<double>(double)>& f,
                                              double a, double b, double tol, int panels = 16,
                                              int max_depth = 32);

}  // namespace ltistab
