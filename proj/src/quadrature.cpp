#include "ltistab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace ltistab {

namespace {

template <typename T, typename F>
T simpson_step(const F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const T flm = f(lm);
    const T frm = f(rm);
    const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T delta = left + right - whole;
    const double noise = 1e-14 * (std::abs(left) + std::abs(right));
    if (depth <= 0 || std::abs(delta) <= std::max(15.0 * tol, noise) || m <= a || b <= m)
        return left + right + delta / 15.0;
    return simpson_step<T>(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step<T>(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename T, typename F>
T integrate(const F& f, double a, double b, double tol, int panels, int max_depth) {
    if (!(b > a)) return T{};
    panels = std::max(panels, 1);
    const double h = (b - a) / panels;
    const double panel_tol = tol / panels;
    T total{};
    double x0 = a;
    T f0 = f(a);
    for (int k = 0; k < panels; ++k) {
        const double x1 = (k + 1 == panels) ? b : a + (k + 1) * h;
        const double xm = 0.5 * (x0 + x1);
        const T fm = f(xm);
        const T f1 = f(x1);
        const T whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        total += simpson_step<T>(f, x0, x1, f0, fm, f1, whole, panel_tol, max_depth);
        x0 = x1;
        f0 = f1;
    }
    return total;
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int panels,
                        int max_depth) {
    return integrate<double>(f, a, b, tol, panels, max_depth);
}

std::complex<double> adaptive_simpson_complex(const std::function<std::complex<double>(double)>& f, double a,
                                              double b, double tol, int panels, int max_depth) {
    return integrate<std::complex<double>>(f, a, b, tol, panels, max_depth);
}

}  // namespace ltistab
