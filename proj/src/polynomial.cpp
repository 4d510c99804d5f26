#include "ltistab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "complex_poly.hpp"
#include "ltistab/error.hpp"

namespace ltistab {

namespace {

constexpr int kMaxAberthIterations = 200;
constexpr double kAberthStep = 1e-13;
constexpr int kPolishIterations = 5;
constexpr double kEps = std::numeric_limits<double>::epsilon();

Complex horner(std::span<const double> a, Complex z) noexcept {
    Complex acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// sum |a_k| |z|^k, the scale of the rounding error in horner(a, z)
double horner_scale(std::span<const double> a, double r) noexcept {
    double acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

std::vector<double> derivative_coeffs(std::span<const double> a) {
    std::vector<double> d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(static_cast<double>(k) * a[k]);
    return d;
}

// Simultaneous Aberth-Ehrlich iteration on a polynomial with a[0] != 0.
std::vector<Complex> aberth(std::span<const double> a) {
    const int n = static_cast<int>(a.size()) - 1;
    const auto da = derivative_coeffs(a);

    const double radius = std::pow(std::abs(a.front() / a.back()), 1.0 / n);
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n + 0.7;
        z[k] = std::polar(radius, angle);
    }

    std::vector<bool> converged(n, false);
    for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            if (converged[i]) continue;
            const Complex pz = horner(a, z[i]);
            if (pz == 0.0) {
                converged[i] = true;
                continue;
            }
            const Complex newton = horner(da, z[i]) / pz;
            Complex repulsion = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i && z[i] != z[j]) repulsion += 1.0 / (z[i] - z[j]);
            Complex denom = newton - repulsion;
            if (denom == 0.0) denom = 1.0;
            const Complex step = 1.0 / denom;
            z[i] -= step;
            if (std::abs(step) < kAberthStep * (1.0 + std::abs(z[i])))
                converged[i] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }
    return z;
}

void newton_polish(std::span<const double> a, std::vector<Complex>& z) {
    const auto da = derivative_coeffs(a);
    for (auto& root : z) {
        double residual = std::abs(horner(a, root));
        for (int it = 0; it < kPolishIterations && residual > 0.0; ++it) {
            const Complex d = horner(da, root);
            if (d == 0.0) break;
            const Complex candidate = root - horner(a, root) / d;
            const double r = std::abs(horner(a, candidate));
            if (!(r < residual)) break;
            root = candidate;
            residual = r;
        }
    }
}

// Radius of a disk around z[i] that contains a true root, from the
// Weierstrass correction with the residual floored at the rounding level.
std::vector<double> inclusion_radii(std::span<const double> a, const std::vector<Complex>& z) {
    const std::size_t n = z.size();
    const double gamma = 2.0 * static_cast<double>(n + 1) * kEps;
    std::vector<double> radii(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double residual = std::max(std::abs(horner(a, z[i])),
                                         gamma * horner_scale(a, std::abs(z[i])));
        double prod = std::abs(a.back());
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && z[j] != z[i]) prod *= std::abs(z[i] - z[j]);
        radii[i] = prod > 0.0 ? static_cast<double>(n) * residual / prod
                              : std::numeric_limits<double>::infinity();
    }
    return radii;
}

// A cluster of m iterates around an m-fold root is refined by Newton on the
// (m-1)-th derivative, where the root is simple.
Complex refine_multiple(std::span<const double> a, Complex centre, int m, double spread) {
    std::vector<double> dm(a.begin(), a.end());
    for (int k = 1; k < m && dm.size() > 1; ++k) dm = derivative_coeffs(dm);
    const auto d1 = derivative_coeffs(dm);
    Complex z = centre;
    double residual = std::abs(horner(dm, z));
    for (int it = 0; it < 2 * kPolishIterations && residual > 0.0; ++it) {
        const Complex d = horner(d1, z);
        if (d == 0.0) break;
        const Complex candidate = z - horner(dm, z) / d;
        const double r = std::abs(horner(dm, candidate));
        if (!(r < residual)) break;
        z = candidate;
        residual = r;
    }
    return std::abs(z - centre) <= spread ? z : centre;
}

// Solves the k x k system a x = b in place by Gaussian elimination with partial
// pivoting. Returns false when a pivot vanishes.
bool solve_dense(std::vector<Complex>& a, std::vector<Complex>& b, std::size_t k) {
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < k; ++row)
            if (std::abs(a[row * k + col]) > std::abs(a[pivot * k + col])) pivot = row;
        if (a[pivot * k + col] == 0.0) return false;
        if (pivot != col) {
            for (std::size_t j = 0; j < k; ++j) std::swap(a[col * k + j], a[pivot * k + j]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t row = col + 1; row < k; ++row) {
            const Complex f = a[row * k + col] / a[col * k + col];
            for (std::size_t j = col; j < k; ++j) a[row * k + j] -= f * a[col * k + j];
            b[row] -= f * b[col];
        }
    }
    for (std::size_t col = k; col-- > 0;) {
        for (std::size_t j = col + 1; j < k; ++j) b[col] -= a[col * k + j] * b[j];
        b[col] /= a[col * k + col];
    }
    return true;
}

// Gauss-Newton on the map from distinct roots with fixed multiplicities to the
// monic coefficients of a, weighted by 1 / max(1, |coefficient|).
void refine_structured(std::span<const double> a, std::vector<Root>& roots, const std::vector<double>& spread) {
    const std::size_t n = a.size() - 1;
    const std::size_t k = roots.size();
    std::vector<double> target(n), weight(n);
    for (std::size_t i = 0; i < n; ++i) {
        target[i] = a[i] / a[n];
        weight[i] = 1.0 / std::max(1.0, std::abs(target[i]));
    }

    std::vector<Complex> z(k);
    for (std::size_t j = 0; j < k; ++j) z[j] = roots[j].location;
    auto misfit = [&](const std::vector<Complex>& at, std::vector<Complex>& r) {
        detail::CPoly prod{1.0};
        for (std::size_t j = 0; j < k; ++j) prod = detail::cpoly_mul(prod, detail::cpoly_linear_power(at[j], roots[j].multiplicity));
        double norm = 0.0;
        r.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = weight[i] * (prod[i] - target[i]);
            norm += std::norm(r[i]);
        }
        return norm;
    };

    std::vector<Complex> r;
    double current = misfit(z, r);
    for (int it = 0; it < 2 * kPolishIterations && current > 0.0; ++it) {
        std::vector<Complex> jac(n * k);
        for (std::size_t j = 0; j < k; ++j) {
            detail::CPoly col{-static_cast<double>(roots[j].multiplicity)};
            for (std::size_t i = 0; i < k; ++i)
                col = detail::cpoly_mul(col, detail::cpoly_linear_power(z[i], roots[i].multiplicity - (i == j ? 1 : 0)));
            for (std::size_t i = 0; i < n; ++i) jac[i * k + j] = weight[i] * col[i];
        }
        std::vector<Complex> normal(k * k, 0.0), rhs(k, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < k; ++p) {
                const Complex jp = std::conj(jac[i * k + p]);
                rhs[p] -= jp * r[i];
                for (std::size_t q = 0; q < k; ++q) normal[p * k + q] += jp * jac[i * k + q];
            }
        if (!solve_dense(normal, rhs, k)) break;
        std::vector<Complex> next(k);
        for (std::size_t j = 0; j < k; ++j) next[j] = z[j] + rhs[j];
        std::vector<Complex> r_next;
        const double candidate = misfit(next, r_next);
        if (!(candidate < current)) break;
        z = std::move(next);
        r = std::move(r_next);
        current = candidate;
    }
    for (std::size_t j = 0; j < k; ++j)
        if (std::abs(z[j] - roots[j].location) > spread[j]) return;
    for (std::size_t j = 0; j < k; ++j) roots[j].location = z[j];
}

struct DisjointSet {
    std::vector<std::size_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
};

void enforce_conjugate_symmetry(std::vector<Root>& roots, double tol) {
    for (auto& r : roots)
        if (std::abs(r.location.imag()) <= tol * std::max(1.0, std::abs(r.location)))
            r.location = {r.location.real(), 0.0};

    std::vector<bool> paired(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (paired[i] || roots[i].location.imag() <= 0.0) continue;
        std::size_t best = roots.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (paired[j] || roots[j].location.imag() >= 0.0) continue;
            if (roots[j].multiplicity != roots[i].multiplicity) continue;
            const double d = std::abs(roots[j].location - std::conj(roots[i].location));
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        if (best == roots.size()) continue;
        const double re = 0.5 * (roots[i].location.real() + roots[best].location.real());
        const double im = 0.5 * (roots[i].location.imag() - roots[best].location.imag());
        roots[i].location = {re, im};
        roots[best].location = {re, -im};
        paired[i] = paired[best] = true;
    }
}

}  // namespace

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> ascending) : coeffs_(ascending) { trim(); }

Polynomial Polynomial::constant(double c) { return Polynomial(std::vector<double>{c}); }

Polynomial Polynomial::monomial(double c, int power) {
    std::vector<double> v(static_cast<std::size_t>(power) + 1, 0.0);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::norm_inf() const noexcept {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::norm_1() const noexcept {
    double m = 0.0;
    for (double c : coeffs_) m += std::abs(c);
    return m;
}

Polynomial Polynomial::derivative() const { return Polynomial(derivative_coeffs(coeffs_)); }

Polynomial Polynomial::scaled(double factor) const {
    std::vector<double> v(coeffs_);
    for (double& c : v) c *= factor;
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Complex poly_eval(const Polynomial& p, Complex s) noexcept { return horner(p.coeffs(), s); }

int RootSet::total_multiplicity() const noexcept {
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    return total;
}

std::vector<Complex> RootSet::expanded() const {
    std::vector<Complex> out;
    for (const auto& r : roots)
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.location);
    return out;
}

RootSet poly_roots(const Polynomial& p, double tol) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial is identically zero");
    if (p.degree() == 0) throw Error(ErrorCode::DegreeZero, "constant polynomial has no roots");

    const auto all = p.coeffs();
    std::size_t zero_roots = 0;
    while (all[zero_roots] == 0.0) ++zero_roots;
    const auto reduced = all.subspan(zero_roots);

    std::vector<Complex> z;
    std::vector<double> radii;
    if (reduced.size() > 1) {
        z = aberth(reduced);
        newton_polish(reduced, z);
        radii = inclusion_radii(reduced, z);
    }
    // Exact zero roots join as points with no uncertainty.
    for (std::size_t k = 0; k < zero_roots; ++k) {
        z.emplace_back(0.0, 0.0);
        radii.push_back(0.0);
    }

    const std::size_t n = z.size();
    DisjointSet clusters(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::abs(z[i] - z[j]);
            const double scale = std::max({1.0, std::abs(z[i]), std::abs(z[j])});
            const double cap = 1e-2 * scale;
            const double overlap = std::min(radii[i], cap) + std::min(radii[j], cap);
            if (d <= tol * scale || d <= overlap) clusters.unite(i, j);
        }
    }

    std::vector<Root> roots;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = clusters.find(i);
        if (slot[c] == n) {
            slot[c] = roots.size();
            roots.push_back({0.0, 0});
        }
        auto& r = roots[slot[c]];
        r.location += z[i];
        r.multiplicity += 1;
    }
    std::vector<double> spread(roots.size(), 0.0);
    for (auto& r : roots) r.location /= static_cast<double>(r.multiplicity);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = slot[clusters.find(i)];
        const double scale = std::max(1.0, std::abs(roots[k].location));
        spread[k] = std::max({spread[k], 2.0 * std::abs(z[i] - roots[k].location), tol * scale,
                              std::min(radii[i], 1e-2 * scale)});
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        auto& r = roots[k];
        if (r.multiplicity < 2 || r.location == Complex(0.0, 0.0)) continue;
        r.location = refine_multiple(reduced, r.location, r.multiplicity, spread[k]);
    }
    const bool repeated = std::any_of(roots.begin(), roots.end(), [](const Root& r) { return r.multiplicity > 1; });
    if (repeated && zero_roots == 0) refine_structured(reduced, roots, spread);

    enforce_conjugate_symmetry(roots, tol);
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return RootSet{std::move(roots)};
}

Polynomial roots_to_poly(const RootSet& roots, double leading) {
    detail::CPoly acc{leading};
    for (const auto& r : roots.roots)
        acc = detail::cpoly_mul(acc, detail::cpoly_linear_power(r.location, r.multiplicity));

    double scale = 0.0;
    for (const auto& c : acc) scale = std::max(scale, std::abs(c));
    std::vector<double> real(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (std::abs(acc[k].imag()) > 1e-10 * std::max(1.0, scale))
            throw Error(ErrorCode::NonConjugateRoots,
                        "root set is not closed under conjugation; product has complex coefficients");
        real[k] = acc[k].real();
    }
    return Polynomial(std::move(real));
}

}  // namespace ltistab
