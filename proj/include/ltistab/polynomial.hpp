#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ltistab {

using Complex = std::complex<double>;

/// Real-coefficient polynomial in s. Coefficients are stored in ascending
/// powers and kept trimmed: the leading coefficient is nonzero unless the
/// polynomial is identically zero, in which case the coefficient list is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> ascending);
    Polynomial(std::initializer_list<double> ascending);

    static Polynomial constant(double c);
    static Polynomial monomial(double c, int power);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of s^k; zero past the degree.
    double operator[](std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }

    double norm_inf() const noexcept;
    double norm_1() const noexcept;

    Polynomial derivative() const;
    Polynomial scaled(double factor) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator-(const Polynomial& p) { return p.scaled(-1.0); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() noexcept;

    std::vector<double> coeffs_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Horner evaluation at a complex point.
Complex poly_eval(const Polynomial& p, Complex s) noexcept;

struct Root {
    Complex location;
    int multiplicity = 1;
};

/// Roots with multiplicities, ordered by ascending real part then imaginary part.
struct RootSet {
    std::vector<Root> roots;

    int total_multiplicity() const noexcept;
    bool empty() const noexcept { return roots.empty(); }
    std::size_t size() const noexcept { return roots.size(); }
    /// Each root repeated by its multiplicity.
    std::vector<Complex> expanded() const;
};

inline constexpr double kDefaultRootTolerance = 1e-7;

/// All complex roots of p with multiplicities.
///
/// Roots are found by simultaneous Aberth-Ehrlich iteration and polished by
/// Newton steps on the full polynomial. Two roots are merged into one cluster
/// (centroid location, summed multiplicity) when they lie within
/// tol * max(1, |root|) of each other, or when their floating-point inclusion
/// disks overlap, which is how a numerically split multiple root shows up.
/// Conjugate symmetry of the result is enforced.
///
/// Throws Error{ZeroPolynomial} for p == 0 and Error{DegreeZero} for constants.
RootSet poly_roots(const Polynomial& p, double tol = kDefaultRootTolerance);

/// leading * prod (s - r_i)^m_i. Complex roots must come in conjugate pairs of
/// equal multiplicity (Error{NonConjugateRoots} otherwise).
Polynomial roots_to_poly(const RootSet& roots, double leading = 1.0);

}  // namespace ltistab
