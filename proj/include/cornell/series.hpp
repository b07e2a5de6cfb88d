#pragma once

#include <cstddef>
#include <vector>

// Power-series solution R(xi) = sum_i c_i xi^{i+l+1} of the dimensionless
// radial equation
//
//   [-d^2/dxi^2 + l(l+1)/xi^2 + xi - a/xi] R = lambda R,
//
// with the coefficients produced three ways: a scalar recurrence, the
// banded-determinant ratio (-1)^i det A_i / det B_i, and a finite continued
// fraction whose numerator form equals det A_i.

namespace cornell::series {

struct SeriesParams {
    double a = 0.0;       ///< dimensionless Coulomb strength, a >= 0
    int l = 0;            ///< orbital quantum number, l >= 0
    double lambda = 0.0;  ///< candidate eigenvalue

    /// Throws DomainError unless a >= 0 (finite), l >= 0, lambda finite.
    void validate() const;
};

struct SeriesCoefficients {
    std::vector<double> c;  ///< c[0] == 1
    SeriesParams params;

    std::size_t count() const noexcept { return c.size(); }
};

/// Default number of retained terms.
inline constexpr std::size_t kDefaultTerms = 120;

/// The first `count` coefficients c[0..count-1] from
///   c[j] j (j + 2l + 1) = -a c[j-1] - lambda c[j-2] + c[j-3],  c[0] = 1.
SeriesCoefficients coefficients_by_recurrence(const SeriesParams& params,
                                              std::size_t count = kDefaultTerms);

/// det B_i = i! prod_{j=1..i} (2l + j + 1). Throws OverflowError (carrying
/// the index j at which the running product overflowed) when out of range.
double det_b(int i, int l);

/// Determinant of the i x i banded matrix with superdiagonal p(p + 1 + 2l),
/// diagonal a, subdiagonal lambda and second subdiagonal -1, evaluated by the
/// cofactor recurrence along the last row.
double det_a_matrix(int i, const SeriesParams& params);

struct ContinuedFractionResult {
    double value = 0.0;
    /// True when a partial denominator vanished and the matrix recurrence was
    /// used instead.
    bool fallback = false;
};

/// det A_i from the finite continued fraction a + K_{s=2}^{i} a_s / a,
/// multiplied through by its partial denominators.
ContinuedFractionResult det_a_cf(int i, const SeriesParams& params);

struct SeriesValue {
    double value = 0.0;
    double last_term = 0.0;   ///< |c[N-1] xi^{N+l}|
    double max_term = 0.0;    ///< max_i |c[i] xi^{i+l+1}|
    bool converged = false;   ///< last_term <= kConvergenceRatio * max_term
};

inline constexpr double kConvergenceRatio = 1e-10;

/// Truncated sum sum_i c[i] xi^{i+l+1} by Horner's scheme. xi must be > 0.
SeriesValue radial_wavefunction(const SeriesCoefficients& coeffs, double xi);

struct SeriesDerivatives {
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
};

/// R, R' and R'' of the truncated series, differentiated term by term.
SeriesDerivatives radial_derivatives(const SeriesCoefficients& coeffs, double xi);

/// Pointwise residual -R'' + [l(l+1)/xi^2 + xi - a/xi - lambda] R of the
/// truncated series (not normalized).
double ode_residual(const SeriesCoefficients& coeffs, double xi);

}  // namespace cornell::series
