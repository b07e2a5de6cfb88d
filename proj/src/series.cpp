#include "cornell/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cornell/errors.hpp"

namespace cornell::series {
namespace {

// Superdiagonal entry p (p + 1 + 2l) of the banded matrix; also the
// recurrence denominator j (j + 2l + 1) at j = p.
double super_diag(int p, int l) { return static_cast<double>(p) * (p + 1 + 2 * l); }

void require_index(int i, const char* what) {
    if (i < 1) {
        throw DomainError(std::string(what) + ": index must be >= 1, got " + std::to_string(i));
    }
}

}  // namespace

void SeriesParams::validate() const {
    if (!std::isfinite(a) || a < 0.0) throw DomainError("series: a must be finite and >= 0");
    if (l < 0) throw DomainError("series: l must be >= 0");
    if (!std::isfinite(lambda)) throw DomainError("series: lambda must be finite");
}

SeriesCoefficients coefficients_by_recurrence(const SeriesParams& params, std::size_t count) {
    params.validate();
    if (count == 0) throw DomainError("series: coefficient count must be >= 1");

    SeriesCoefficients out{std::vector<double>(count, 0.0), params};
    auto& c = out.c;
    c[0] = 1.0;
    for (std::size_t j = 1; j < count; ++j) {
        const double cm1 = c[j - 1];
        const double cm2 = j >= 2 ? c[j - 2] : 0.0;
        const double cm3 = j >= 3 ? c[j - 3] : 0.0;
        c[j] = (-params.a * cm1 - params.lambda * cm2 + cm3) /
               super_diag(static_cast<int>(j), params.l);
    }
    return out;
}

double det_b(int i, int l) {
    require_index(i, "det_b");
    if (l < 0) throw DomainError("det_b: l must be >= 0");
    double prod = 1.0;
    for (int j = 1; j <= i; ++j) {
        prod *= super_diag(j, l);
        if (!std::isfinite(prod)) {
            throw OverflowError("det_b: product overflowed at index " + std::to_string(j), j);
        }
    }
    return prod;
}

double det_a_matrix(int i, const SeriesParams& params) {
    require_index(i, "det_a_matrix");
    params.validate();
    // D_i = a D_{i-1} - lambda s_{i-1} D_{i-2} - s_{i-1} s_{i-2} D_{i-3}, D_0 = 1.
    double d3 = 0.0;  // D_{k-3}
    double d2 = 0.0;  // D_{k-2}
    double d1 = 1.0;  // D_{k-1}
    for (int k = 1; k <= i; ++k) {
        const double s1 = super_diag(k - 1, params.l);
        const double s2 = super_diag(k - 2, params.l);
        const double dk = params.a * d1 - params.lambda * s1 * d2 - s1 * s2 * d3;
        d3 = d2;
        d2 = d1;
        d1 = dk;
    }
    return d1;
}

ContinuedFractionResult det_a_cf(int i, const SeriesParams& params) {
    require_index(i, "det_a_cf");
    params.validate();
    const int l = params.l;

    // Partial denominators u_m, evaluated bottom-up:
    //   u_i = a,   u_{m-1} = a + a_m / u_m,
    //   a_m = -s_{m-1} (s_m / u_{m+1} + lambda)   (the s_m / u_{m+1} term absent at m = i).
    // Clearing every denominator leaves det A_i = prod_m u_m.
    std::vector<double> u(static_cast<std::size_t>(i) + 2, 0.0);
    u[static_cast<std::size_t>(i)] = params.a;
    for (int m = i; m >= 2; --m) {
        const double um = u[static_cast<std::size_t>(m)];
        if (um == 0.0) {
            return {det_a_matrix(i, params), true};
        }
        const double inner = m < i ? super_diag(m, l) / u[static_cast<std::size_t>(m) + 1] : 0.0;
        const double a_m = -super_diag(m - 1, l) * (inner + params.lambda);
        u[static_cast<std::size_t>(m) - 1] = params.a + a_m / um;
    }
    double prod = 1.0;
    for (int m = 1; m <= i; ++m) prod *= u[static_cast<std::size_t>(m)];
    if (!std::isfinite(prod)) return {det_a_matrix(i, params), true};
    return {prod, false};
}

SeriesValue radial_wavefunction(const SeriesCoefficients& coeffs, double xi) {
    if (!(xi > 0.0)) throw DomainError("radial_wavefunction: xi must be > 0");
    if (coeffs.c.empty()) throw DomainError("radial_wavefunction: empty coefficient sequence");

    const int l = coeffs.params.l;
    const double lead = std::pow(xi, l + 1);
    double acc = 0.0;
    for (auto it = coeffs.c.rbegin(); it != coeffs.c.rend(); ++it) {
        acc = acc * xi + *it;
    }

    SeriesValue out;
    out.value = acc * lead;
    double power = lead;
    for (double ci : coeffs.c) {
        out.max_term = std::max(out.max_term, std::abs(ci * power));
        out.last_term = std::abs(ci * power);
        power *= xi;
    }
    out.converged = out.last_term <= kConvergenceRatio * out.max_term;
    return out;
}

SeriesDerivatives radial_derivatives(const SeriesCoefficients& coeffs, double xi) {
    if (!(xi > 0.0)) throw DomainError("radial_derivatives: xi must be > 0");
    if (coeffs.c.empty()) throw DomainError("radial_derivatives: empty coefficient sequence");

    // Horner on the exponent e = i + l + 1: accumulate from the top term down.
    const int l = coeffs.params.l;
    double v = 0.0, d1 = 0.0, d2 = 0.0;
    for (std::size_t k = coeffs.c.size(); k-- > 0;) {
        const double e = static_cast<double>(k) + l + 1;
        v = v * xi + coeffs.c[k];
        d1 = d1 * xi + coeffs.c[k] * e;
        d2 = d2 * xi + coeffs.c[k] * e * (e - 1.0);
    }
    const double base = std::pow(xi, l + 1);
    return {v * base, d1 * base / xi, d2 * base / (xi * xi)};
}

double ode_residual(const SeriesCoefficients& coeffs, double xi) {
    const auto d = radial_derivatives(coeffs, xi);
    const auto& p = coeffs.params;
    const double potential = p.l * (p.l + 1.0) / (xi * xi) + xi - p.a / xi;
    return -d.second + (potential - p.lambda) * d.value;
}

}  // namespace cornell::series
