#include "cornell/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cornell/airy.hpp"
#include "cornell/errors.hpp"
#include "cornell/types.hpp"

namespace cornell::closed_forms {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGuard = 1e-9;

void require_nonnegative(int v, const char* name) {
    if (v < 0) throw DomainError(std::string("closed_forms: ") + name + " must be >= 0");
}

double two_thirds_power(double x) { return std::pow(x, 2.0 / 3.0); }

double guarded(double denominator, const char* where) {
    if (std::abs(denominator) < kGuard) {
        throw NumericalError(std::string("cornell_f: vanishing denominator in ") + where);
    }
    return denominator;
}

// Rational block (c1 + c2 p^e1 + c3 q^e2) / (c4 p^e1 + c5 q^e2 + 1).
double rational_block(double c1, double c2, double c3, double c4, double c5,
                      double p_pow, double q_pow, const char* where) {
    return (c1 + c2 * p_pow + c3 * q_pow) / guarded(c4 * p_pow + c5 * q_pow + 1.0, where);
}

}  // namespace

const CornellFitConstants& published_fit_constants() noexcept {
    static const CornellFitConstants k{
        // al1 .. al5
        -0.0131096, -0.0526298, 0.000656495, 5.04779, 1.59813,
        // bl1 .. bl5
        0.214579, -0.0439848, 0.00362465, -0.22573, 0.839639,
        // cl1 .. cl5
        -0.689677, -1.91553, -0.274089, 4.19812, 0.75866,
        // dl1 .. dl5
        0.365051, 0.148248, 0.0362142, 1.43633, 0.621341,
        // an1, an2, bn1, bn2, cn1, cn2, dn1, dn2, en1, en2
        0.254949, 0.500001, 1.29783, 0.77, 0.0400669, 1.61998, 0.433161, 1.92501, 0.4, 0.520996,
        // f1, f2
        0.00685891, 8.47589,
    };
    return k;
}

double radial_weight() noexcept { return std::pow(kPi, 2.0 / 3.0) / std::cbrt(3.0); }

double linear_ratio(int n, int l, const DeltaConstants& c) {
    require_nonnegative(n, "n");
    require_nonnegative(l, "l");
    const double w = radial_weight();
    const double radial = w * c.delta2 * n;
    return (c.delta1 * l + radial + 1.0) / (w * c.delta1 * l + radial + 1.0);
}

double lambda_linear(int n, int l, const DeltaConstants& c) {
    return -linear_ratio(n, l, c) * airy::zero(l + n + 1);
}

double lambda_linear_expanded(int n, int l, double delta) {
    require_nonnegative(n, "n");
    require_nonnegative(l, "l");
    const double k = two_thirds_power(3.0 * kPi) / 3.0;
    return two_thirds_power(12.0 * kPi) / 4.0 * two_thirds_power(l + n + 0.75) *
           (delta * (l + k * n) + 1.0) / (k * delta * (l + n) + 1.0);
}

double wkb_linear(int n, int l) {
    require_nonnegative(n, "n");
    require_nonnegative(l, "l");
    return two_thirds_power(1.5 * kPi * (n + 0.5 * l + 0.75));
}

double regge_n(int n) {
    require_nonnegative(n, "n");
    return two_thirds_power(1.5 * kPi * n);
}

double regge_nl(int n, int l) {
    require_nonnegative(n, "n");
    require_nonnegative(l, "l");
    return two_thirds_power(1.5 * kPi * (n + l));
}

double regge_l(int l) {
    require_nonnegative(l, "l");
    return two_thirds_power(std::pow(3.0, 1.5) / 2.0 * l);
}

double regge_ln(int l, int n) {
    require_nonnegative(n, "n");
    require_nonnegative(l, "l");
    return two_thirds_power(std::pow(3.0, 1.5) / 2.0 * (l + n));
}

double cornell_f(double a, int n, int l, const CornellFitConstants& k) {
    if (!std::isfinite(a) || a < 0.0) throw DomainError("cornell_f: a must be finite and >= 0");
    require_nonnegative(n, "n");
    require_nonnegative(l, "l");
    if (a == 0.0) return 1.0;

    const double s = std::pow(a, 0.4);
    auto mix = [&](double coeff) { return coeff * n + l; };

    const double r1 = rational_block(k.al1, k.al2, k.al3, k.al4, k.al5,
                                     std::pow(mix(k.an1), 1.5), std::pow(mix(k.an2), 3), "al block");
    const double r2 = rational_block(k.bl1, k.bl2, k.bl3, k.bl4, k.bl5,
                                     std::sqrt(mix(k.bn1)), mix(k.bn2), "bl block");
    const double r3 = rational_block(k.cl1, k.cl2, k.cl3, k.cl4, k.cl5,
                                     std::pow(mix(k.cn1), 2), std::pow(mix(k.cn2), 4), "cl block");
    const double r4 = rational_block(k.dl1, k.dl2, k.dl3, k.dl4, k.dl5,
                                     mix(k.dn1), std::pow(mix(k.dn2), 2), "dl block");
    const double radial = (k.en2 * n + 1.0) / guarded(k.en1 * n + 1.0, "radial ratio");

    const double numerator = (r1 + r2 * s) * s;
    const double denominator = guarded((r3 + r4 * s) * s + radial, "outer fraction");
    return 1.0 - numerator / denominator;
}

double cornell_g(double a, const CornellFitConstants& k) {
    if (!std::isfinite(a) || a < 0.0) throw DomainError("cornell_g: a must be finite and >= 0");
    return k.f1 * (1.0 - std::exp(-k.f2 * a));
}

double cornell_eigenvalue(double a, int n, int l, const CornellFitConstants& k,
                          const DeltaConstants& deltas) {
    const double f = cornell_f(a, n, l, k);
    const double coulomb = -a * a / (4.0 * (n + l + 1.0) * (n + l + 1.0));
    return coulomb + lambda_linear(n, l, deltas) * f + cornell_g(a, k);
}

}  // namespace cornell::closed_forms
