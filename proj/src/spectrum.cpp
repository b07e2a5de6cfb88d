#include "cornell/spectrum.hpp"

#include <array>
#include <cmath>

#include "cornell/closed_forms.hpp"
#include "cornell/errors.hpp"

namespace cornell::spectrum {

void PotentialParams::validate() const {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("potential: mu must be > 0");
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("potential: b must be > 0");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("potential: alpha must be >= 0");
    if (!std::isfinite(C)) throw DomainError("potential: C must be finite");
    if (!(quark_mass > 0.0) || !std::isfinite(quark_mass)) {
        throw DomainError("potential: quark_mass must be > 0");
    }
}

PotentialParams bottomonium_preset() {
    constexpr double m_b = 4.93;
    return {m_b / 2.0, 0.18, 0.52, 0.29, m_b};
}

std::optional<PotentialParams> preset(std::string_view name) {
    if (name == kBottomoniumPreset) return bottomonium_preset();
    return std::nullopt;
}

ScaledProblem scale_to_dimensionless(const PotentialParams& p) {
    p.validate();
    const double sigma = std::cbrt(2.0 * p.mu * p.b);
    return {sigma, 2.0 * p.mu * p.alpha / sigma};
}

double eigenvalue_to_energy(double lambda, const ScaledProblem& s, const PotentialParams& p) {
    return lambda * s.sigma * s.sigma / (2.0 * p.mu) - p.C;
}

double energy_to_eigenvalue(double energy, const ScaledProblem& s, const PotentialParams& p) {
    return 2.0 * p.mu * (energy + p.C) / (s.sigma * s.sigma);
}

double meson_mass(double energy, const PotentialParams& p) { return 2.0 * p.quark_mass + energy; }

std::vector<BottomoniumRow> bottomonium_table(const eigensolve::ShootingOptions& opts) {
    static constexpr std::array<const char*, 6> labels{"0³S₁", "1³S₁", "2³S₁",
                                                       "3³S₁", "4³S₁", "5³S₁"};
    static constexpr std::array<double, 6> experiment{9.4603, 10.023, 10.355,
                                                      10.579, 10.882, 11.003};
    const auto p = bottomonium_preset();
    const auto s = scale_to_dimensionless(p);
    std::vector<BottomoniumRow> rows;
    for (int n = 0; n < 6; ++n) {
        const double fit = closed_forms::cornell_eigenvalue(s.a, n, 0);
        const double numeric = eigensolve::solve_shooting(s.a, n, 0, opts).lambda;
        rows.push_back({n, labels[static_cast<std::size_t>(n)],
                        meson_mass(eigenvalue_to_energy(fit, s, p), p),
                        meson_mass(eigenvalue_to_energy(numeric, s, p), p),
                        experiment[static_cast<std::size_t>(n)]});
    }
    return rows;
}

}  // namespace cornell::spectrum
