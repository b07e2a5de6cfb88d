#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cornell/eigensolve.hpp"

// Physical Cornell potential V(r) = b r - alpha / r - C for a reduced mass mu,
// its dimensionless form, and the map from eigenvalues to meson masses.

namespace cornell::spectrum {

struct PotentialParams {
    double mu = 0.0;          ///< reduced mass [GeV]
    double b = 0.0;           ///< string tension [GeV^2]
    double alpha = 0.0;       ///< Coulomb coefficient
    double C = 0.0;           ///< constant shift [GeV]
    double quark_mass = 0.0;  ///< constituent quark mass [GeV]

    void validate() const;
};

/// Name under which the bottomonium parameter set is addressable.
inline constexpr std::string_view kBottomoniumPreset = "bottomonium-table3";

/// b = 0.18 GeV^2, C = 0.29 GeV, alpha = 0.52, m_q = 4.93 GeV, mu = m_q / 2.
PotentialParams bottomonium_preset();

/// Look up a named preset.
std::optional<PotentialParams> preset(std::string_view name);

struct ScaledProblem {
    double sigma = 0.0;  ///< (2 mu b)^{1/3} [GeV]
    double a = 0.0;      ///< 2 mu alpha / sigma
};

ScaledProblem scale_to_dimensionless(const PotentialParams& p);

/// E = lambda sigma^2 / (2 mu) - C.
double eigenvalue_to_energy(double lambda, const ScaledProblem& s, const PotentialParams& p);

/// lambda = 2 mu (E + C) / sigma^2.
double energy_to_eigenvalue(double energy, const ScaledProblem& s, const PotentialParams& p);

/// M = 2 m_q + E.
double meson_mass(double energy, const PotentialParams& p);

struct BottomoniumRow {
    int n = 0;
    std::string label;         ///< spectroscopic label, e.g. "2³S₁"
    double formula_mass = 0.0;
    double numerical_mass = 0.0;
    double experiment = 0.0;   ///< reference value, never used in computation
};

/// Upsilon(nS) masses for n = 0..5 from the Cornell fit and from shooting.
std::vector<BottomoniumRow> bottomonium_table(const eigensolve::ShootingOptions& opts = {});

}  // namespace cornell::spectrum
