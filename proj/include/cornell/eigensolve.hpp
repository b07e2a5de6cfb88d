#pragma once

#include <optional>
#include <vector>

#include "cornell/types.hpp"

// Numerical eigenvalues of
//   [-d^2/dxi^2 + l(l+1)/xi^2 + xi - a/xi] R = lambda R,   R(0) = R(inf) = 0,
// by Numerov shooting and by diagonalization in a radial oscillator basis,
// plus the two exactly solvable limits (pure Coulomb, pure linear at l = 0).

namespace cornell::eigensolve {

struct ShootingOptions {
    double step = 1e-3;      ///< Numerov step in xi
    double xi_min = 1e-6;    ///< smallest allowed start of the outward integration
    double xi_margin = 15.0; ///< distance integrated past the outer turning point
    double tol = 1e-9;       ///< bisection tolerance on lambda
    int max_iter = 200;
    /// Coefficient of the linear term. 1 for the physical problem; 0 leaves
    /// the pure Coulomb problem (used to check against the exact spectrum).
    double linear_coefficient = 1.0;
    /// Keep every k-th grid value of R at the final eigenvalue (0 = none).
    int sample_stride = 0;

    void validate() const;
};

struct BasisOptions {
    int n_basis = 20;
    /// Oscillator length; chosen variationally when empty.
    std::optional<double> scale;
    int quadrature_points = 200;
    /// Number of lowest eigenvalues whose sum is minimized over the scale.
    int variational_levels = 4;

    void validate() const;
};

/// Eigenvalue with exactly n radial nodes, by Numerov integration and
/// bisection on the node count. Throws SearchError if no bracket is found.
EigenResult solve_shooting(double a, int n, int l, const ShootingOptions& opts = {});

/// Lowest n_basis eigenvalues for fixed l, ascending, tagged n = 0, 1, ...
std::vector<EigenResult> solve_sho_basis(double a, int l, const BasisOptions& opts = {});

/// Single state from the basis diagonalization; n >= n_basis is a DomainError.
EigenResult solve_sho_state(double a, int n, int l, const BasisOptions& opts = {});

/// Oscillator length minimizing the sum of the lowest
/// opts.variational_levels eigenvalues.
double variational_scale(double a, int l, const BasisOptions& opts = {});

/// Pure Coulomb spectrum -a^2 / (4 (n + l + 1)^2); requires a > 0.
double coulomb_eigenvalue(double a, int n, int l);

/// Pure linear potential at l = 0: -(2 mu b)^{2/3} a_{n+1}, with a_k the
/// k-th Airy zero. This is the eigenvalue of 2 mu E.
double linear_l0_eigenvalue(double mu, double b, int n);

}  // namespace cornell::eigensolve
