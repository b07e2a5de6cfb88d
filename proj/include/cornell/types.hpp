#pragma once

#include <string_view>
#include <vector>

namespace cornell {

/// Radial index n (number of nodes) and orbital index l.
struct QuantumNumbers {
    int n = 0;
    int l = 0;

    /// Throws DomainError if either index is negative.
    void validate() const;
};

enum class Method {
    shooting,
    sho_basis,
    formula,
    wkb,
    cornell_fit,
    coulomb_exact,
    airy_exact,
};

std::string_view to_string(Method m) noexcept;

struct Diagnostics {
    int iterations = 0;
    /// Shooting: |R(xi_max)| / max|R| at the returned eigenvalue.
    double residual = 0.0;
    /// Shooting: sign changes of R on (0, xi_max); -1 when not applicable.
    int node_count = -1;
    /// Basis: change of the eigenvalue when the last basis function is dropped.
    double truncation_error = 0.0;
    double xi_max = 0.0;
    /// Basis: oscillator length used.
    double scale = 0.0;
};

struct WavefunctionSample {
    double xi;
    double value;
};

struct EigenResult {
    double lambda = 0.0;
    Method method = Method::shooting;
    int n = 0;
    int l = 0;
    double a = 0.0;
    Diagnostics diagnostics;
    std::vector<WavefunctionSample> wavefunction;  ///< optional
};

}  // namespace cornell
