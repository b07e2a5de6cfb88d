#include <cmath>
#include <string>

#include "cornell/airy.hpp"
#include "cornell/eigensolve.hpp"
#include "cornell/errors.hpp"
#include "cornell/types.hpp"

namespace cornell {

void QuantumNumbers::validate() const {
    if (n < 0) throw DomainError("quantum numbers: n must be >= 0, got " + std::to_string(n));
    if (l < 0) throw DomainError("quantum numbers: l must be >= 0, got " + std::to_string(l));
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::shooting: return "shooting";
        case Method::sho_basis: return "sho";
        case Method::formula: return "formula";
        case Method::wkb: return "wkb";
        case Method::cornell_fit: return "cornell-fit";
        case Method::coulomb_exact: return "coulomb";
        case Method::airy_exact: return "airy";
    }
    return "unknown";
}

namespace eigensolve {

double coulomb_eigenvalue(double a, int n, int l) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("coulomb_eigenvalue: a must be > 0 (bound states need attraction)");
    }
    QuantumNumbers{n, l}.validate();
    const double k = n + l + 1.0;
    return -a * a / (4.0 * k * k);
}

double linear_l0_eigenvalue(double mu, double b, int n) {
    if (!(mu > 0.0)) throw DomainError("linear_l0_eigenvalue: mu must be > 0");
    if (!(b > 0.0)) throw DomainError("linear_l0_eigenvalue: b must be > 0");
    QuantumNumbers{n, 0}.validate();
    return -std::pow(2.0 * mu * b, 2.0 / 3.0) * airy::zero(n + 1);
}

}  // namespace eigensolve
}  // namespace cornell
