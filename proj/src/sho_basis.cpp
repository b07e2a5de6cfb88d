#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cornell/eigensolve.hpp"
#include "cornell/errors.hpp"

// Radial oscillator basis for fixed l with length b:
//   u_k(xi) ~ xi^{l+1} exp(-xi^2 / 2b^2) L_k^{(l+1/2)}(xi^2 / b^2).
// -d^2 + l(l+1)/xi^2 is tridiagonal in this basis; the potential xi - a/xi
// becomes a polynomial in x = xi^2/b^2 against the weight x^l e^{-x}, so a
// generalized Gauss-Laguerre rule with that weight integrates it exactly.

namespace cornell::eigensolve {
namespace {

struct Quadrature {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

// Golub-Welsch for the weight x^alpha e^{-x} on (0, inf).
Quadrature gauss_laguerre(int points, double alpha) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(points, points);
    for (int k = 0; k < points; ++k) {
        jacobi(k, k) = 2.0 * k + alpha + 1.0;
        if (k + 1 < points) {
            const double off = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
            jacobi(k, k + 1) = off;
            jacobi(k + 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("sho_basis: quadrature eigenproblem failed");
    }
    // Christoffel weights 1 / sum_k p_k(x)^2 over orthonormal p_k, rescaled
    // to stay in range at the outer nodes.
    Quadrature q{solver.eigenvalues(), Eigen::VectorXd(points)};
    constexpr double big = 1e100;
    const double p0 = 1.0 / std::sqrt(std::tgamma(alpha + 1.0));
    for (int i = 0; i < points; ++i) {
        const double x = q.nodes(i);
        double prev = 0.0;
        double curr = p0;
        double sum = curr * curr;
        double log_scale = 0.0;
        for (int k = 0; k + 1 < points; ++k) {
            const double next = ((2.0 * k + alpha + 1.0 - x) * curr -
                                 std::sqrt(k * (k + alpha)) * prev) /
                                std::sqrt((k + 1.0) * (k + alpha + 1.0));
            prev = curr;
            curr = next;
            if (std::abs(curr) > big) {
                prev /= big;
                curr /= big;
                sum /= big * big;
                log_scale += std::log(big);
            }
            sum += curr * curr;
        }
        q.weights(i) = std::exp(-std::log(sum) - 2.0 * log_scale);
    }
    return q;
}

// Orthonormal Laguerre functions: rows k, columns quadrature nodes.
Eigen::MatrixXd normalized_laguerre(int count, double alpha, const Eigen::VectorXd& x) {
    Eigen::MatrixXd out(count, x.size());
    for (int j = 0; j < x.size(); ++j) {
        // hat L_k = L_k sqrt(k! / Gamma(k + alpha + 1)), by the scaled recurrence
        double prev = 0.0;
        double curr = 1.0 / std::sqrt(std::tgamma(alpha + 1.0));
        out(0, j) = curr;
        for (int k = 0; k + 1 < count; ++k) {
            const double next =
                ((2.0 * k + alpha + 1.0 - x(j)) * curr -
                 std::sqrt(k * (k + alpha)) * prev) / std::sqrt((k + 1.0) * (k + alpha + 1.0));
            prev = curr;
            curr = next;
            out(k + 1, j) = curr;
        }
    }
    return out;
}

class BasisHamiltonian {
public:
    BasisHamiltonian(double a, int l, const BasisOptions& opts)
        : a_(a), l_(l), n_(opts.n_basis) {
        const double alpha = l + 0.5;
        quad_ = gauss_laguerre(opts.quadrature_points, static_cast<double>(l));
        basis_ = normalized_laguerre(n_, alpha, quad_.nodes);
    }

    Eigen::MatrixXd matrix(double b) const {
        const double b2 = b * b;
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n_, n_);
        for (int k = 0; k < n_; ++k) {
            h(k, k) = (2.0 * k + l_ + 1.5) / b2;
            if (k + 1 < n_) {
                const double off = std::sqrt((k + 1.0) * (k + l_ + 1.5)) / b2;
                h(k, k + 1) = off;
                h(k + 1, k) = off;
            }
        }
        // sqrt(x) * V(b sqrt(x)) = b x - a / b
        Eigen::VectorXd f(quad_.nodes.size());
        for (int i = 0; i < f.size(); ++i) {
            f(i) = quad_.weights(i) * (b * quad_.nodes(i) - a_ / b);
        }
        h += basis_ * f.asDiagonal() * basis_.transpose();
        if (!h.allFinite()) throw NumericalError("sho_basis: non-finite matrix entries");
        return h;
    }

    Eigen::VectorXd eigenvalues(double b) const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix(b), Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("sho_basis: diagonalization failed");
        }
        return solver.eigenvalues();
    }

private:
    double a_;
    int l_;
    int n_;
    Quadrature quad_;
    Eigen::MatrixXd basis_;
};

double choose_scale(const BasisHamiltonian& h, int levels) {
    auto objective = [&](double log_b) {
        return h.eigenvalues(std::exp(log_b)).head(levels).sum();
    };
    // coarse scan, then golden section around the best grid point
    constexpr double lo = -4.0, hi = 4.0;
    constexpr int grid = 64;
    double best = lo;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        const double t = lo + (hi - lo) * i / grid;
        const double v = objective(t);
        if (v < best_val) {
            best_val = v;
            best = t;
        }
    }
    const double width = (hi - lo) / grid;
    double left = best - width;
    double right = best + width;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = right - ratio * (right - left);
    double d = left + ratio * (right - left);
    double fc = objective(c);
    double fd = objective(d);
    while (right - left > 1e-7) {
        if (fc < fd) {
            right = d;
            d = c;
            fd = fc;
            c = right - ratio * (right - left);
            fc = objective(c);
        } else {
            left = c;
            c = d;
            fc = fd;
            d = left + ratio * (right - left);
            fd = objective(d);
        }
    }
    return std::exp(0.5 * (left + right));
}

void check_inputs(double a, int l, const BasisOptions& opts) {
    opts.validate();
    if (!std::isfinite(a) || a < 0.0) throw DomainError("sho_basis: a must be finite and >= 0");
    if (l < 0) throw DomainError("sho_basis: l must be >= 0");
}

}  // namespace

void BasisOptions::validate() const {
    if (n_basis < 1) throw DomainError("sho_basis: n_basis must be >= 1");
    if (quadrature_points < n_basis + 1) {
        throw DomainError("sho_basis: quadrature_points must exceed n_basis");
    }
    if (scale && !(*scale > 0.0)) throw DomainError("sho_basis: scale must be > 0");
    if (variational_levels < 1 || variational_levels > n_basis) {
        throw DomainError("sho_basis: variational_levels must be in [1, n_basis]");
    }
}

double variational_scale(double a, int l, const BasisOptions& opts) {
    check_inputs(a, l, opts);
    const BasisHamiltonian h(a, l, opts);
    return choose_scale(h, opts.variational_levels);
}

std::vector<EigenResult> solve_sho_basis(double a, int l, const BasisOptions& opts) {
    check_inputs(a, l, opts);
    const BasisHamiltonian h(a, l, opts);
    const double b = opts.scale ? *opts.scale : choose_scale(h, opts.variational_levels);
    const Eigen::VectorXd values = h.eigenvalues(b);

    // truncation estimate: same scale, one basis function fewer
    Eigen::VectorXd smaller;
    if (opts.n_basis > 1) {
        BasisOptions reduced = opts;
        reduced.n_basis = opts.n_basis - 1;
        reduced.variational_levels = std::min(opts.variational_levels, reduced.n_basis);
        smaller = BasisHamiltonian(a, l, reduced).eigenvalues(b);
    }

    std::vector<EigenResult> out;
    out.reserve(static_cast<std::size_t>(values.size()));
    for (int k = 0; k < values.size(); ++k) {
        EigenResult r;
        r.lambda = values(k);
        r.method = Method::sho_basis;
        r.n = k;
        r.l = l;
        r.a = a;
        r.diagnostics.scale = b;
        r.diagnostics.truncation_error =
            k < smaller.size() ? std::abs(smaller(k) - values(k))
                               : std::numeric_limits<double>::infinity();
        out.push_back(std::move(r));
    }
    return out;
}

EigenResult solve_sho_state(double a, int n, int l, const BasisOptions& opts) {
    if (n < 0) throw DomainError("sho_basis: n must be >= 0");
    if (n >= opts.n_basis) {
        throw DomainError("sho_basis: requested n=" + std::to_string(n) +
                          " needs n_basis > n (have " + std::to_string(opts.n_basis) + ")");
    }
    return solve_sho_basis(a, l, opts)[static_cast<std::size_t>(n)];
}

}  // namespace cornell::eigensolve
