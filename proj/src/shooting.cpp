#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cornell/eigensolve.hpp"
#include "cornell/errors.hpp"

namespace cornell::eigensolve {
namespace {

constexpr double kScanStart = 1e-8;
constexpr double kScanRatio = 1.01;
constexpr double kCoulombCap = 1e4;  // outer cutoff when the linear term is off
constexpr double kRescaleAt = 1e200;

struct Problem {
    double a;
    int l;
    double linear;

    double potential(double xi) const {
        return l * (l + 1.0) / (xi * xi) + linear * xi - a / xi;
    }
};

struct TurningPoints {
    double inner;
    double outer;
};

double refine_crossing(const Problem& p, double lambda, double below, double above) {
    // `below` has V <= lambda, `above` has V > lambda
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (below + above);
        (p.potential(mid) <= lambda ? below : above) = mid;
    }
    return 0.5 * (below + above);
}

TurningPoints turning_points(const Problem& p, double lambda) {
    const double upper = p.linear > 0.0
                             ? std::max(lambda, 0.0) / p.linear + p.a + 2.0 + std::sqrt(p.l * (p.l + 1.0))
                             : kCoulombCap;
    double prev = kScanStart;
    double argmin = prev;
    double vmin = p.potential(prev);
    double inner = -1.0;
    double outer = -1.0;
    bool prev_allowed = vmin <= lambda;
    if (prev_allowed) inner = prev;
    for (double xi = prev * kScanRatio; xi <= upper * kScanRatio; xi *= kScanRatio) {
        const double v = p.potential(xi);
        if (v < vmin) {
            vmin = v;
            argmin = xi;
        }
        const bool allowed = v <= lambda;
        if (allowed && !prev_allowed && inner < 0.0) inner = refine_crossing(p, lambda, xi, prev);
        if (!allowed && prev_allowed) outer = refine_crossing(p, lambda, prev, xi);
        prev_allowed = allowed;
        prev = xi;
    }
    if (inner < 0.0) return {argmin, argmin};
    if (prev_allowed) outer = upper;
    if (outer < 0.0) outer = inner;
    return {inner, outer};
}

struct Integration {
    int nodes = 0;
    double end_ratio = 0.0;  // |R(xi_max)| / max|R|
    double xi_max = 0.0;
    std::vector<WavefunctionSample> samples;
};

Integration integrate(const Problem& p, double lambda, const ShootingOptions& o, int stride) {
    const auto tp = turning_points(p, lambda);
    double margin = o.xi_margin;
    if (p.linear == 0.0 && lambda < 0.0) {
        // exponential rather than Airy-like decay: ~30 decay lengths
        margin = std::max(margin, 30.0 / std::sqrt(-lambda));
    }
    const double l1 = p.l + 1.0;
    const double h = o.step;
    const double xi_start =
        std::max({o.xi_min, h * std::sqrt(p.l * l1), tp.inner * std::pow(10.0, -30.0 / l1)});
    double xi_max = tp.outer + margin;
    if (p.linear == 0.0) xi_max = std::min(xi_max, kCoulombCap);
    const long steps = std::max(2L, static_cast<long>(std::ceil((xi_max - xi_start) / h)));

    auto g = [&](double xi) { return 1.0 - h * h * (p.potential(xi) - lambda) / 12.0; };
    // regular solution xi^{l+1} (1 - a xi / (2l + 2)), normalized to R(xi_start) = 1
    auto regular = [&](double xi) { return 1.0 - p.a * xi / (2.0 * l1); };
    const double x1 = xi_start + h;
    double r_prev = 1.0;
    double r_curr = std::pow(x1 / xi_start, l1) * regular(x1) / regular(xi_start);
    double g_prev = g(xi_start);
    double g_curr = g(x1);

    Integration out;
    double max_abs = std::max(std::abs(r_prev), std::abs(r_curr));
    double last_sign = r_curr != 0.0 ? std::copysign(1.0, r_curr) : 1.0;
    if (stride > 0) {
        out.samples.push_back({xi_start, r_prev});
    }
    for (long k = 1; k < steps; ++k) {
        const double xi_next = xi_start + (k + 1) * h;
        const double g_next = g(xi_next);
        const double r_next = ((12.0 - 10.0 * g_curr) * r_curr - g_prev * r_prev) / g_next;
        if (r_next != 0.0) {
            const double s = std::copysign(1.0, r_next);
            if (s != last_sign) ++out.nodes;
            last_sign = s;
        }
        r_prev = r_curr;
        r_curr = r_next;
        g_prev = g_curr;
        g_curr = g_next;
        max_abs = std::max(max_abs, std::abs(r_curr));
        if (max_abs > kRescaleAt) {
            r_prev /= kRescaleAt;
            r_curr /= kRescaleAt;
            max_abs /= kRescaleAt;
            for (auto& s : out.samples) s.value /= kRescaleAt;
        }
        if (stride > 0 && k % stride == 0) out.samples.push_back({xi_start + k * h, r_prev});
    }
    out.end_ratio = std::abs(r_curr) / max_abs;
    out.xi_max = xi_start + steps * h;
    if (stride > 0) {
        for (auto& s : out.samples) s.value /= max_abs;
    }
    return out;
}

double wkb_guess(int n, int l) {
    return std::pow(1.5 * std::numbers::pi * (n + 0.5 * l + 0.75), 2.0 / 3.0);
}

}  // namespace

void ShootingOptions::validate() const {
    if (!(step > 0.0)) throw DomainError("shooting: step must be > 0");
    if (!(xi_min > 0.0)) throw DomainError("shooting: xi_min must be > 0");
    if (!(xi_margin > 0.0)) throw DomainError("shooting: xi_margin must be > 0");
    if (!(tol > 0.0)) throw DomainError("shooting: tol must be > 0");
    if (max_iter < 1) throw DomainError("shooting: max_iter must be >= 1");
    if (!(linear_coefficient >= 0.0)) throw DomainError("shooting: linear_coefficient must be >= 0");
    if (sample_stride < 0) throw DomainError("shooting: sample_stride must be >= 0");
}

EigenResult solve_shooting(double a, int n, int l, const ShootingOptions& opts) {
    opts.validate();
    if (!std::isfinite(a) || a < 0.0) throw DomainError("shooting: a must be finite and >= 0");
    QuantumNumbers{n, l}.validate();
    const Problem p{a, l, opts.linear_coefficient};
    const bool coulomb_only = p.linear == 0.0;
    if (coulomb_only && a <= 0.0) {
        throw DomainError("shooting: the pure Coulomb problem needs a > 0");
    }

    auto nodes = [&](double lambda) { return integrate(p, lambda, opts, 0).nodes; };

    // The pure Coulomb level of the same l bounds the spectrum from below.
    double lo = a > 0.0 ? -a * a / (4.0 * (l + 1.0) * (l + 1.0)) * (1.0 + 1e-9) - 1e-12 : 0.0;
    if (nodes(lo) > n) {
        throw SearchError("shooting: lower bound already has more than n nodes");
    }

    double hi = 0.0;
    bool bracketed = false;
    if (coulomb_only) {
        hi = lo;
        for (int k = 0; k < 60 && !bracketed; ++k) {
            hi *= 0.5;
            bracketed = nodes(hi) > n;
        }
    } else {
        const double ceiling = 10.0 * std::max(wkb_guess(n, l), 1.0);
        hi = std::max(wkb_guess(n, l), 1.0);
        while (!(bracketed = nodes(hi) > n) && hi < ceiling) {
            hi = std::min(lo + 2.0 * (hi - lo), ceiling);
        }
    }
    if (!bracketed) {
        throw SearchError("shooting: could not bracket state n=" + std::to_string(n) +
                          " l=" + std::to_string(l));
    }

    int iterations = 0;
    while (hi - lo > opts.tol) {
        if (++iterations > opts.max_iter) {
            throw SearchError("shooting: bisection did not converge within max_iter");
        }
        const double mid = 0.5 * (lo + hi);
        (nodes(mid) > n ? hi : lo) = mid;
    }

    EigenResult result;
    result.lambda = 0.5 * (lo + hi);
    result.method = Method::shooting;
    result.n = n;
    result.l = l;
    result.a = a;
    // samples and node count come from the lower end of the bracket
    const auto final_run = integrate(p, lo, opts, opts.sample_stride);
    result.diagnostics.iterations = iterations;
    result.diagnostics.node_count = final_run.nodes;
    result.diagnostics.residual = final_run.end_ratio;
    result.diagnostics.xi_max = final_run.xi_max;
    result.wavefunction = final_run.samples;
    if (!std::isfinite(result.lambda)) throw NumericalError("shooting: non-finite eigenvalue");
    return result;
}

}  // namespace cornell::eigensolve
