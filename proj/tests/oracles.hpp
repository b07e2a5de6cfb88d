#pragma once

// Reference implementations used only by the tests. None of them share code
// with the library.

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// Ai through the Bessel representations in libstdc++.
inline double airy_ai(double x) {
    using std::numbers::pi;
    if (x == 0.0) return 0.355028053887817239;
    const double t = std::abs(x);
    const double z = 2.0 / 3.0 * t * std::sqrt(t);
    if (x > 0.0) return std::sqrt(t / 3.0) / pi * std::cyl_bessel_k(1.0 / 3.0, z);
    const double j = std::cyl_bessel_j(1.0 / 3.0, z);
    const double y = std::cyl_neumann(1.0 / 3.0, z);
    const double j_minus = 0.5 * j - std::sqrt(3.0) / 2.0 * y;
    return std::sqrt(t) / 3.0 * (j + j_minus);
}

inline double airy_ai_prime(double x) {
    using std::numbers::pi;
    if (x == 0.0) return -0.258819403792806798;
    const double t = std::abs(x);
    const double z = 2.0 / 3.0 * t * std::sqrt(t);
    if (x > 0.0) return -t / (pi * std::sqrt(3.0)) * std::cyl_bessel_k(2.0 / 3.0, z);
    const double j = std::cyl_bessel_j(2.0 / 3.0, z);
    const double y = std::cyl_neumann(2.0 / 3.0, z);
    const double j_minus = -0.5 * j - std::sqrt(3.0) / 2.0 * y;
    return t / 3.0 * (j - j_minus);
}

// Plain bisection; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iterations = 200) {
    double flo = f(lo);
    for (int i = 0; i < iterations && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// k-th negative zero of Ai: scan down from 0 in small steps for the k-th sign
// change of the Bessel form, then bisect.
inline double airy_zero(int k) {
    const double step = 0.05;
    double x = 0.0;
    double fx = airy_ai(x);
    int found = 0;
    while (true) {
        const double next = x - step;
        const double fn = airy_ai(next);
        if ((fn < 0.0) != (fx < 0.0) && ++found == k) return bisect(airy_ai, next, x);
        x = next;
        fx = fn;
    }
}

// Explicit i x i banded matrix: superdiagonal p(p + 1 + 2l) (1-based row p),
// diagonal a, subdiagonal lambda, second subdiagonal -1. Determinant by LU.
inline double banded_determinant(int i, double a, int l, double lambda) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(i, i);
    for (int p = 1; p <= i; ++p) {
        m(p - 1, p - 1) = a;
        if (p < i) m(p - 1, p) = p * (p + 1.0 + 2.0 * l);
        if (p >= 2) m(p - 1, p - 2) = lambda;
        if (p >= 3) m(p - 1, p - 3) = -1.0;
    }
    return m.fullPivLu().determinant();
}

// i! prod_{j=1..i} (2l + j + 1) as a direct product.
inline double det_b(int i, int l) {
    double v = 1.0;
    for (int j = 1; j <= i; ++j) v *= j * (2.0 * l + j + 1.0);
    return v;
}

// Five-point central second difference.
inline double second_difference(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

// n-th eigenvalue of the second-order finite-difference Hamiltonian on
// (0, length] with Dirichlet ends, by Sturm-sequence bisection.
inline double finite_difference_level(double a, int n, int l, int points, double length) {
    const double h = length / (points + 1);
    const double off2 = 1.0 / (h * h * h * h);
    auto below = [&](double x) {
        int count = 0;
        double d = 1.0;
        for (int i = 0; i < points; ++i) {
            const double xi = (i + 1) * h;
            const double diag = 2.0 / (h * h) + l * (l + 1.0) / (xi * xi) + xi - a / xi;
            d = diag - x - (i ? off2 / d : 0.0);
            if (d == 0.0) d = -1e-300;
            if (d < 0.0) ++count;
        }
        return count;
    };
    double lo = -a * a;
    double hi = length + l * (l + 1.0) + 4.0 / (h * h);
    while (hi - lo > 1e-13 * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        (below(mid) > n ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

// Richardson extrapolation over the grids h and h/2.
inline double finite_difference_eigenvalue(double a, int n, int l, double length, int points = 4000) {
    const double coarse = finite_difference_level(a, n, l, points, length);
    const double fine = finite_difference_level(a, n, l, 2 * points + 1, length);
    return (4.0 * fine - coarse) / 3.0;
}

inline double relative_error(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

}  // namespace oracle
