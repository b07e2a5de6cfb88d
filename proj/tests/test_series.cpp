#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cornell/airy.hpp"
#include "cornell/eigensolve.hpp"
#include "cornell/errors.hpp"
#include "cornell/series.hpp"
#include "oracles.hpp"

using namespace cornell;
using series::SeriesParams;

namespace {

struct Draw {
    double a;
    int l;
    double lambda;
};

std::vector<Draw> random_draws(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> a(0.0, 5.0);
    std::uniform_int_distribution<int> l(0, 6);
    std::uniform_real_distribution<double> lambda(-3.0, 20.0);
    std::vector<Draw> out;
    for (int i = 0; i < count; ++i) out.push_back({a(rng), l(rng), lambda(rng)});
    return out;
}

}  // namespace

TEST_CASE("first recurrence coefficients") {
    for (const auto& d : random_draws(20, 7)) {
        const auto c = series::coefficients_by_recurrence({d.a, d.l, d.lambda}, 3).c;
        REQUIRE(c.size() == 3);
        CHECK(c[0] == 1.0);
        CHECK(c[1] == doctest::Approx(-d.a / (2.0 * d.l + 2.0)).epsilon(1e-14));
        const double want = (d.a * d.a - d.lambda * (2.0 * d.l + 2.0)) /
                            ((2.0 * d.l + 2.0) * 2.0 * (2.0 * d.l + 3.0));
        CHECK(c[2] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("coefficient count and domain") {
    CHECK(series::coefficients_by_recurrence({1.0, 0, 2.0}, 1).count() == 1);
    CHECK(series::coefficients_by_recurrence({1.0, 0, 2.0}).count() == series::kDefaultTerms);
    CHECK_THROWS_AS(series::coefficients_by_recurrence({1.0, 0, 2.0}, 0), DomainError);
    CHECK_THROWS_AS(series::coefficients_by_recurrence({-1.0, 0, 2.0}, 5), DomainError);
    CHECK_THROWS_AS(series::coefficients_by_recurrence({1.0, -1, 2.0}, 5), DomainError);
    CHECK_THROWS_AS(series::coefficients_by_recurrence({1.0, 0, NAN}, 5), DomainError);
}

TEST_CASE("det_b") {
    CHECK(series::det_b(1, 0) == 2.0);
    CHECK(series::det_b(2, 0) == 12.0);
    CHECK(series::det_b(3, 1) == 720.0);
    for (int i = 1; i <= 15; ++i) {
        for (int l = 0; l <= 6; ++l) {
            CHECK(series::det_b(i, l) == doctest::Approx(oracle::det_b(i, l)).epsilon(1e-14));
        }
    }
    CHECK_THROWS_AS(series::det_b(0, 0), DomainError);
    try {
        series::det_b(400, 0);
        FAIL("expected overflow");
    } catch (const OverflowError& e) {
        CHECK(e.index() > 1);
        CHECK(e.index() <= 400);
        CHECK(std::isfinite(oracle::det_b(e.index() - 1, 0)));
        CHECK(std::isinf(oracle::det_b(e.index(), 0)));
    }
}

TEST_CASE("det_a_matrix small cases") {
    const SeriesParams p{1.7, 2, 3.1};
    CHECK(series::det_a_matrix(1, p) == 1.7);
    CHECK(series::det_a_matrix(2, p) == doctest::Approx(1.7 * 1.7 - 3.1 * 6.0).epsilon(1e-14));
    const SeriesParams q{1.0, 0, 2.0};
    CHECK(series::det_a_matrix(3, q) == doctest::Approx(series::det_a_cf(3, q).value).epsilon(1e-12));
    CHECK_THROWS_AS(series::det_a_matrix(0, q), DomainError);
    CHECK_THROWS_AS(series::det_a_cf(0, q), DomainError);
}

TEST_CASE("det_a_matrix against an LU determinant") {
    for (const auto& d : random_draws(40, 11)) {
        for (int i = 1; i <= 12; ++i) {
            const double got = series::det_a_matrix(i, {d.a, d.l, d.lambda});
            const double want = oracle::banded_determinant(i, d.a, d.l, d.lambda);
            CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("continued fraction") {
    const SeriesParams p{1.5, 2, 3.7};
    CHECK(series::det_a_cf(1, p).value == 1.5);
    CHECK(series::det_a_cf(2, p).value == doctest::Approx(1.5 * 1.5 - 3.7 * 6.0).epsilon(1e-14));
    CHECK(series::det_a_cf(5, p).value == doctest::Approx(series::det_a_matrix(5, p)).epsilon(1e-12));
    CHECK_FALSE(series::det_a_cf(5, p).fallback);

    SUBCASE("a = 0 falls back to the matrix value") {
        const SeriesParams z{0.0, 1, 2.5};
        for (int i = 2; i <= 8; ++i) {
            const auto r = series::det_a_cf(i, z);
            CHECK(r.fallback);
            CHECK(r.value == series::det_a_matrix(i, z));
        }
        CHECK_FALSE(series::det_a_cf(1, z).fallback);
    }
}

TEST_CASE("determinant identities over random draws") {
    int checked_cf = 0;
    for (const auto& d : random_draws(100, 2024)) {
        const SeriesParams p{d.a, d.l, d.lambda};
        const auto c = series::coefficients_by_recurrence(p, 13).c;
        for (int i = 1; i <= 12; ++i) {
            const double det = series::det_a_matrix(i, p);
            const double ratio = (i % 2 ? -1.0 : 1.0) * det / series::det_b(i, d.l);
            CHECK(std::abs(c[i] - ratio) <= 1e-10 * std::abs(ratio) + 1e-300);
            const auto cf = series::det_a_cf(i, p);
            if (cf.fallback) {
                CHECK(cf.value == det);
            } else {
                ++checked_cf;
                CHECK(std::abs(cf.value - det) <= 1e-10 * std::abs(det));
            }
        }
    }
    CHECK(checked_cf > 1000);
}

TEST_CASE("radial_wavefunction basics") {
    series::SeriesCoefficients one{{1.0}, {0.0, 0, 0.0}};
    CHECK(series::radial_wavefunction(one, 2.0).value == 2.0);
    one.params.l = 2;
    CHECK(series::radial_wavefunction(one, 2.0).value == 8.0);

    const auto c = series::coefficients_by_recurrence({1.0, 1, 2.0}, 40);
    for (double xi : {1e-3, 1e-4, 1e-5}) {
        const double v = series::radial_wavefunction(c, xi).value;
        CHECK(v / (xi * xi) == doctest::Approx(1.0).epsilon(10 * xi));
    }
    CHECK_THROWS_AS(series::radial_wavefunction(c, 0.0), DomainError);
    CHECK_THROWS_AS(series::radial_wavefunction(c, -1.0), DomainError);
    CHECK_THROWS_AS(series::radial_wavefunction(series::SeriesCoefficients{}, 1.0), DomainError);
}

TEST_CASE("convergence diagnostic") {
    const auto c = series::coefficients_by_recurrence({0.0, 0, 2.33811}, 120);
    const auto near = series::radial_wavefunction(c, 3.0);
    CHECK(near.converged);
    CHECK(near.last_term <= series::kConvergenceRatio * near.max_term);
    const auto short_c = series::coefficients_by_recurrence({0.0, 0, 2.33811}, 10);
    CHECK_FALSE(series::radial_wavefunction(short_c, 3.0).converged);
}

TEST_CASE("a = 0, l = 0 reproduces the shifted Airy function") {
    for (int n = 0; n <= 2; ++n) {
        const double z = airy::zero(n + 1);
        const auto c = series::coefficients_by_recurrence({0.0, 0, -z}, 80);
        const double ref = series::radial_wavefunction(c, 1.0).value / oracle::airy_ai(1.0 + z);
        for (double xi = 0.2; xi <= 3.0; xi += 0.1) {
            const double ratio = series::radial_wavefunction(c, xi).value / oracle::airy_ai(xi + z);
            CHECK(ratio == doctest::Approx(ref).epsilon(1e-6));
        }
        CHECK(ref == doctest::Approx(1.0 / oracle::airy_ai_prime(z)).epsilon(1e-8));
    }
    const double z = airy::zero(1);
    const auto c60 = series::coefficients_by_recurrence({0.0, 0, -z}, 60);
    for (double xi = 0.25; xi <= 4.0; xi += 0.25) {
        CHECK(series::radial_wavefunction(c60, xi).value ==
              doctest::Approx(oracle::airy_ai(xi + z) / oracle::airy_ai_prime(z)).epsilon(1e-8));
    }
}

TEST_CASE("term-wise derivatives against finite differences") {
    const auto c = series::coefficients_by_recurrence({1.3, 2, 4.1}, 80);
    auto r = [&](double x) { return series::radial_wavefunction(c, x).value; };
    for (double xi : {0.3, 0.8, 1.5, 2.2}) {
        const auto d = series::radial_derivatives(c, xi);
        CHECK(d.value == doctest::Approx(r(xi)).epsilon(1e-14));
        const double h = 1e-5;
        CHECK(d.first == doctest::Approx((r(xi + h) - r(xi - h)) / (2 * h)).epsilon(1e-7));
        CHECK(d.second == doctest::Approx(oracle::second_difference(r, xi, 1e-3)).epsilon(1e-6));
    }
}

TEST_CASE("ODE residual at shooting eigenvalues") {
    for (double a : {0.0, 1.0}) {
        for (int n = 0; n <= 2; ++n) {
            for (int l = 0; l <= 2; ++l) {
                const double lambda = eigensolve::solve_shooting(a, n, l).lambda;
                const auto c = series::coefficients_by_recurrence({a, l, lambda}, 120);
                double peak = 0.0;
                double worst = 0.0;
                for (double xi = 0.2; xi <= 2.0 + 1e-12; xi += 0.01) {
                    peak = std::max(peak, std::abs(series::radial_wavefunction(c, xi).value));
                    worst = std::max(worst, std::abs(series::ode_residual(c, xi)));
                }
                CHECK(worst <= 1e-5 * peak);
            }
        }
    }
}

TEST_CASE("residual is the truncation tail for any lambda") {
    // Off-eigenvalue the series still solves the ODE; only the dropped terms remain.
    const auto c = series::coefficients_by_recurrence({0.7, 1, 5.5}, 120);
    for (double xi : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(series::ode_residual(c, xi)) <= 1e-10 * std::abs(series::radial_wavefunction(c, xi).value) + 1e-12);
    }
}
