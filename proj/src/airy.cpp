#include "cornell/airy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cornell/errors.hpp"

namespace cornell::airy {
namespace {

constexpr double kAi0 = 0.355028053887817239260;        // 3^{-2/3} / Gamma(2/3)
constexpr double kAiPrime0 = -0.258819403792806798405;  // -3^{-1/3} / Gamma(1/3)

// Outside [-kNegAsymptotic, kPosAsymptotic] the asymptotic expansions are
// accurate to roughly exp(-2 zeta), i.e. better than 1e-13 relative.
constexpr double kMaclaurinRadius = 2.0;
constexpr double kPosAsymptotic = 8.0;
constexpr double kNegAsymptotic = 8.0;
constexpr double kMaxStep = 0.5;

void require_finite(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("airy: argument must be finite");
    }
}

// Taylor continuation of a solution of y'' = x y from x0 to x0 + h.
// With t_k = y^{(k)}(x0) / k!:  t_{k+2} = (x0 t_k + t_{k-1}) / ((k+1)(k+2)).
AiryPair taylor_step(double x0, AiryPair y, double h) {
    double value = y.ai + y.ai_prime * h;
    double deriv = y.ai_prime;
    // sliding window (t_{k-1}, t_k, t_{k+1}) starting at k = 0
    double tkm1 = 0.0;
    double tk = y.ai;
    double tk1 = y.ai_prime;
    double hpow = 1.0;  // h^k
    int quiet = 0;
    for (int k = 0; k < 200; ++k) {
        const double tk2 = (x0 * tk + tkm1) / ((k + 1.0) * (k + 2.0));
        const double hk1 = hpow * h;  // h^{k+1}
        const double term = tk2 * hk1 * h;
        const double dterm = (k + 2.0) * tk2 * hk1;
        value += term;
        deriv += dterm;
        hpow = hk1;
        tkm1 = tk;
        tk = tk1;
        tk1 = tk2;
        const double scale = std::abs(value) + std::abs(deriv) + 1e-300;
        // three quiet terms in a row: t_k vanishes in a period-3 pattern at x0 = 0
        if (std::abs(term) + std::abs(dterm) <= 1e-18 * scale) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return {value, deriv};
}

AiryPair maclaurin(double x) { return taylor_step(0.0, {kAi0, kAiPrime0}, x); }

// u_k of the standard Airy asymptotic expansions and v_k = -(6k+1)/(6k-1) u_k.
struct AsymptoticSums {
    double u_even, u_odd;  // sum (-1)^k u_{2k} / z^{2k},  sum (-1)^k u_{2k+1} / z^{2k+1}
    double v_even, v_odd;
    double u_alt, v_alt;   // sum (-1)^k u_k / z^k
};

AsymptoticSums asymptotic_sums(double zeta) {
    AsymptoticSums s{1.0, 0.0, 1.0, 0.0, 1.0, 1.0};
    double u = 1.0;
    double inv_pow = 1.0;
    double last = 1.0;
    for (int k = 1; k < 80; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
        inv_pow /= zeta;
        const double tu = u * inv_pow;
        const double tv = v * inv_pow;
        const double mag = std::abs(tu) + std::abs(tv);
        if (mag > last) break;  // past the smallest term of a divergent series
        last = mag;
        const double alt = (k % 2 == 0) ? 1.0 : -1.0;
        s.u_alt += alt * tu;
        s.v_alt += alt * tv;
        // even / odd split for the oscillatory form: sign (-1)^{floor(k/2)}
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            s.u_even += sign * tu;
            s.v_even += sign * tv;
        } else {
            s.u_odd += sign * tu;
            s.v_odd += sign * tv;
        }
        if (mag < 1e-17) break;
    }
    return s;
}

AiryPair asymptotic_positive(double x) {
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const auto s = asymptotic_sums(zeta);
    const double x4 = std::sqrt(std::sqrt(x));
    const double pref = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
    return {pref / x4 * s.u_alt, -pref * x4 * s.v_alt};
}

AiryPair asymptotic_negative(double x) {
    const double z = -x;
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const auto s = asymptotic_sums(zeta);
    const double z4 = std::sqrt(std::sqrt(z));
    const double phase = zeta - std::numbers::pi / 4.0;
    const double c = std::cos(phase);
    const double sn = std::sin(phase);
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    return {inv_sqrt_pi / z4 * (c * s.u_even + sn * s.u_odd),
            inv_sqrt_pi * z4 * (sn * s.v_even - c * s.v_odd)};
}

// Walk from (x0, y) to x in steps no longer than kMaxStep.
AiryPair continue_to(double x0, AiryPair y, double x) {
    const int steps = static_cast<int>(std::ceil(std::abs(x - x0) / kMaxStep));
    const double h = (x - x0) / steps;
    for (int i = 0; i < steps; ++i) {
        y = taylor_step(x0 + i * h, y, h);
    }
    return y;
}

}  // namespace

ZeroIndex::ZeroIndex(int k) : k_(k) {
    if (k < 1) {
        throw DomainError("airy: zero index must be >= 1, got " + std::to_string(k));
    }
}

AiryPair ai_pair(double x) {
    require_finite(x);
    if (std::abs(x) <= kMaclaurinRadius) {
        return maclaurin(x);
    }
    if (x >= kPosAsymptotic) {
        return asymptotic_positive(x);
    }
    if (x <= -kNegAsymptotic) {
        return asymptotic_negative(x);
    }
    if (x > 0.0) {
        // Ai is dominant when integrating toward smaller x, so walk inward.
        return continue_to(kPosAsymptotic, asymptotic_positive(kPosAsymptotic), x);
    }
    return continue_to(-kMaclaurinRadius, maclaurin(-kMaclaurinRadius), x);
}

double ai(double x) { return ai_pair(x).ai; }

double ai_prime(double x) { return ai_pair(x).ai_prime; }

double zero_estimate(ZeroIndex k) {
    const double t = 3.0 * std::numbers::pi * (4.0 * k.value() - 1.0) / 8.0;
    return -std::pow(t, 2.0 / 3.0);
}

double zero(ZeroIndex k) {
    const double seed = zero_estimate(k);
    const double below = zero_estimate(ZeroIndex(k.value() + 1));
    const double half_gap = 0.5 * (seed - below);
    double lo = seed - half_gap;
    double hi = seed + half_gap;
    double f_lo = ai(lo);
    if (f_lo * ai(hi) > 0.0) {
        throw NumericalError("airy: zero " + std::to_string(k.value()) + " not bracketed");
    }

    double x = seed;
    for (int iter = 0; iter < 100; ++iter) {
        const auto [f, fp] = ai_pair(x);
        if (f == 0.0) return x;
        if ((f < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = f;
        } else {
            hi = x;
        }
        double next = x - f / fp;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double step = std::abs(next - x);
        x = next;
        if (step <= 1e-15 * std::abs(x)) break;
    }
    return x;
}

double zero(int k) { return zero(ZeroIndex(k)); }

}  // namespace cornell::airy
