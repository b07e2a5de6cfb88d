#pragma once

// Closed-form eigenvalue expressions for the dimensionless radial problem:
// the linear-potential interpolation formula in the Airy zeros, its
// large-quantum-number expansion, Regge-type asymptotics, a WKB reference,
// and the Cornell (linear plus Coulomb) fit.

namespace cornell::closed_forms {

struct DeltaConstants {
    double delta1 = 0.797533;
    double delta2 = 0.797804;
    double delta = 0.798;  ///< common value, close to sqrt(2/pi)
};

/// Constants of the Cornell fit f(a, n, l), g(a).
struct CornellFitConstants {
    double al1, al2, al3, al4, al5;
    double bl1, bl2, bl3, bl4, bl5;
    double cl1, cl2, cl3, cl4, cl5;
    double dl1, dl2, dl3, dl4, dl5;
    double an1, an2, bn1, bn2, cn1, cn2, dn1, dn2, en1, en2;
    double f1, f2;
};

/// The published constant set.
const CornellFitConstants& published_fit_constants() noexcept;

/// pi^{2/3} / 3^{1/3}.
double radial_weight() noexcept;

/// lambda_nl = -(d1 l + w d2 n + 1) / (w (d1 l + d2 n) + 1) * a_{n+l+1},
/// w = pi^{2/3}/3^{1/3}. Exact at l = 0.
double lambda_linear(int n, int l, const DeltaConstants& consts = {});

/// The ratio multiplying -a_{n+l+1} in lambda_linear.
double linear_ratio(int n, int l, const DeltaConstants& consts = {});

/// Large n + l expansion of lambda_linear, using a single delta.
double lambda_linear_expanded(int n, int l, double delta = DeltaConstants{}.delta);

/// [(3 pi / 2)(n + l/2 + 3/4)]^{2/3}.
double wkb_linear(int n, int l);

/// [(3 pi / 2) n]^{2/3}
double regge_n(int n);
/// [(3 pi / 2)(n + l)]^{2/3}
double regge_nl(int n, int l);
/// [(3^{3/2} / 2) l]^{2/3}
double regge_l(int l);
/// [(3^{3/2} / 2)(l + n)]^{2/3}
double regge_ln(int l, int n);

/// Multiplicative correction f(a, n, l) of the Airy term; f(0, n, l) = 1.
double cornell_f(double a, int n, int l,
                 const CornellFitConstants& consts = published_fit_constants());

/// Additive shift g(a) = f1 (1 - exp(-f2 a)).
double cornell_g(double a, const CornellFitConstants& consts = published_fit_constants());

/// -a^2 / (4 (n + l + 1)^2) + lambda_linear(n, l) f(a, n, l) + g(a).
double cornell_eigenvalue(double a, int n, int l,
                          const CornellFitConstants& consts = published_fit_constants(),
                          const DeltaConstants& deltas = {});

}  // namespace cornell::closed_forms
