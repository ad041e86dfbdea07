#pragma once

#include <functional>
#include <vector>

namespace stacksort {

// Adaptive Simpson quadrature with Richardson correction. `err_estimate`
// accumulates the per-interval corrections; `converged` clears when the
// depth limit is hit before the tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48, double* err_estimate = nullptr,
                        bool* converged = nullptr);

// li(x) = integral of dt/log t over [0, x], for x in (0, 1). Negative and
// decreasing there; li(x) -> -inf as x -> 1-, so accuracy degrades very
// close to 1 (the integrand blows up like 1/(t-1)).
double logarithmic_integral(double x, double tol = 1e-10);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

// lambda = integral of e^{li(x)} over [0, 1]; about 0.62433.
QuadratureResult golomb_dickman(double tol = 1e-7);

// F_ell(x) = a_ell * x + b_ell on (0, 1).
struct AffineCoefficients {
    int ell = 0;
    double a = 0.0;
    double b = 0.0;
};

double f0_slope();     // 3 log 2 - 2
double f0_intercept(); // 5/2 - 3 log 2

// Coefficients 0..ell_max via the recurrence a_ell = (3/8) a_{ell-1},
// b_ell = (1/8) a_{ell-1} + (1/2) b_{ell-1}.
std::vector<AffineCoefficients> f_coefficients(int ell_max);

// Closed forms: a_ell = (3/8)^ell a_0, b_ell = 2^{-ell}((1-(3/4)^ell) a_0 + b_0).
AffineCoefficients f_coefficients_closed(int ell);

// Partial sum of b_ell for ell <= ell_max (geometric tail, ratio <= 1/2).
double sum_b(int ell_max = 60);

// (3/5)(7 - 8 log 2), the closed form of the full sum; about 0.87289.
double depth_upper_bound_constant();

// Evaluates the defining integral of F_0 at x numerically; must match
// a_0 x + b_0.
double f0_integral_check(double x);

} // namespace stacksort
