#include "stacksort/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace stacksort {

namespace {

struct AdaptContext {
    const std::function<double(double)>& f;
    int max_depth;
    double err = 0.0;
    bool converged = true;
};

double simpson(double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(AdaptContext& ctx, double a, double fa, double m, double fm, double b,
             double fb, double whole, double tol, int depth)
{
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = ctx.f(lm);
    const double frm = ctx.f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth >= ctx.max_depth || std::abs(delta) <= 15.0 * tol) {
        if (depth >= ctx.max_depth && std::abs(delta) > 15.0 * tol)
            ctx.converged = false;
        ctx.err += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adapt(ctx, a, fa, lm, flm, m, fm, left, tol / 2.0, depth + 1) +
           adapt(ctx, m, fm, rm, frm, b, fb, right, tol / 2.0, depth + 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth, double* err_estimate, bool* converged)
{
    AdaptContext ctx{f, max_depth};
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = simpson(a, b, fa, fm, fb);
    const double result = adapt(ctx, a, fa, m, fm, b, fb, whole, tol, 0);
    if (err_estimate)
        *err_estimate = ctx.err;
    if (converged)
        *converged = ctx.converged;
    return result;
}

double logarithmic_integral(double x, double tol)
{
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error("logarithmic_integral: x must lie in (0, 1)");
    const auto integrand = [](double t) {
        if (t <= 0.0)
            return 0.0; // limit of 1/log t as t -> 0+
        return 1.0 / std::log(t);
    };
    return adaptive_simpson(integrand, 0.0, x, tol);
}

QuadratureResult golomb_dickman(double tol)
{
    // e^{li(x)} decreases from 1 to 0; stop just short of 1, where the
    // integrand is ~ e^gamma (1-x) and the discarded tail is ~ 1e-14.
    const double upper = 1.0 - 1e-7;
    const auto integrand = [](double x) {
        if (x <= 0.0)
            return 1.0; // li(0+) = 0
        return std::exp(logarithmic_integral(x, 1e-10));
    };
    QuadratureResult result;
    result.value =
        adaptive_simpson(integrand, 0.0, upper, tol, 48, &result.error_estimate,
                         &result.converged);
    result.error_estimate += 2e-14; // tail bound
    return result;
}

double f0_slope()
{
    return 3.0 * std::log(2.0) - 2.0;
}

double f0_intercept()
{
    return 2.5 - 3.0 * std::log(2.0);
}

std::vector<AffineCoefficients> f_coefficients(int ell_max)
{
    if (ell_max < 0)
        throw std::out_of_range("f_coefficients: ell_max must be nonnegative");
    std::vector<AffineCoefficients> out;
    out.reserve(static_cast<std::size_t>(ell_max) + 1);
    double a = f0_slope();
    double b = f0_intercept();
    out.push_back({0, a, b});
    for (int ell = 1; ell <= ell_max; ++ell) {
        const double na = 3.0 / 8.0 * a;
        const double nb = 1.0 / 8.0 * a + 0.5 * b;
        a = na;
        b = nb;
        out.push_back({ell, a, b});
    }
    return out;
}

AffineCoefficients f_coefficients_closed(int ell)
{
    if (ell < 0)
        throw std::out_of_range("f_coefficients_closed: ell must be nonnegative");
    const double a0 = f0_slope();
    const double b0 = f0_intercept();
    AffineCoefficients c;
    c.ell = ell;
    c.a = std::pow(3.0 / 8.0, ell) * a0;
    c.b = std::pow(2.0, -ell) * ((1.0 - std::pow(3.0 / 4.0, ell)) * a0 + b0);
    return c;
}

double sum_b(int ell_max)
{
    double total = 0.0;
    for (const auto& c : f_coefficients(ell_max))
        total += c.b;
    return total;
}

double depth_upper_bound_constant()
{
    return 3.0 / 5.0 * (7.0 - 8.0 * std::log(2.0));
}

double f0_integral_check(double x)
{
    if (x < 0.0 || x >= 1.0)
        throw std::domain_error("f0_integral_check: x must lie in [0, 1)");
    const auto integrand = [x](double y) {
        const double q = (1.0 - y) / (y - x);
        const double q2 = q * q;
        return (1.0 - q2) * y + q2;
    };
    const double lo = (x + 1.0) / 2.0;
    return adaptive_simpson(integrand, lo, 1.0, 1e-9) / (1.0 - x);
}

} // namespace stacksort
