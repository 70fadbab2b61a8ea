// Independent numerical oracles used only by the tests.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "stablefrac/generator.hpp"

namespace oracles {

// Double-exponential (tanh-sinh) quadrature on (a, b); integrand may be
// singular at either endpoint. Levels are doubled until two successive
// estimates agree to rel_tol.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-11) {
    const double rad = 0.5 * (b - a);
    const double tmax = 5.0;
    double prev = 0.0;
    double result = 0.0;
    for (int level = 2; level <= 12; ++level) {
        const double h = tmax / std::ldexp(1.0, level);
        double sum = 0.0;
        const long kmax = static_cast<long>(tmax / h);
        for (long k = -kmax; k <= kmax; ++k) {
            const double t = static_cast<double>(k) * h;
            const double s = std::sinh(t) * M_PI / 2.0;
            // Distance to the nearer endpoint, computed without the
            // cancellation in mid + rad*tanh(s) that would otherwise snap
            // near-endpoint nodes onto the endpoint and lose the mass of
            // strong integrable singularities.
            const double e2 = std::exp(-2.0 * std::abs(s));
            const double dist = rad * 2.0 * e2 / (1.0 + e2);
            const double x = s >= 0.0 ? b - dist : a + dist;
            const double w = rad * h * (M_PI / 2.0) * std::cosh(t) /
                             (std::cosh(s) * std::cosh(s));
            if (x <= a || x >= b || w < 1e-300)
                continue;
            const double v = f(x);
            if (std::isfinite(v))
                sum += w * v;
        }
        if (level > 3 && std::abs(sum - prev) <= rel_tol * (std::abs(sum) + 1e-300)) {
            result = sum;
            return result;
        }
        prev = sum;
        result = sum;
    }
    return result;
}

// Integral over (a, +inf) via h = a + (1-t)/t.
inline double tanh_sinh_upper(const std::function<double(double)>& f, double a,
                              double rel_tol = 1e-11) {
    return tanh_sinh(
        [&](double t) { return f(a + (1.0 - t) / t) / (t * t); }, 0.0, 1.0, rel_tol);
}

// Integral over (-inf, b) via h = b - (1-t)/t.
inline double tanh_sinh_lower(const std::function<double(double)>& f, double b,
                              double rel_tol = 1e-11) {
    return tanh_sinh(
        [&](double t) { return f(b - (1.0 - t) / t) / (t * t); }, 0.0, 1.0, rel_tol);
}

// Gamma at negative non-integer arguments by plain recursion
// Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1)); independent of the
// reflection-based library path.
inline double gamma_recursion(double x) {
    double denom = 1.0;
    while (x < 0.5) {
        denom *= x;
        x += 1.0;
    }
    return std::tgamma(x) / denom;
}

// Direct jump-integral evaluation of (L f)(x) for a function with a single
// kink at 0 (f and derivatives up to third order supplied as callables,
// derivatives away from 0). Compensation per the alpha regime; integration
// split at the kink h = -x. The band |h| < delta is handled analytically
// via the Taylor expansion of f at x: the compensated difference there is
// pure cancellation noise that the singular kernel would otherwise amplify.
inline double nu_apply(const stablefrac::StableParams& p,
                       const std::function<double(double)>& f,
                       const std::function<double(double)>& fp,
                       const std::function<double(double)>& fpp,
                       const std::function<double(double)>& fppp, double x) {
    if (x == 0.0)
        throw std::invalid_argument("nu_apply: x must avoid the kink");
    const bool comp = p.alpha > 1.0;
    const double fx = f(x), fpx = fp(x);
    auto integrand = [&](double h) {
        const double c = h > 0.0 ? p.c_plus : p.c_minus;
        if (c == 0.0)
            return 0.0;
        double v = f(x + h) - fx;
        if (comp)
            v -= h * fpx;
        return c * v * std::pow(std::abs(h), -1.0 - p.alpha);
    };
    const double delta = 1e-3 * std::abs(x);
    const double brk = -x; // image kink
    double total = 0.0;
    if (brk > 0.0) {
        total += tanh_sinh_lower(integrand, -delta);
        total += tanh_sinh(integrand, delta, brk);
        total += tanh_sinh_upper(integrand, brk);
    } else {
        total += tanh_sinh_lower(integrand, brk);
        total += tanh_sinh(integrand, brk, -delta);
        total += tanh_sinh_upper(integrand, delta);
    }
    // Analytic |h| < delta band; truncation after the cubic term is
    // O((delta/|x|)^2) relative to the leading contribution.
    const double sum_c = p.c_plus + p.c_minus;
    const double dif_c = p.c_plus - p.c_minus;
    total += 0.5 * fpp(x) * sum_c * std::pow(delta, 2.0 - p.alpha) / (2.0 - p.alpha);
    total += fppp(x) / 6.0 * dif_c * std::pow(delta, 3.0 - p.alpha) / (3.0 - p.alpha);
    if (!comp)
        total += fpx * dif_c * std::pow(delta, 1.0 - p.alpha) / (1.0 - p.alpha);
    return total;
}

// Oracle for L|.|^gamma at x (both one-sided powers combined).
inline double nu_power_abs(const stablefrac::StableParams& p, double gamma, double x) {
    auto deriv = [gamma](int k) {
        double c = 1.0;
        for (int j = 0; j < k; ++j)
            c *= gamma - j;
        return [c, gamma, k](double y) {
            const double sgn = y > 0.0 ? 1.0 : -1.0;
            return c * std::pow(std::abs(y), gamma - k) * (k % 2 == 1 ? sgn : 1.0);
        };
    };
    return nu_apply(
        p, [gamma](double y) { return std::pow(std::abs(y), gamma); }, deriv(1),
        deriv(2), deriv(3), x);
}

// Oracle for L x_+^gamma at x.
inline double nu_power_plus(const stablefrac::StableParams& p, double gamma, double x) {
    auto deriv = [gamma](int k) {
        double c = 1.0;
        for (int j = 0; j < k; ++j)
            c *= gamma - j;
        return [c, gamma, k](double y) {
            return y > 0.0 ? c * std::pow(y, gamma - k) : 0.0;
        };
    };
    return nu_apply(
        p, [gamma](double y) { return y > 0.0 ? std::pow(y, gamma) : 0.0; }, deriv(1),
        deriv(2), deriv(3), x);
}

} // namespace oracles
