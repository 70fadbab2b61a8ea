#include "stablefrac/tanaka.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stablefrac/fracops.hpp"
#include "stablefrac/special.hpp"

namespace stablefrac {

namespace {

void require_recurrent(const StableParams& p) {
    if (!(p.alpha > 1.0))
        throw std::domain_error("alpha must lie in (1,2) for the Tanaka quantities");
}

double interp_linear(const GridFunction& g, double x) {
    const double t = (x - g.x0) / g.dx;
    if (t <= 0.0)
        return g.values.front();
    if (t >= static_cast<double>(g.size() - 1))
        return g.values.back();
    const std::size_t i = static_cast<std::size_t>(t);
    const double a = t - static_cast<double>(i);
    return (1.0 - a) * g.values[i] + a * g.values[i + 1];
}

} // namespace

TanakaConstants tanaka_constants(const StableParams& p) {
    require_recurrent(p);
    const double q = p.c_plus * p.c_plus + p.c_minus * p.c_minus +
                     2.0 * p.c_plus * p.c_minus * std::cos(p.alpha * M_PI);
    const double denom = gamma_real(p.alpha) * gamma_real(-p.alpha) * q;
    return {p.c_minus / denom, p.c_plus / denom};
}

double tanaka_F(const StableParams& p, double x) {
    const auto k = tanaka_constants(p);
    const double xp = std::max(x, 0.0);
    const double xm = std::max(-x, 0.0);
    return k.kappa_plus * std::pow(xm, p.alpha - 1.0) +
           k.kappa_minus * std::pow(xp, p.alpha - 1.0);
}

double class_C_eval(const StableParams& p, const SignedMeasure& mu, double x) {
    require_recurrent(p);
    double acc = 0.0;
    for (const auto& atom : mu.atoms) {
        if (!std::isfinite(atom.location) || !std::isfinite(atom.weight))
            throw std::invalid_argument("class_C_eval: non-finite atom");
        acc += atom.weight * tanaka_F(p, x - atom.location);
    }
    if (mu.density) {
        const GridFunction& rho = *mu.density;
        rho.validate();
        const auto k = tanaka_constants(p);
        const double ga = gamma_real(p.alpha);
        const GridFunction il = frac_integral(rho, p.alpha, Side::Left);
        const GridFunction ir = frac_integral(rho, p.alpha, Side::Right);
        acc += ga * (k.kappa_minus * interp_linear(il, x) +
                     k.kappa_plus * interp_linear(ir, x));
    }
    return acc;
}

PowerConstants power_constants(const StableParams& p, double gamma) {
    require_recurrent(p);
    if (!(gamma > p.alpha - 1.0) || !(gamma < p.alpha))
        throw std::domain_error("power_constants: gamma must lie in (alpha-1, alpha)");
    const double s = std::sin((gamma - p.alpha + 1.0) * M_PI);
    if (std::abs(s) < 1e-9)
        throw std::domain_error("power_constants: sin((gamma-alpha+1)pi) too small");
    const auto [mm, mp] = generator_constants(p);
    const double g = gamma_real(gamma + 1.0) / gamma_real(gamma - p.alpha + 1.0);
    const double s1 = std::sin((gamma + 1.0) * M_PI);
    const double s2 = std::sin(-p.alpha * M_PI);
    return {gamma,
            g * (mp * s2 / s + mm * s1 / s + mp),
            g * (mm * s2 / s + mp * s1 / s + mm)};
}

CriticalExponent critical_beta(const StableParams& p) {
    require_recurrent(p);
    const double a = std::cos(p.alpha * M_PI);
    const double c = std::min(p.c_minus, p.c_plus) / std::max(p.c_minus, p.c_plus);
    const double num = c * c * (1.0 - a * a) - (1.0 + a * c) * (1.0 + a * c);
    const double den = c * c * (1.0 - a * a) + (1.0 + a * c) * (1.0 + a * c);
    double arg = num / den;
    if (arg < -1.0 - 1e-12 || arg > 1.0 + 1e-12)
        throw std::domain_error("critical_beta: arccos argument out of range");
    arg = std::clamp(arg, -1.0, 1.0);
    return {a, c, std::acos(arg) / M_PI};
}

MartingaleClass classify(const StableParams& p, double gamma) {
    require_recurrent(p);
    if (!(gamma > p.alpha - 1.0) || !(gamma < p.alpha))
        throw std::domain_error("classify: gamma must lie in (alpha-1, alpha)");
    return gamma >= critical_beta(p).beta_crit ? MartingaleClass::Submartingale
                                               : MartingaleClass::SemimartingaleNonMonotone;
}

HPair h_functions(const StableParams& p, double gamma) {
    require_recurrent(p);
    const double c = std::min(p.c_minus, p.c_plus) / std::max(p.c_minus, p.c_plus);
    const double sa = std::sin(-p.alpha * M_PI);
    const double sg = std::sin(gamma * M_PI);
    const double sga = std::sin((gamma - p.alpha) * M_PI);
    return {sa - c * sg - sga, c * sa - sg - c * sga};
}

} // namespace stablefrac
