#include "stablefrac/generator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "stablefrac/special.hpp"

namespace stablefrac {

StableParams::StableParams(double alpha_, double c_minus_, double c_plus_)
    : alpha(alpha_), c_minus(c_minus_), c_plus(c_plus_) {
    if (!(alpha > 1e-6) || !(alpha < 2.0 - 1e-6) || std::abs(alpha - 1.0) < 1e-6)
        throw std::invalid_argument(
            "StableParams: alpha must lie in (0,2) away from {0,1,2} by 1e-6");
    if (c_minus < 0.0 || c_plus < 0.0 || !(c_minus + c_plus > 0.0))
        throw std::invalid_argument(
            "StableParams: need c_minus, c_plus >= 0 with c_minus + c_plus > 0");
}

GeneratorConstants generator_constants(const StableParams& p) {
    const double g = gamma_real(-p.alpha);
    return {p.c_minus * g, p.c_plus * g};
}

InverseConstants inverse_constants(const StableParams& p) {
    const auto [mm, mp] = generator_constants(p);
    const double denom = mm * mm + mp * mp + 2.0 * mm * mp * std::cos(M_PI * p.alpha);
    if (!(denom > 1e-300))
        throw std::domain_error("inverse_constants: degenerate denominator");
    return {mm / denom, mp / denom, denom};
}

std::complex<double> symbol(const StableParams& p, double u) {
    if (u == 0.0)
        return {0.0, 0.0};
    const auto [mm, mp] = generator_constants(p);
    return mm * cpow_principal({0.0, -u}, p.alpha) +
           mp * cpow_principal({0.0, u}, p.alpha);
}

namespace {

SpectralFunction spectral_derivative(const SpectralFunction& s, int m) {
    SpectralFunction d = s;
    for (std::size_t i = 0; i < s.size(); ++i)
        d.coeffs[i] *= cpow_principal({0.0, -s.u(i)}, static_cast<double>(m));
    return d;
}

double max_abs(const SpectralFunction& s) {
    double a = 0.0;
    for (const auto& c : s.coeffs)
        a = std::max(a, std::abs(c));
    return a;
}

// Compensated jump-integral evaluation of L on a grid. Node count and cutoffs
// were fixed against the spectral path (agreement ~4e-4 at n=4096 on the
// Lizorkin family).
GridFunction generator_quadrature(const StableParams& p, const GridFunction& f,
                                  bool parallel) {
    f.validate();
    const std::size_t n = f.size();
    if (n % 2 != 0 || n < 8)
        throw std::invalid_argument("apply_generator: need an even grid length >= 8");
    const double alpha = p.alpha;
    const bool compensate = alpha > 1.0;

    const SpectralFunction fhat = fft_forward(f);
    const GridFunction d1 = fft_inverse(spectral_derivative(fhat, 1), f.x0);
    const GridFunction d2 = fft_inverse(spectral_derivative(fhat, 2), f.x0);
    const GridFunction d3 = fft_inverse(spectral_derivative(fhat, 3), f.x0);
    const UniformSpline spline(f);

    const double span = f.dx * static_cast<double>(n - 1);
    const double hc = f.dx;
    const double hmax = 2.5 * span;
    const std::size_t m_nodes = 800;
    const double l0 = std::log(hc), l1 = std::log(hmax);
    const double dl = (l1 - l0) / static_cast<double>(m_nodes - 1);
    std::vector<double> h(m_nodes), w(m_nodes);
    for (std::size_t j = 0; j < m_nodes; ++j) {
        h[j] = std::exp(l0 + dl * static_cast<double>(j));
        // log-trapezoid: dh = h dl
        w[j] = h[j] * dl * ((j == 0 || j == m_nodes - 1) ? 0.5 : 1.0);
    }

    GridFunction out;
    out.x0 = f.x0;
    out.dx = f.dx;
    out.values.assign(n, 0.0);

    const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long ii = 0; ii < nn; ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        const double x = f.x(i);
        const double fx = f.values[i];
        const double fp = d1.values[i];
        const double fpp = d2.values[i];
        const double fppp = d3.values[i];
        double total = 0.0;
        for (const double s : {-1.0, 1.0}) {
            const double c = (s < 0.0) ? p.c_minus : p.c_plus;
            if (c == 0.0)
                continue;
            // analytic Taylor value of the integral over (0, hc]
            double acc = 0.5 * fpp * std::pow(hc, 2.0 - alpha) / (2.0 - alpha) +
                         s * fppp * std::pow(hc, 3.0 - alpha) / (6.0 * (3.0 - alpha));
            if (!compensate)
                acc += s * fp * std::pow(hc, 1.0 - alpha) / (1.0 - alpha);
            // log-spaced nodes on [hc, hmax]
            for (std::size_t j = 0; j < m_nodes; ++j) {
                const double fv = spline(x + s * h[j]);
                double integrand = fv - fx;
                if (compensate)
                    integrand -= s * h[j] * fp;
                acc += integrand * std::pow(h[j], -1.0 - alpha) * w[j];
            }
            // analytic tail beyond hmax, where f itself has decayed to 0
            acc -= fx * std::pow(hmax, -alpha) / alpha;
            if (compensate)
                acc -= s * fp * std::pow(hmax, 1.0 - alpha) / (alpha - 1.0);
            total += c * acc;
        }
        out.values[i] = total;
    }
    return out;
}

} // namespace

SpectralFunction apply_generator(const StableParams& p, const SpectralFunction& f) {
    f.validate();
    SpectralFunction out = f;
    for (std::size_t i = 0; i < f.size(); ++i)
        out.coeffs[i] = f.coeffs[i] * symbol(p, f.u(i));
    return out;
}

GridFunction apply_generator(const StableParams& p, const GridFunction& f, Method m) {
    if (m == Method::Spectral)
        return fft_inverse(apply_generator(p, fft_forward(f)), f.x0);
    return generator_quadrature(p, f, true);
}

SpectralFunction invert_generator(const StableParams& p, const SpectralFunction& f) {
    f.validate();
    SpectralFunction out = f;
    const std::size_t zi = f.zero_index();
    const double amax = max_abs(f);
    if (std::abs(f.coeffs[zi]) > 1e-10 * amax && amax > 0.0)
        throw std::invalid_argument(
            "invert_generator: nonzero u=0 coefficient (not a Lizorkin function)");
    for (std::size_t i = 0; i < f.size(); ++i)
        out.coeffs[i] = (i == zi) ? std::complex<double>(0.0)
                                  : f.coeffs[i] / symbol(p, f.u(i));
    return out;
}

GridFunction invert_generator(const StableParams& p, const GridFunction& f, Method m) {
    if (m == Method::Spectral)
        return fft_inverse(invert_generator(p, fft_forward(f)), f.x0);
    const auto k = inverse_constants(p);
    const GridFunction il = frac_integral(f, p.alpha, Side::Left);
    const GridFunction ir = frac_integral(f, p.alpha, Side::Right);
    GridFunction out = il;
    for (std::size_t i = 0; i < out.size(); ++i)
        out.values[i] = k.k_minus * il.values[i] + k.k_plus * ir.values[i];
    return out;
}

PowerImage generator_on_power(const StableParams& p, double gamma, Side branch) {
    if (!(gamma > p.alpha - 1.0) || !(gamma < p.alpha))
        throw std::domain_error("generator_on_power: gamma must lie in (alpha-1, alpha)");
    const double s = std::sin((gamma - p.alpha + 1.0) * M_PI);
    if (std::abs(s) < 1e-9)
        throw std::domain_error("generator_on_power: sin((gamma-alpha+1)pi) too small");
    const auto [mm, mp] = generator_constants(p);
    const double g = gamma_real(gamma + 1.0) / gamma_real(gamma - p.alpha + 1.0);
    const double s1 = std::sin((gamma + 1.0) * M_PI);
    const double s2 = std::sin(-p.alpha * M_PI);
    if (branch == Side::Left) // image of x_+^gamma
        return {g * (mm + mp * s1 / s), g * mp * s2 / s};
    return {g * mm * s2 / s, g * (mp + mm * s1 / s)}; // image of x_-^gamma
}

namespace serial_ref {
GridFunction apply_generator_quadrature(const StableParams& p, const GridFunction& f) {
    return generator_quadrature(p, f, false);
}
} // namespace serial_ref

} // namespace stablefrac
