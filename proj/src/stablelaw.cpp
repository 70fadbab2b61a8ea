#include "stablefrac/stablelaw.hpp"

#include <cmath>
#include <stdexcept>

#include "stablefrac/special.hpp"

namespace stablefrac {

SkewScaleParams to_skew_scale(const StableParams& p) {
    const double tot = p.c_minus + p.c_plus;
    const double sigma =
        -tot * gamma_real(-p.alpha) * std::cos(M_PI * p.alpha / 2.0);
    return {p.alpha, (p.c_plus - p.c_minus) / tot, sigma};
}

StableParams from_skew_scale(const SkewScaleParams& s) {
    if (!(s.sigma > 0.0) || std::abs(s.beta_skew) > 1.0)
        throw std::invalid_argument("from_skew_scale: need sigma > 0 and |beta| <= 1");
    const double tot =
        -s.sigma / (gamma_real(-s.alpha) * std::cos(M_PI * s.alpha / 2.0));
    double cp = tot * (1.0 + s.beta_skew) / 2.0;
    double cm = tot * (1.0 - s.beta_skew) / 2.0;
    if (cp < -1e-12 || cm < -1e-12)
        throw std::invalid_argument("from_skew_scale: inconsistent parameters");
    return {s.alpha, std::max(cm, 0.0), std::max(cp, 0.0)};
}

std::complex<double> char_exponent(const StableParams& p, double u) {
    if (u == 0.0)
        return {0.0, 0.0};
    const auto s = to_skew_scale(p);
    const double mag = s.sigma * std::pow(std::abs(u), p.alpha);
    const double sgn = u > 0.0 ? 1.0 : -1.0;
    return {-mag, -mag * s.beta_skew * sgn * std::tan(M_PI * p.alpha / 2.0)};
}

double levy_density(const StableParams& p, double h) {
    if (h == 0.0)
        throw std::domain_error("levy_density: h must be nonzero");
    const double c = h > 0.0 ? p.c_plus : p.c_minus;
    return c * std::pow(std::abs(h), -p.alpha - 1.0);
}

double sample_standard(const StableParams& p, Rng& rng) {
    const auto s = to_skew_scale(p);
    const double alpha = p.alpha;
    const double tb = s.beta_skew * std::tan(M_PI * alpha / 2.0);
    const double b = std::atan(tb) / alpha;
    const double scale = std::pow(1.0 + tb * tb, 0.5 / alpha);

    const double v = rng.uniform(-M_PI / 2.0, M_PI / 2.0);
    const double w = -std::log(rng.uniform()); // Exp(1)

    const double x = scale * std::sin(alpha * (v + b)) /
                     std::pow(std::cos(v), 1.0 / alpha) *
                     std::pow(std::cos(v - alpha * (v + b)) / w, (1.0 - alpha) / alpha);
    return std::pow(s.sigma, 1.0 / alpha) * x;
}

double empirical_moment(const StableParams& p, double gamma, double t,
                        std::size_t n, Rng& rng) {
    if (n == 0)
        throw std::invalid_argument("empirical_moment: need n >= 1");
    if (gamma == 0.0)
        return 1.0;
    const double scale = std::pow(t, 1.0 / p.alpha);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += std::pow(std::abs(scale * sample_standard(p, rng)), gamma);
    return acc / static_cast<double>(n);
}

} // namespace stablefrac
