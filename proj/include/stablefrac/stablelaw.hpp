#pragma once

#include <complex>
#include <cstddef>

#include "stablefrac/generator.hpp"
#include "stablefrac/rng.hpp"

namespace stablefrac {

// (alpha, skew, scale) parametrization:
//   beta_skew = (c_+ - c_-)/(c_+ + c_-),
//   sigma     = -(c_+ + c_-) Gamma(-alpha) cos(pi alpha / 2) > 0.
struct SkewScaleParams {
    double alpha;
    double beta_skew;
    double sigma;
};

SkewScaleParams to_skew_scale(const StableParams& p);
StableParams from_skew_scale(const SkewScaleParams& s);

// psi(u) = -sigma |u|^alpha (1 + i beta sgn(u) tan(pi alpha / 2)); identical
// to generator::symbol. Under the e^{+iux} transform convention used here
// this is the exponent of E e^{-iuX_1} (the classical exponent of E e^{+iuX}
// is its conjugate).
std::complex<double> char_exponent(const StableParams& p, double u);

// Density of the jump measure: (c_- 1{h<0} + c_+ 1{h>0}) |h|^{-alpha-1}.
double levy_density(const StableParams& p, double h);

// One draw of X_1 via the Chambers-Mallows-Stuck construction, strictly
// stable (no alpha = 1 case), scaled by sigma^{1/alpha}. Increments over dt
// are dt^{1/alpha} times a draw, by self-similarity.
double sample_standard(const StableParams& p, Rng& rng);

// Monte Carlo estimate of E|X_t|^gamma over n draws. Finite for
// gamma in (-1, alpha); outside that range the estimate is expected to
// diverge as n grows (callers use this as a qualitative check).
double empirical_moment(const StableParams& p, double gamma, double t,
                        std::size_t n, Rng& rng);

} // namespace stablefrac
