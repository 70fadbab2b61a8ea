#pragma once

#include <complex>

#include "stablefrac/fracops.hpp"
#include "stablefrac/gridfun.hpp"

namespace stablefrac {

// Process parameters (alpha, c_minus, c_plus). alpha is kept away from
// {0, 1, 2} by a 1e-6 margin; the jump weights are nonnegative with
// c_minus + c_plus > 0.
struct StableParams {
    double alpha;
    double c_minus;
    double c_plus;

    StableParams(double alpha_, double c_minus_, double c_plus_);
};

// M_pm = c_pm * Gamma(-alpha): the weights of the fractional-derivative form
// of the generator L = M_minus D_-^alpha + M_plus D_+^alpha.
struct GeneratorConstants {
    double m_minus;
    double m_plus;
};

// K_pm = M_pm / (M_-^2 + M_+^2 + 2 M_- M_+ cos(pi alpha)): the weights of the
// inverse L^{-1} = K_minus I_-^alpha + K_plus I_+^alpha.
struct InverseConstants {
    double k_minus;
    double k_plus;
    double denom;
};

GeneratorConstants generator_constants(const StableParams& p);
InverseConstants inverse_constants(const StableParams& p);

// Fourier multiplier of L: psi(u) = M_-(-iu)^alpha + M_+(iu)^alpha, principal
// branch. Re psi <= 0 everywhere.
std::complex<double> symbol(const StableParams& p, double u);

enum class Method { Quadrature, Spectral };

// Apply L. The quadrature method evaluates the jump-integral form
//   c_- \int_0^inf [f(x-h) - f(x) + h f'(x)] h^{-1-alpha} dh + (mirror, c_+)
// (first-order compensation only for alpha > 1) with spectral derivatives of
// f, an analytic Taylor segment below the grid spacing, log-spaced nodes up
// to h_max and an analytic tail beyond. The spectral method multiplies the
// DFT by the symbol.
GridFunction apply_generator(const StableParams& p, const GridFunction& f, Method m);
SpectralFunction apply_generator(const StableParams& p, const SpectralFunction& f);

// Apply L^{-1} = K_- I_-^alpha + K_+ I_+^alpha. Spectral input must vanish
// at u = 0 (Lizorkin condition).
GridFunction invert_generator(const StableParams& p, const GridFunction& f, Method m);
SpectralFunction invert_generator(const StableParams& p, const SpectralFunction& f);

// Closed-form image of the one-sided power x_pm^gamma under L, expressed as
//   L f_pm^gamma (x) = coef_plus * x_+^{gamma-alpha} + coef_minus * x_-^{gamma-alpha}
// for gamma in (alpha-1, alpha). branch selects f_+ (Left) or f_- (Right).
struct PowerImage {
    double coef_plus;
    double coef_minus;
};
PowerImage generator_on_power(const StableParams& p, double gamma, Side branch);

namespace serial_ref {
GridFunction apply_generator_quadrature(const StableParams& p, const GridFunction& f);
} // namespace serial_ref

} // namespace stablefrac
