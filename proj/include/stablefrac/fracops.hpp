#pragma once

#include <complex>

#include "stablefrac/gridfun.hpp"

namespace stablefrac {

// Signed fractional order: lambda > 0 means the integral I^lambda,
// lambda < 0 the derivative D^{-lambda}, lambda = 0 the identity.
struct FracOrder {
    double lambda = 0.0;
};

// Left operators integrate from -infinity up to x, Right from x to +infinity.
enum class Side { Left, Right };

// Fractional integral of positive order via product integration: on every
// cell the kernel |x-t|^{order-1} is integrated exactly against the linear
// interpolant of f. Values beyond the grid are treated as 0 (callers must
// pick grids on which f has decayed; the dropped tail is the error-budget
// item documented in README).
GridFunction frac_integral(const GridFunction& f, double order, Side side);

// Fractional derivative: d^n/dx^n of frac_integral(f, n-order) with
// n = ceil(order), times (-1)^n on the Right side. The outer derivative is a
// 2nd-order central stencil, one-sided at the edges; the edge points are
// flagged via GridFunction::low_accuracy_edge.
GridFunction frac_derivative(const GridFunction& f, double order, Side side);

// Dispatch on the sign of the order; lambda = 0 returns f unchanged.
GridFunction frac_op(const GridFunction& f, FracOrder order, Side side);

// Fourier multiplier of the fractional operator of signed order under the
// convention F[f](u) = \int f(x) e^{+iux} dx:
//   Left:  (-iu)^{-order},  Right: (iu)^{-order},
// principal branch. order > 0 (an integral) is singular at u = 0.
std::complex<double> spectral_multiplier(double order, Side side, double u);

// Pointwise multiplication of the coefficients by spectral_multiplier.
// Integrals (order > 0) require a vanishing u=0 coefficient.
SpectralFunction apply_spectral(const SpectralFunction& f, double order, Side side);

// Fourier transform of a real test function whose spectrum is a smooth bump
// supported away from u = 0 (Hermitian-symmetrized), so that the transform
// vanishes at 0 together with all derivatives, exactly, by construction.
SpectralFunction lizorkin_test(int vanish_order, double center, double width,
                               double du, std::size_t n);

// Coefficients (A_minus, A_plus) of the crossed composition
//   W_+^lambda W_-^mu = A_minus W_-^{lambda+mu} + A_plus W_+^{lambda+mu},
// defined for lambda+mu not an integer.
struct CrossedCoeffs {
    double a_minus = 0.0;
    double a_plus = 0.0;
};
CrossedCoeffs crossed_compose_coeffs(double lambda, double mu);

namespace serial_ref {
// Reference implementation of the quadrature kernel without the parallel
// loop; kept for correctness comparisons and benchmarks.
GridFunction frac_integral(const GridFunction& f, double order, Side side);
} // namespace serial_ref

} // namespace stablefrac
