#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace stablefrac {

// Real function sampled on a uniform grid x_i = x0 + i*dx.
struct GridFunction {
    double x0 = 0.0;
    double dx = 1.0;
    std::vector<double> values;

    // Number of leading/trailing points computed with a lower-accuracy
    // one-sided stencil (set by derivative operations, 0 otherwise).
    std::size_t low_accuracy_edge = 0;

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }

    void validate() const;
};

// Discrete Fourier representation on frequencies u_k = (k - n/2) * du,
// k = 0..n-1 (ascending, u=0 at index n/2, n even). Convention:
// coeffs[k] ~ F[f](u_k) with F[f](u) = \int f(x) e^{+iux} dx.
struct SpectralFunction {
    double du = 1.0;
    std::vector<std::complex<double>> coeffs;

    std::size_t size() const { return coeffs.size(); }
    double u(std::size_t i) const {
        return (static_cast<double>(i) - static_cast<double>(coeffs.size()) / 2.0) * du;
    }
    std::size_t zero_index() const { return coeffs.size() / 2; }

    void validate() const;
};

// DFT bridge. FFTW computes sum f_n e^{-2*pi*i*k*n/N} for its FORWARD
// direction; our transform uses e^{+iux}, so the FFTW directions are swapped
// here (and only here) and the phase/scale factors for x0 and dx are applied.
// Grids must have even length.
SpectralFunction fft_forward(const GridFunction& f);
GridFunction fft_inverse(const SpectralFunction& s);              // symmetric grid, x0 = -n*dx/2
GridFunction fft_inverse(const SpectralFunction& s, double x0);

// JSON serialization (nlohmann). GridFunction: {x0, dx, values};
// SpectralFunction: {du, re, im} in ascending-frequency order.
std::string to_json_string(const GridFunction& f);
std::string to_json_string(const SpectralFunction& s);
GridFunction grid_from_json(const std::string& text);
SpectralFunction spectral_from_json(const std::string& text);

// Natural cubic spline on a uniform grid; f is taken to be 0 outside the
// grid. O(n) setup, O(1) evaluation.
class UniformSpline {
public:
    explicit UniformSpline(const GridFunction& f);
    double operator()(double x) const;

private:
    double x0_, dx_;
    std::vector<double> y_, m_; // values and second derivatives at nodes
};

} // namespace stablefrac
