#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace stablefrac {

// Gamma for real non-integer arguments. Negative arguments go through the
// reflection formula Gamma(x) = pi / (sin(pi x) Gamma(1-x)) to avoid the
// accuracy loss of iterated recursion.
inline double gamma_real(double x) {
    if (x > 0.0)
        return std::tgamma(x);
    if (x == std::floor(x))
        throw std::domain_error("gamma_real: pole at non-positive integer");
    return M_PI / (std::sin(M_PI * x) * std::tgamma(1.0 - x));
}

// All complex powers in the library route through here: principal branch,
// arg in (-pi, pi].
inline std::complex<double> cpow_principal(std::complex<double> base, double expo) {
    if (base == std::complex<double>(0.0, 0.0)) {
        if (expo > 0.0) return {0.0, 0.0};
        throw std::domain_error("cpow_principal: 0 raised to non-positive power");
    }
    return std::pow(base, expo);
}

} // namespace stablefrac
