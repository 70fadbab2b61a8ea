#include "stablefrac/fracops.hpp"

#include <cmath>
#include <stdexcept>

#include "stablefrac/special.hpp"

namespace stablefrac {

namespace {

void check_input(const GridFunction& f, double order) {
    f.validate();
    if (!(order > 0.0))
        throw std::invalid_argument("fractional order must be positive");
    if (f.size() < 4)
        throw std::invalid_argument("grid too short (need n >= 4)");
}

// Product-integration weights. With c_j = (j^a - (j-1)^a)/a and
// d_j = (j^{a+1} - (j-1)^{a+1})/(a+1) (kernel moments over one cell),
// the lower integral at node n is
//   I_n = dx^a/Gamma(a) * sum_{k=0}^{n} W(k, n) f_{n-k},
// where the weight of f_{n-k} collects the linear-interpolant contributions
// of the two cells touching it.
struct PiWeights {
    std::vector<double> inner; // W(k) for 1 <= k <= n-1, independent of n
    std::vector<double> w0;    // weight of the singular-end sample (k = 0)
    std::vector<double> last;  // boundary weight of f_0 as a function of n
    double scale;

    PiWeights(double a, std::size_t n, double dx) {
        std::vector<double> c(n + 2), d(n + 2);
        for (std::size_t j = 1; j <= n + 1; ++j) {
            const double jj = static_cast<double>(j);
            c[j] = (std::pow(jj, a) - std::pow(jj - 1.0, a)) / a;
            d[j] = (std::pow(jj, a + 1.0) - std::pow(jj - 1.0, a + 1.0)) / (a + 1.0);
        }
        inner.assign(n + 1, 0.0);
        last.assign(n + 1, 0.0);
        w0.assign(1, 1.0 * c[1] - d[1]);
        for (std::size_t k = 1; k <= n; ++k) {
            const double kk = static_cast<double>(k);
            last[k] = d[k] - (kk - 1.0) * c[k];
            if (k < n)
                inner[k] = last[k] + (kk + 1.0) * c[k + 1] - d[k + 1];
        }
        scale = std::pow(dx, a) / gamma_real(a);
    }
};

GridFunction frac_integral_impl(const GridFunction& f, double order, Side side,
                                bool parallel) {
    check_input(f, order);
    const std::size_t n = f.size();
    const PiWeights w(order, n, f.dx);

    // Mirror the Right case by flipping the data.
    std::vector<double> in(n);
    for (std::size_t i = 0; i < n; ++i)
        in[i] = (side == Side::Left) ? f.values[i] : f.values[n - 1 - i];

    std::vector<double> out(n, 0.0);
    const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long i = 1; i < nn; ++i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        double acc = w.w0[0] * in[ui];
        for (std::size_t k = 1; k < ui; ++k)
            acc += w.inner[k] * in[ui - k];
        acc += w.last[ui] * in[0];
        out[ui] = w.scale * acc;
    }

    GridFunction g;
    g.x0 = f.x0;
    g.dx = f.dx;
    g.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        g.values[i] = (side == Side::Left) ? out[i] : out[n - 1 - i];
    return g;
}

} // namespace

GridFunction frac_integral(const GridFunction& f, double order, Side side) {
    return frac_integral_impl(f, order, side, true);
}

namespace serial_ref {
GridFunction frac_integral(const GridFunction& f, double order, Side side) {
    return frac_integral_impl(f, order, side, false);
}
} // namespace serial_ref

GridFunction frac_derivative(const GridFunction& f, double order, Side side) {
    check_input(f, order);
    const double nearest = std::round(order);
    if (std::abs(order - nearest) < 1e-12 && nearest >= 1.0)
        throw std::invalid_argument(
            "frac_derivative: integer order; use plain integer differentiation");
    if (order >= 2.0)
        throw std::invalid_argument("frac_derivative: order must be < 2");

    const int n_outer = static_cast<int>(std::ceil(order));
    GridFunction g = frac_integral(f, static_cast<double>(n_outer) - order, side);
    const std::size_t n = g.size();
    const double dx = g.dx;

    GridFunction d;
    d.x0 = g.x0;
    d.dx = dx;
    d.values.assign(n, 0.0);
    d.low_accuracy_edge = 1;
    const double sign = (side == Side::Right && n_outer % 2 == 1) ? -1.0 : 1.0;

    const auto& v = g.values;
    if (n_outer == 1) {
        for (std::size_t i = 1; i + 1 < n; ++i)
            d.values[i] = sign * (v[i + 1] - v[i - 1]) / (2.0 * dx);
        d.values[0] = sign * (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dx);
        d.values[n - 1] = sign * (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dx);
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i)
            d.values[i] = sign * (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (dx * dx);
        d.values[0] = sign * (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / (dx * dx);
        d.values[n - 1] =
            sign * (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) / (dx * dx);
    }
    return d;
}

GridFunction frac_op(const GridFunction& f, FracOrder order, Side side) {
    if (order.lambda == 0.0)
        return f;
    if (order.lambda > 0.0)
        return frac_integral(f, order.lambda, side);
    return frac_derivative(f, -order.lambda, side);
}

std::complex<double> spectral_multiplier(double order, Side side, double u) {
    if (u == 0.0) {
        if (order > 0.0)
            throw std::domain_error("spectral_multiplier: singular at u = 0");
        if (order == 0.0)
            return {1.0, 0.0};
        return {0.0, 0.0};
    }
    const std::complex<double> base(0.0, side == Side::Left ? -u : u);
    return cpow_principal(base, -order);
}

SpectralFunction apply_spectral(const SpectralFunction& f, double order, Side side) {
    f.validate();
    SpectralFunction out = f;
    double amax = 0.0;
    for (const auto& c : f.coeffs)
        amax = std::max(amax, std::abs(c));
    const std::size_t zi = f.zero_index();
    if (order > 0.0 && std::abs(f.coeffs[zi]) > 1e-10 * amax && amax > 0.0)
        throw std::invalid_argument(
            "apply_spectral: nonzero u=0 coefficient with a fractional integral");
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i == zi) {
            out.coeffs[i] = (order < 0.0) ? std::complex<double>(0.0)
                                          : (order == 0.0 ? f.coeffs[i]
                                                          : std::complex<double>(0.0));
            continue;
        }
        out.coeffs[i] = f.coeffs[i] * spectral_multiplier(order, side, f.u(i));
    }
    return out;
}

SpectralFunction lizorkin_test(int vanish_order, double center, double width,
                               double du, std::size_t n) {
    if (vanish_order < 1)
        throw std::invalid_argument("lizorkin_test: vanish_order must be >= 1");
    if (center == 0.0)
        throw std::invalid_argument("lizorkin_test: center must be nonzero");
    if (!(width > 0.0) || !(du > 0.0) || n < 8 || n % 2 != 0)
        throw std::invalid_argument("lizorkin_test: bad grid spec");
    const double c0 = std::abs(center);
    if (c0 - width / 2.0 <= du)
        throw std::invalid_argument("lizorkin_test: bump support touches u = 0");
    if (c0 + width / 2.0 >= (static_cast<double>(n) / 2.0 - 1.0) * du)
        throw std::invalid_argument("lizorkin_test: bump support exceeds the grid");

    SpectralFunction s;
    s.du = du;
    s.coeffs.assign(n, {0.0, 0.0});
    for (std::size_t i = 1; i < n; ++i) {
        const double u = s.u(i);
        const double a = std::abs(u);
        const double t = (a - c0) / (width / 2.0);
        if (std::abs(t) >= 1.0 || u == 0.0)
            continue;
        const double amp =
            std::exp(1.0 - 1.0 / (1.0 - t * t)) * std::pow(a / c0, vanish_order);
        // small odd imaginary part so the real-space function is not even
        s.coeffs[i] = amp * std::complex<double>(1.0, 0.3 * (u > 0.0 ? 1.0 : -1.0));
    }
    return s;
}

CrossedCoeffs crossed_compose_coeffs(double lambda, double mu) {
    const double sum = lambda + mu;
    if (std::abs(sum - std::round(sum)) < 1e-9)
        throw std::invalid_argument(
            "crossed_compose_coeffs: lambda + mu too close to an integer");
    const double denom = std::sin(sum * M_PI);
    return {std::sin(mu * M_PI) / denom, std::sin(lambda * M_PI) / denom};
}

} // namespace stablefrac
