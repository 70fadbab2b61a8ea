// Times the OpenMP kernels against their serial reference implementations
// and reports the max absolute deviation between the two (should be 0: the
// parallel loops use an order-independent reduction).

#include <chrono>
#include <cmath>
#include <cstdio>

#include "stablefrac/fracops.hpp"
#include "stablefrac/generator.hpp"
#include "stablefrac/simulate.hpp"

using namespace stablefrac;
using clock_type = std::chrono::steady_clock;

static double seconds(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main() {
    const std::size_t n = 6144;
    const double span = 120.0;
    const auto spec = lizorkin_test(1, 3.0, 4.0, 2.0 * M_PI / span, n);
    const GridFunction f = fft_inverse(spec);
    const StableParams p(1.7, 1.0, 2.5);

    {
        auto t0 = clock_type::now();
        const auto a = frac_integral(f, p.alpha, Side::Left);
        auto t1 = clock_type::now();
        const auto b = serial_ref::frac_integral(f, p.alpha, Side::Left);
        auto t2 = clock_type::now();
        double dev = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            dev = std::max(dev, std::abs(a.values[i] - b.values[i]));
        std::printf("frac_integral      parallel %.3fs  serial %.3fs  speedup %.2fx  max dev %.2e\n",
                    seconds(t0, t1), seconds(t1, t2),
                    seconds(t1, t2) / seconds(t0, t1), dev);
    }
    {
        auto t0 = clock_type::now();
        const auto a = apply_generator(p, f, Method::Quadrature);
        auto t1 = clock_type::now();
        const auto b = serial_ref::apply_generator_quadrature(p, f);
        auto t2 = clock_type::now();
        double dev = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            dev = std::max(dev, std::abs(a.values[i] - b.values[i]));
        std::printf("apply_generator    parallel %.3fs  serial %.3fs  speedup %.2fx  max dev %.2e\n",
                    seconds(t0, t1), seconds(t1, t2),
                    seconds(t1, t2) / seconds(t0, t1), dev);
    }
    {
        const double gamma = p.alpha * p.alpha / (1.0 + p.alpha);
        auto est = [&](const PathSample& path) {
            return power_residual(p, path, 0.0, gamma);
        };
        auto t0 = clock_type::now();
        const auto a = mc_run(est, p, 1.0, 1000, 1.0, 2000, 7);
        auto t1 = clock_type::now();
        const auto b = serial_ref::mc_run(est, p, 1.0, 1000, 1.0, 2000, 7);
        auto t2 = clock_type::now();
        std::printf("mc_run             parallel %.3fs  serial %.3fs  speedup %.2fx  max dev %.2e\n",
                    seconds(t0, t1), seconds(t1, t2),
                    seconds(t1, t2) / seconds(t0, t1),
                    std::abs(a.mean - b.mean) + std::abs(a.stderr_mean - b.stderr_mean));
    }
    return 0;
}
