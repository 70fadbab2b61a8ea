#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stablefrac/generator.hpp"
#include "stablefrac/tanaka.hpp"

namespace stablefrac {

// Trajectory at grid times k*dt, k = 0..n_steps. values[0] is the starting
// point; increments are dt^{1/alpha} times standard draws.
struct PathSample {
    double dt = 0.0;
    std::vector<double> values;
    std::uint64_t seed = 0;

    std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }
    double t_end() const { return dt * static_cast<double>(steps()); }
    double t(std::size_t k) const { return dt * static_cast<double>(k); }
};

// Box-kernel occupation estimate over a uniform level grid:
//   L_t^a ~= (1/2 eps) sum_k dt 1{|X_k - a| <= eps}.
struct LocalTimeField {
    std::vector<double> levels; // uniform
    double bandwidth = 0.0;
    std::vector<double> l_values;
    double t_end = 0.0;
};

struct MCResult {
    double mean = 0.0;
    double stderr_mean = 0.0;
    std::size_t n_paths = 0;
    std::uint64_t seed = 0;
};

PathSample simulate_path(const StableParams& p, double horizon, std::size_t n_steps,
                         double x0, std::uint64_t seed);

LocalTimeField occupation_local_time(const PathSample& path,
                                     const std::vector<double>& levels,
                                     double bandwidth);

// Occupation estimate at a single level (same estimator, no field).
double local_time_at(const PathSample& path, double level, double bandwidth);

// Integral of the box estimator over the infinite uniform level grid of
// spacing dlevel, computed by per-sample counting. Equals t_end up to the
// estimator's O(dlevel/bandwidth) grid bias; used for the occupation-mass
// conservation check.
double occupation_mass(const PathSample& path, double bandwidth, double dlevel);

// Default bandwidth: max(dt^{1/alpha}, 2 * dlevel). A window below the
// typical step dt^{1/alpha} only adds variance.
double default_bandwidth(const StableParams& p, double dt, double dlevel);

// F(X_t - a) - F(X_0 - a) - L_t^a: estimate of the martingale term of the
// Tanaka identity. The level must be covered by the field.
double tanaka_residual(const StableParams& p, const PathSample& path, double a,
                       const LocalTimeField& lt);

// f(X_t) - f(X_0) - sum_i w_i L_t^{a_i} with f = F * mu (atomic mu).
double meyer_ito_residual(const StableParams& p, const PathSample& path,
                          const SignedMeasure& mu, const LocalTimeField& lt);

// Left-endpoint Riemann sum of
//   |X_s - x|^{gamma-alpha} [k_plus 1{X_s > x} + k_minus 1{X_s < x}] ds.
// Samples closer than 1e-10 to the level are clamped to 1e-10.
double power_drift(const StableParams& p, const PathSample& path, double x,
                   double gamma);

// |X_t - x|^gamma - |X_0 - x|^gamma - power_drift: martingale-term estimate.
double power_residual(const StableParams& p, const PathSample& path, double x,
                      double gamma);

using PathEstimator = std::function<double(const PathSample&)>;

// Mean/stderr of an estimator over n_paths independent paths keyed by
// (base_seed, path index). Per-path results are reduced in index order, so
// the result is identical under any parallel schedule.
MCResult mc_run(const PathEstimator& estimator, const StableParams& p,
                double horizon, std::size_t n_steps, double x0,
                std::size_t n_paths, std::uint64_t base_seed);

std::string to_json_string(const PathSample& path);
std::string to_json_string(const LocalTimeField& lt);
PathSample path_from_json(const std::string& text);

namespace serial_ref {
MCResult mc_run(const PathEstimator& estimator, const StableParams& p,
                double horizon, std::size_t n_steps, double x0,
                std::size_t n_paths, std::uint64_t base_seed);
} // namespace serial_ref

} // namespace stablefrac
