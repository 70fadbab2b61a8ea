#include "stablefrac/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "stablefrac/stablelaw.hpp"

namespace stablefrac {

PathSample simulate_path(const StableParams& p, double horizon, std::size_t n_steps,
                         double x0, std::uint64_t seed) {
    if (n_steps < 1)
        throw std::invalid_argument("simulate_path: need n_steps >= 1");
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate_path: horizon must be positive");
    PathSample path;
    path.dt = horizon / static_cast<double>(n_steps);
    path.seed = seed;
    path.values.resize(n_steps + 1);
    path.values[0] = x0;
    Rng rng(seed);
    const double scale = std::pow(path.dt, 1.0 / p.alpha);
    for (std::size_t k = 1; k <= n_steps; ++k)
        path.values[k] = path.values[k - 1] + scale * sample_standard(p, rng);
    return path;
}

LocalTimeField occupation_local_time(const PathSample& path,
                                     const std::vector<double>& levels,
                                     double bandwidth) {
    if (levels.empty())
        throw std::invalid_argument("occupation_local_time: empty level grid");
    if (!(bandwidth > 0.0))
        throw std::invalid_argument("occupation_local_time: bandwidth must be positive");
    const double dl = levels.size() > 1 ? levels[1] - levels[0] : 1.0;
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (std::abs(levels[i] - levels[i - 1] - dl) > 1e-9 * std::max(1.0, std::abs(dl)))
            throw std::invalid_argument("occupation_local_time: levels must be uniform");

    LocalTimeField lt;
    lt.levels = levels;
    lt.bandwidth = bandwidth;
    lt.t_end = path.t_end();
    lt.l_values.assign(levels.size(), 0.0);

    // difference array over level indices, left-endpoint samples
    std::vector<double> diff(levels.size() + 1, 0.0);
    const double l0 = levels[0];
    const long nl = static_cast<long>(levels.size());
    for (std::size_t k = 0; k < path.steps(); ++k) {
        const double x = path.values[k];
        long lo = static_cast<long>(std::ceil((x - bandwidth - l0) / dl - 1e-12));
        long hi = static_cast<long>(std::floor((x + bandwidth - l0) / dl + 1e-12));
        lo = std::max(lo, 0L);
        hi = std::min(hi, nl - 1);
        if (lo > hi)
            continue;
        diff[static_cast<std::size_t>(lo)] += path.dt;
        diff[static_cast<std::size_t>(hi) + 1] -= path.dt;
    }
    double run = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        run += diff[i];
        lt.l_values[i] = run / (2.0 * bandwidth);
    }
    return lt;
}

double local_time_at(const PathSample& path, double level, double bandwidth) {
    if (!(bandwidth > 0.0))
        throw std::invalid_argument("local_time_at: bandwidth must be positive");
    double occ = 0.0;
    for (std::size_t k = 0; k < path.steps(); ++k)
        if (std::abs(path.values[k] - level) <= bandwidth)
            occ += path.dt;
    return occ / (2.0 * bandwidth);
}

double occupation_mass(const PathSample& path, double bandwidth, double dlevel) {
    if (!(bandwidth > 0.0) || !(dlevel > 0.0))
        throw std::invalid_argument("occupation_mass: need positive bandwidth and dlevel");
    double mass = 0.0;
    for (std::size_t k = 0; k < path.steps(); ++k) {
        const double x = path.values[k];
        const double lo = std::ceil((x - bandwidth) / dlevel);
        const double hi = std::floor((x + bandwidth) / dlevel);
        mass += path.dt * (hi - lo + 1.0);
    }
    return mass * dlevel / (2.0 * bandwidth);
}

double default_bandwidth(const StableParams& p, double dt, double dlevel) {
    return std::max(std::pow(dt, 1.0 / p.alpha), 2.0 * dlevel);
}

namespace {

double field_value_at(const LocalTimeField& lt, double a) {
    const double dl = lt.levels.size() > 1 ? lt.levels[1] - lt.levels[0] : 1.0;
    const double t = (a - lt.levels[0]) / dl;
    const long i = std::lround(t);
    if (i < 0 || i >= static_cast<long>(lt.levels.size()) ||
        std::abs(t - static_cast<double>(i)) > 0.5 + 1e-9)
        throw std::invalid_argument("level not covered by the local-time field");
    return lt.l_values[static_cast<std::size_t>(i)];
}

} // namespace

double tanaka_residual(const StableParams& p, const PathSample& path, double a,
                       const LocalTimeField& lt) {
    return tanaka_F(p, path.values.back() - a) - tanaka_F(p, path.values.front() - a) -
           field_value_at(lt, a);
}

double meyer_ito_residual(const StableParams& p, const PathSample& path,
                          const SignedMeasure& mu, const LocalTimeField& lt) {
    if (mu.density)
        throw std::invalid_argument("meyer_ito_residual: mu must be purely atomic");
    double acc = class_C_eval(p, mu, path.values.back()) -
                 class_C_eval(p, mu, path.values.front());
    for (const auto& atom : mu.atoms)
        acc -= atom.weight * field_value_at(lt, atom.location);
    return acc;
}

double power_drift(const StableParams& p, const PathSample& path, double x,
                   double gamma) {
    const PowerConstants k = power_constants(p, gamma);
    double acc = 0.0;
    for (std::size_t i = 0; i < path.steps(); ++i) {
        const double d = path.values[i] - x;
        const double r = std::max(std::abs(d), 1e-10);
        const double w = d > 0.0 ? k.k_plus : k.k_minus;
        acc += path.dt * std::pow(r, gamma - p.alpha) * w;
    }
    return acc;
}

double power_residual(const StableParams& p, const PathSample& path, double x,
                      double gamma) {
    return std::pow(std::abs(path.values.back() - x), gamma) -
           std::pow(std::abs(path.values.front() - x), gamma) -
           power_drift(p, path, x, gamma);
}

namespace {

MCResult mc_run_impl(const PathEstimator& estimator, const StableParams& p,
                     double horizon, std::size_t n_steps, double x0,
                     std::size_t n_paths, std::uint64_t base_seed, bool parallel) {
    if (n_paths < 2)
        throw std::invalid_argument("mc_run: need n_paths >= 2");
    std::vector<double> results(n_paths);
    const long np = static_cast<long>(n_paths);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long i = 0; i < np; ++i) {
        const std::uint64_t path_seed = Rng(base_seed, static_cast<std::uint64_t>(i)).next_u64();
        const PathSample path = simulate_path(p, horizon, n_steps, x0, path_seed);
        results[static_cast<std::size_t>(i)] = estimator(path);
    }
    double mean = 0.0;
    for (double r : results)
        mean += r;
    mean /= static_cast<double>(n_paths);
    double var = 0.0;
    for (double r : results)
        var += (r - mean) * (r - mean);
    var /= static_cast<double>(n_paths - 1);
    return {mean, std::sqrt(var / static_cast<double>(n_paths)), n_paths, base_seed};
}

} // namespace

MCResult mc_run(const PathEstimator& estimator, const StableParams& p,
                double horizon, std::size_t n_steps, double x0,
                std::size_t n_paths, std::uint64_t base_seed) {
    return mc_run_impl(estimator, p, horizon, n_steps, x0, n_paths, base_seed, true);
}

namespace serial_ref {
MCResult mc_run(const PathEstimator& estimator, const StableParams& p,
                double horizon, std::size_t n_steps, double x0,
                std::size_t n_paths, std::uint64_t base_seed) {
    return mc_run_impl(estimator, p, horizon, n_steps, x0, n_paths, base_seed, false);
}
} // namespace serial_ref

std::string to_json_string(const PathSample& path) {
    nlohmann::json j;
    j["dt"] = path.dt;
    j["seed"] = path.seed;
    j["values"] = path.values;
    return j.dump();
}

std::string to_json_string(const LocalTimeField& lt) {
    nlohmann::json j;
    j["levels"] = lt.levels;
    j["bandwidth"] = lt.bandwidth;
    j["l_values"] = lt.l_values;
    j["t_end"] = lt.t_end;
    return j.dump();
}

PathSample path_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    PathSample path;
    path.dt = j.at("dt").get<double>();
    path.seed = j.at("seed").get<std::uint64_t>();
    path.values = j.at("values").get<std::vector<double>>();
    if (path.values.size() < 2 || !(path.dt > 0.0))
        throw std::invalid_argument("path_from_json: malformed path");
    return path;
}

} // namespace stablefrac
