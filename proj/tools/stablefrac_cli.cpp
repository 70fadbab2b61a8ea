// Command-line frontend: constants | invert | simulate | verify.
// Every run is deterministic given its full configuration; the effective
// config is echoed into the output metadata. Exit codes: 0 success / all
// checks passed, 1 validation or usage error, 2 numerical suite failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stablefrac/fracops.hpp"
#include "stablefrac/generator.hpp"
#include "stablefrac/simulate.hpp"
#include "stablefrac/stablelaw.hpp"
#include "stablefrac/tanaka.hpp"

using namespace stablefrac;
using nlohmann::json;

namespace {

struct Options {
    double alpha = 1.5;
    double c_minus = 1.0;
    double c_plus = 1.0;
    std::optional<double> gamma;
    double level = 0.0;
    double horizon = 1.0;
    std::size_t steps = 1000;
    std::size_t n_paths = 1000;
    std::uint64_t seed = 1;
    double x0 = 1.0;
    std::optional<double> bandwidth;
    std::string method = "spectral";
    std::string format = "csv";
    std::string out;
    std::string in_file;
    std::string config_file;
    bool roundtrip = false;
    bool forward = false;
    std::string suite;
};

json config_echo(const Options& o) {
    json j;
    j["alpha"] = o.alpha;
    j["c_minus"] = o.c_minus;
    j["c_plus"] = o.c_plus;
    if (o.gamma) j["gamma"] = *o.gamma;
    j["level"] = o.level;
    j["horizon"] = o.horizon;
    j["steps"] = o.steps;
    j["n_paths"] = o.n_paths;
    j["seed"] = o.seed;
    j["x0"] = o.x0;
    if (o.bandwidth) j["bandwidth"] = *o.bandwidth;
    j["method"] = o.method;
    j["format"] = o.format;
    return j;
}

// Config-file values fill in any option the command line left untouched
// (precedence: flags > config file > defaults).
void merge_config(const CLI::App& app, Options& o) {
    if (o.config_file.empty())
        return;
    std::ifstream in(o.config_file);
    if (!in)
        throw std::invalid_argument("cannot open config file: " + o.config_file);
    json j;
    in >> j;
    auto unset = [&](const std::string& flag) {
        const CLI::Option* opt = app.get_option_no_throw(flag);
        return opt != nullptr && opt->count() == 0;
    };
    if (j.contains("alpha") && unset("--alpha")) o.alpha = j["alpha"].get<double>();
    if (j.contains("c_minus") && unset("--c-minus")) o.c_minus = j["c_minus"].get<double>();
    if (j.contains("c_plus") && unset("--c-plus")) o.c_plus = j["c_plus"].get<double>();
    if (j.contains("gamma") && unset("--gamma")) o.gamma = j["gamma"].get<double>();
    if (j.contains("level") && unset("--level")) o.level = j["level"].get<double>();
    if (j.contains("horizon") && unset("--horizon")) o.horizon = j["horizon"].get<double>();
    if (j.contains("steps") && unset("--steps")) o.steps = j["steps"].get<std::size_t>();
    if (j.contains("n_paths") && unset("--n-paths")) o.n_paths = j["n_paths"].get<std::size_t>();
    if (j.contains("seed") && unset("--seed")) o.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("x0") && unset("--x0")) o.x0 = j["x0"].get<double>();
    if (j.contains("bandwidth") && unset("--bandwidth")) o.bandwidth = j["bandwidth"].get<double>();
    if (j.contains("method") && unset("--method")) o.method = j["method"].get<std::string>();
    if (j.contains("format") && unset("--format")) o.format = j["format"].get<std::string>();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

struct Row {
    std::string name;
    double value;
    std::string note;
};

std::string render_rows(const Options& o, const std::vector<Row>& rows,
                        const char* value_col, const char* note_col) {
    std::ostringstream os;
    if (o.format == "json") {
        json j;
        j["metadata"] = {{"schema", 1}, {"config", config_echo(o)}};
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"name", r.name}, {value_col, r.value}, {note_col, r.note}});
        j["rows"] = arr;
        os << j.dump(2) << "\n";
    } else {
        os << "# schema=1\n# config=" << config_echo(o).dump() << "\n";
        os << "name," << value_col << "," << note_col << "\n";
        char buf[64];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%.17g", r.value);
            os << r.name << "," << buf << "," << r.note << "\n";
        }
    }
    return os.str();
}

int cmd_constants(const Options& o) {
    const StableParams p(o.alpha, o.c_minus, o.c_plus);
    std::vector<Row> rows;
    const auto m = generator_constants(p);
    const auto k = inverse_constants(p);
    rows.push_back({"M_minus", m.m_minus, "c_minus*Gamma(-alpha)"});
    rows.push_back({"M_plus", m.m_plus, "c_plus*Gamma(-alpha)"});
    rows.push_back({"K_minus", k.k_minus, "M_minus/(M-^2+M+^2+2M-M+cos(pi*alpha))"});
    rows.push_back({"K_plus", k.k_plus, "M_plus/(M-^2+M+^2+2M-M+cos(pi*alpha))"});
    if (p.alpha > 1.0) {
        const auto tk = tanaka_constants(p);
        const auto cb = critical_beta(p);
        rows.push_back({"kappa_minus", tk.kappa_minus,
                        "c_minus/(Gamma(alpha)Gamma(-alpha)[c+^2+c-^2+2c+c-cos(alpha*pi)])"});
        rows.push_back({"kappa_plus", tk.kappa_plus,
                        "c_plus/(Gamma(alpha)Gamma(-alpha)[c+^2+c-^2+2c+c-cos(alpha*pi)])"});
        rows.push_back({"beta_crit", cb.beta_crit,
                        "arccos((c^2(1-a^2)-(1+ac)^2)/(c^2(1-a^2)+(1+ac)^2))/pi"});
        if (o.gamma) {
            const auto pc = power_constants(p, *o.gamma);
            rows.push_back({"k_minus", pc.k_minus, "power drift weight on {X<x}"});
            rows.push_back({"k_plus", pc.k_plus, "power drift weight on {X>x}"});
            rows.push_back({"classification",
                            classify(p, *o.gamma) == MartingaleClass::Submartingale ? 1.0 : 0.0,
                            "1=Submartingale; 0=SemimartingaleNonMonotone"});
        }
    }
    write_text(o.out, render_rows(o, rows, "value", "formula"));
    return 0;
}

int cmd_invert(const Options& o) {
    if (o.in_file.empty())
        throw std::invalid_argument("invert: --in FILE is required");
    std::ifstream in(o.in_file);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + o.in_file);
    std::stringstream buf;
    buf << in.rdbuf();
    const json parsed = json::parse(buf.str());
    const StableParams p(o.alpha, o.c_minus, o.c_plus);
    const Method method = o.method == "quadrature" ? Method::Quadrature : Method::Spectral;

    json out;
    out["metadata"] = {{"schema", 1}, {"config", config_echo(o)}};
    double rt_err = -1.0;

    if (parsed.contains("values")) {
        const GridFunction f = grid_from_json(buf.str());
        const GridFunction g = o.forward ? apply_generator(p, f, method)
                                         : invert_generator(p, f, method);
        if (o.roundtrip) {
            const GridFunction back = o.forward ? invert_generator(p, g, method)
                                                : apply_generator(p, g, method);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < f.size(); ++i) {
                num = std::max(num, std::abs(back.values[i] - f.values[i]));
                den = std::max(den, std::abs(f.values[i]));
            }
            rt_err = den > 0.0 ? num / den : 0.0;
        }
        out["function"] = json::parse(to_json_string(g));
    } else {
        const SpectralFunction f = spectral_from_json(buf.str());
        const SpectralFunction g =
            o.forward ? apply_generator(p, f) : invert_generator(p, f);
        if (o.roundtrip) {
            const SpectralFunction back =
                o.forward ? invert_generator(p, g) : apply_generator(p, g);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < f.size(); ++i) {
                num = std::max(num, std::abs(back.coeffs[i] - f.coeffs[i]));
                den = std::max(den, std::abs(f.coeffs[i]));
            }
            rt_err = den > 0.0 ? num / den : 0.0;
        }
        out["function"] = json::parse(to_json_string(g));
    }
    if (o.roundtrip)
        out["roundtrip_error"] = rt_err;
    write_text(o.out, out.dump(2) + "\n");
    return 0;
}

int cmd_simulate(const Options& o) {
    const StableParams p(o.alpha, o.c_minus, o.c_plus);
    const PathSample path = simulate_path(p, o.horizon, o.steps, o.x0, o.seed);

    double lo = path.values[0], hi = path.values[0];
    for (double v : path.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double eps = o.bandwidth ? *o.bandwidth : default_bandwidth(p, path.dt, 0.0);
    double dl = eps / 2.0;
    const double range = (hi + eps) - (lo - eps);
    dl = std::max(dl, range / 20000.0); // cap the level count
    std::vector<double> levels;
    for (double a = lo - eps; a <= hi + eps + dl / 2.0; a += dl)
        levels.push_back(a);
    const LocalTimeField lt = occupation_local_time(path, levels, eps);

    double mass = 0.0;
    for (double lv : lt.l_values)
        mass += lv * dl;

    json out;
    out["metadata"] = {{"schema", 1},
                       {"config", config_echo(o)},
                       {"bandwidth", eps},
                       {"occupation_mass", mass}};
    out["path"] = json::parse(to_json_string(path));
    out["localtime"] = json::parse(to_json_string(lt));
    write_text(o.out, out.dump(2) + "\n");
    return 0;
}

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

void add_check(std::vector<Check>& cs, const std::string& name, double value,
               double tol) {
    cs.push_back({name, value, tol, std::abs(value) <= tol});
}

void suite_identities(std::vector<Check>& cs, std::uint64_t seed) {
    Rng rng(seed, 900);
    // crossed composition at the multiplier level
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double lam, mu;
        do {
            lam = rng.uniform(0.05, 0.95);
            mu = rng.uniform(0.05, 0.95);
        } while (std::abs(lam + mu - 1.0) < 1e-3);
        const auto cc = crossed_compose_coeffs(lam, mu);
        const double u = rng.uniform(-5.0, 5.0);
        if (u == 0.0)
            continue;
        const auto lhs = spectral_multiplier(lam, Side::Right, u) *
                         spectral_multiplier(mu, Side::Left, u);
        const auto rhs = cc.a_minus * spectral_multiplier(lam + mu, Side::Left, u) +
                         cc.a_plus * spectral_multiplier(lam + mu, Side::Right, u);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    add_check(cs, "crossed_composition_multiplier", worst, 1e-12);

    // trig identity behind the crossed composition
    worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double lam = rng.uniform(-2.0, 2.0);
        const double mu = rng.uniform(-2.0, 2.0);
        const double lhs = std::cos((lam - mu) * M_PI / 2.0) * std::sin((lam + mu) * M_PI / 2.0);
        const double rhs = std::sin(mu * M_PI / 2.0) * std::cos(mu * M_PI / 2.0) +
                           std::sin(lam * M_PI / 2.0) * std::cos(lam * M_PI / 2.0);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    add_check(cs, "trig_identity", worst, 1e-13);

    // symbol vs characteristic exponent
    worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double alpha = rng.uniform() < 0.5 ? rng.uniform(0.2, 0.95)
                                                 : rng.uniform(1.05, 1.9);
        const StableParams p(alpha, rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0));
        const double u = rng.uniform(-10.0, 10.0);
        if (u == 0.0)
            continue;
        const auto a = symbol(p, u);
        const auto b = char_exponent(p, u);
        worst = std::max(worst, std::abs(a - b) / std::abs(a));
    }
    add_check(cs, "symbol_vs_char_exponent", worst, 1e-12);

    // periodicity of the sign functions
    worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const StableParams p(rng.uniform(1.05, 1.9), 1.0, rng.uniform(1.0, 5.0));
        const double g = rng.uniform(-3.0, 3.0);
        const auto h1 = h_functions(p, g);
        const auto h2 = h_functions(p, g + 2.0);
        worst = std::max(worst, std::abs(h1.h_minus - h2.h_minus));
        worst = std::max(worst, std::abs(h1.h_plus - h2.h_plus));
    }
    add_check(cs, "h_period_2", worst, 1e-13);
}

void suite_inversion(std::vector<Check>& cs, std::uint64_t seed) {
    Rng rng(seed, 901);
    double worst = 0.0;
    for (double alpha : {0.7, 1.3, 1.7}) {
        const StableParams p(alpha, rng.uniform(0.2, 2.0), rng.uniform(0.2, 2.0));
        const auto s = lizorkin_test(1, 3.0, 4.0, 2.0 * M_PI / 80.0, 2048);
        const auto rt = invert_generator(p, apply_generator(p, s));
        const auto f = fft_inverse(s);
        const auto g = fft_inverse(rt);
        double fmax = 0.0, err = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            fmax = std::max(fmax, std::abs(f.values[i]));
            err = std::max(err, std::abs(f.values[i] - g.values[i]));
        }
        worst = std::max(worst, err / fmax);
    }
    add_check(cs, "spectral_roundtrip", worst, 1e-10);
}

void mc_suite(std::vector<Check>& cs, const std::string& which, std::size_t n_paths,
              std::uint64_t seed) {
    const StableParams p(1.5, 1.0, 2.0);
    const double horizon = 1.0;
    const std::size_t steps = 1000;
    const double dt = horizon / static_cast<double>(steps);
    const double eps = default_bandwidth(p, dt, 0.0);
    if (which == "tanaka") {
        const double a = 0.0;
        auto est = [&](const PathSample& path) {
            LocalTimeField lt;
            lt.levels = {a};
            lt.bandwidth = eps;
            lt.t_end = path.t_end();
            lt.l_values = {local_time_at(path, a, eps)};
            return tanaka_residual(p, path, a, lt);
        };
        const auto r = mc_run(est, p, horizon, steps, 1.0, n_paths, seed);
        cs.push_back({"tanaka_residual_tstat", r.mean / r.stderr_mean, 3.0,
                      std::abs(r.mean) <= 3.0 * r.stderr_mean});
    } else if (which == "meyer-ito") {
        SignedMeasure mu;
        mu.atoms = {{-1.0, 1.0}, {1.0, 2.0}};
        auto est = [&](const PathSample& path) {
            LocalTimeField lt;
            lt.levels = {-1.0, 1.0};
            lt.bandwidth = eps;
            lt.t_end = path.t_end();
            lt.l_values = {local_time_at(path, -1.0, eps), local_time_at(path, 1.0, eps)};
            return meyer_ito_residual(p, path, mu, lt);
        };
        const auto r = mc_run(est, p, horizon, steps, 0.3, n_paths, seed);
        cs.push_back({"meyer_ito_residual_tstat", r.mean / r.stderr_mean, 3.0,
                      std::abs(r.mean) <= 3.0 * r.stderr_mean});
    } else { // power
        const double gamma = p.alpha * p.alpha / (1.0 + p.alpha);
        auto est = [&](const PathSample& path) {
            return power_residual(p, path, 0.0, gamma);
        };
        const auto r = mc_run(est, p, horizon, steps, 1.0, n_paths, seed);
        cs.push_back({"power_residual_tstat", r.mean / r.stderr_mean, 3.0,
                      std::abs(r.mean) <= 3.0 * r.stderr_mean});
    }
}

int cmd_verify(const Options& o) {
    std::vector<Check> cs;
    if (o.suite == "identities")
        suite_identities(cs, o.seed);
    else if (o.suite == "inversion")
        suite_inversion(cs, o.seed);
    else if (o.suite == "tanaka" || o.suite == "meyer-ito" || o.suite == "power")
        mc_suite(cs, o.suite, o.n_paths, o.seed);
    else
        throw std::invalid_argument("unknown suite: " + o.suite);

    std::vector<Row> rows;
    bool all_pass = true;
    for (const auto& c : cs) {
        char tol[32];
        std::snprintf(tol, sizeof tol, "%.1e", c.tolerance);
        rows.push_back({c.name, c.value,
                        (c.pass ? std::string("pass tol=") : std::string("FAIL tol=")) + tol});
        all_pass = all_pass && c.pass;
    }
    write_text(o.out, render_rows(o, rows, "value", "status"));
    return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional-calculus toolkit for strictly stable generators"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", o.alpha, "stability index in (0,2), not 1");
        sub->add_option("--c-minus", o.c_minus, "negative-jump weight");
        sub->add_option("--c-plus", o.c_plus, "positive-jump weight");
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_option("--format", o.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out, "output path (stdout if omitted)");
        sub->add_option("--config", o.config_file, "JSON config file");
        return sub;
    };

    CLI::App* c_const = add_common(app.add_subcommand("constants", "derived constants"));
    c_const->add_option("--gamma", [&o](const std::vector<std::string>& v) {
        o.gamma = std::stod(v[0]);
        return true;
    }, "power exponent in (alpha-1, alpha)");

    CLI::App* c_inv = add_common(app.add_subcommand("invert", "apply L^{-1} (or L)"));
    c_inv->add_option("--in", o.in_file, "input function JSON");
    c_inv->add_option("--method", o.method, "quadrature or spectral")
        ->check(CLI::IsMember({"quadrature", "spectral"}));
    c_inv->add_flag("--forward", o.forward, "apply L instead of L^{-1}");
    c_inv->add_flag("--roundtrip", o.roundtrip, "report round-trip error");

    CLI::App* c_sim = add_common(app.add_subcommand("simulate", "simulate a path"));
    c_sim->add_option("--horizon", o.horizon, "time horizon");
    c_sim->add_option("--steps", o.steps, "number of steps");
    c_sim->add_option("--x0", o.x0, "starting point");
    c_sim->add_option("--bandwidth", [&o](const std::vector<std::string>& v) {
        o.bandwidth = std::stod(v[0]);
        return true;
    }, "local-time bandwidth (default dt^{1/alpha})");

    CLI::App* c_ver = add_common(app.add_subcommand("verify", "run a verification suite"));
    c_ver->add_option("suite", o.suite,
                      "tanaka | meyer-ito | power | inversion | identities")
        ->required();
    c_ver->add_option("--n-paths", o.n_paths, "Monte Carlo paths");
    c_ver->add_option("--level", o.level, "level for local-time checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        for (auto* sub : {c_const, c_inv, c_sim, c_ver})
            if (sub->parsed())
                merge_config(*sub, o);
        if (c_const->parsed())
            return cmd_constants(o);
        if (c_inv->parsed())
            return cmd_invert(o);
        if (c_sim->parsed())
            return cmd_simulate(o);
        return cmd_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
