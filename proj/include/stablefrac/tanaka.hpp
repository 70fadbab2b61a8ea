#pragma once

#include <optional>
#include <vector>

#include "stablefrac/generator.hpp"
#include "stablefrac/gridfun.hpp"

namespace stablefrac {

// kappa_pm = c_pm / (Gamma(alpha) Gamma(-alpha) [c_+^2 + c_-^2 + 2 c_+ c_- cos(alpha pi)]).
// Note the crossed pairing in F below: kappa_minus multiplies x_+^{alpha-1}.
struct TanakaConstants {
    double kappa_minus;
    double kappa_plus;
};

// Drift weights of the power decomposition of |X - x|^gamma. k_plus
// multiplies the indicator of {X > x} and k_minus that of {X < x}; k_plus
// changes sign exactly at gamma = beta_crit when c_- != c_+.
struct PowerConstants {
    double gamma;
    double k_minus;
    double k_plus;
};

// beta_crit = arccos((c^2(1-a^2) - (1+ac)^2) / (c^2(1-a^2) + (1+ac)^2)) / pi
// with a = cos(alpha pi), c = min(c_-,c_+)/max(c_-,c_+); lies in (alpha-1, 1).
struct CriticalExponent {
    double a;
    double c;
    double beta_crit;
};

enum class MartingaleClass { Submartingale, SemimartingaleNonMonotone };

// Finite signed measure: weighted atoms plus an optional density sampled on
// a grid.
struct SignedMeasure {
    struct Atom {
        double location;
        double weight;
    };
    std::vector<Atom> atoms;
    std::optional<GridFunction> density;
};

TanakaConstants tanaka_constants(const StableParams& p); // alpha in (1,2)

// F(x) = kappa_plus (x^-)^{alpha-1} + kappa_minus (x^+)^{alpha-1}.
double tanaka_F(const StableParams& p, double x);

// (F * mu)(x). The density part reuses the product-integration rule of the
// fractional integrals (the two power kernels of F are fractional-integral
// kernels up to Gamma(alpha)).
double class_C_eval(const StableParams& p, const SignedMeasure& mu, double x);

PowerConstants power_constants(const StableParams& p, double gamma);
CriticalExponent critical_beta(const StableParams& p);

// Submartingale iff gamma >= beta_crit (closed left endpoint: zero drift
// weight still gives a nondecreasing integral).
MartingaleClass classify(const StableParams& p, double gamma);

// Auxiliary sign functions of the k_pm analysis; entire and 2-periodic in
// gamma.
struct HPair {
    double h_minus;
    double h_plus;
};
HPair h_functions(const StableParams& p, double gamma);

} // namespace stablefrac
