#ifndef ZLAB_DYNAMICS_HPP
#define ZLAB_DYNAMICS_HPP

#include <string>
#include <vector>

#include "zlab/bigint.hpp"
#include "zlab/laurent.hpp"
#include "zlab/quiver.hpp"

namespace zlab {

// Values of one vertex at its parity times eps_v, eps_v+2, ...; index k holds
// the value at t = eps_v + 2k.
template <class V>
using ParitySeries = std::vector<std::vector<V>>;  // [vertex][k]

// Exact symbolic T-system: T_v(t+1) T_v(t-1) = prod_red + prod_blue, seeded
// T_v(eps_v) = x_v.  Division is exact at every step (asserted).
ParitySeries<LaurentPoly> symbolic_evolve(const Bigraph& g, int steps, TermBudget& budget);

// Tropical T-system over exact rationals.
ParitySeries<Rational> tropical_evolve(const Bigraph& g, const std::vector<Rational>& lam, int steps);
// Same recurrence in doubles (for irrational seeds such as Perron vectors).
ParitySeries<double> tropical_evolve(const Bigraph& g, const std::vector<double>& lam, int steps);

// t^lam_v(t) == max q-degree of T_v(t) under x_v -> q^{lam(v)} for everything
// computed in `steps` steps (exact rational comparison).
bool deg_max_check(const Bigraph& g, const std::vector<Rational>& lam, int steps, TermBudget& budget);

// Numeric engine in log space; values are log T_v(t).
ParitySeries<double> numeric_evolve(const Bigraph& g, const std::vector<double>& init, int steps);

enum class GrowthTag { Bounded, Exponential, QuadraticExponential, DoublyExponential };

struct GrowthVerdict {
    GrowthTag tag;
    double rate = 0;     // fitted constant (0 for Bounded)
    int period = 0;      // state-revisit distance for Bounded
    // diagnostics
    std::string statistic;
    double rel_sd = 0;
    int window_lo = 0, window_hi = 0;
};

struct InconclusiveGrowth : std::runtime_error {
    explicit InconclusiveGrowth(const std::string& what) : std::runtime_error(what) {}
};

struct GrowthConfig {
    double bounded_rel_tol = 1e-6;
    double stabilize_rel_sd = 0.02;
};

// Classifies a log-value time series (all vertices, parity layout as produced
// by numeric_evolve).  Throws InconclusiveGrowth when no statistic stabilizes.
GrowthVerdict growth_classify(const ParitySeries<double>& series, const GrowthConfig& cfg = {});

std::string growth_tag_name(GrowthTag t);

}  // namespace zlab

#endif
