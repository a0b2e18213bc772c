#include "zlab/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace zlab {

namespace {

struct Neighborhoods {
    std::vector<std::vector<std::pair<int, int>>> red, blue;  // (nbr, mult)
    explicit Neighborhoods(const Bigraph& g) : red(g.n), blue(g.n) {
        for (const Edge& e : g.red) {
            red[e.u].push_back({e.v, e.mult});
            red[e.v].push_back({e.u, e.mult});
        }
        for (const Edge& e : g.blue) {
            blue[e.u].push_back({e.v, e.mult});
            blue[e.v].push_back({e.u, e.mult});
        }
    }
};

}  // namespace

ParitySeries<LaurentPoly> symbolic_evolve(const Bigraph& g, int steps, TermBudget& budget) {
    if (!is_recurrent(g)) throw std::invalid_argument("symbolic_evolve: bigraph must be recurrent");
    Neighborhoods nb(g);
    int n = g.n;
    ParitySeries<LaurentPoly> out(n);
    // latest[v] holds T_v at the largest computed time of v's parity; when v
    // advances to time t+1 this is exactly T_v(t-1), and neighbors hold time t
    std::vector<LaurentPoly> latest(n);
    for (int v = 0; v < n; ++v) {
        latest[v] = LaurentPoly::variable(n, v);
        out[v].push_back(latest[v]);
    }
    for (int t = 1; t <= steps; ++t) {
        std::vector<LaurentPoly> next = latest;
        for (int v = 0; v < n; ++v) {
            if (g.color[v] % 2 == t % 2) continue;
            LaurentPoly rp = LaurentPoly::constant(n, BigInt(1));
            for (auto [u, m] : nb.red[v])
                for (int k = 0; k < m; ++k) rp = rp * latest[u];
            LaurentPoly bp = LaurentPoly::constant(n, BigInt(1));
            for (auto [w, m] : nb.blue[v])
                for (int k = 0; k < m; ++k) bp = bp * latest[w];
            auto q = LaurentPoly::divide_exact(rp + bp, latest[v]);
            if (!q)
                throw std::logic_error("symbolic_evolve: inexact division (non-recurrent input?)");
            budget.charge(q->term_count());
            next[v] = *q;
            out[v].push_back(*q);
        }
        latest = std::move(next);
    }
    return out;
}

template <class V, class MaxOp, class SumInit>
static ParitySeries<V> tropical_impl(const Bigraph& g, const std::vector<V>& lam, int steps,
                                     MaxOp maxop, SumInit zero) {
    Neighborhoods nb(g);
    int n = g.n;
    ParitySeries<V> out(n);
    std::vector<V> latest(lam);
    for (int v = 0; v < n; ++v) out[v].push_back(lam[v]);
    for (int t = 1; t <= steps; ++t) {
        std::vector<V> next = latest;
        for (int v = 0; v < n; ++v) {
            if (g.color[v] % 2 == t % 2) continue;
            V rs = zero, bs = zero;
            for (auto [u, m] : nb.red[v])
                for (int k = 0; k < m; ++k) rs += latest[u];
            for (auto [w, m] : nb.blue[v])
                for (int k = 0; k < m; ++k) bs += latest[w];
            next[v] = maxop(rs, bs) - latest[v];
            out[v].push_back(next[v]);
        }
        latest = std::move(next);
    }
    return out;
}

ParitySeries<Rational> tropical_evolve(const Bigraph& g, const std::vector<Rational>& lam, int steps) {
    return tropical_impl<Rational>(
        g, lam, steps, [](const Rational& a, const Rational& b) { return a > b ? a : b; },
        Rational(0));
}

ParitySeries<double> tropical_evolve(const Bigraph& g, const std::vector<double>& lam, int steps) {
    return tropical_impl<double>(
        g, lam, steps, [](double a, double b) { return std::max(a, b); }, 0.0);
}

bool deg_max_check(const Bigraph& g, const std::vector<Rational>& lam, int steps, TermBudget& budget) {
    auto sym = symbolic_evolve(g, steps, budget);
    auto trop = tropical_evolve(g, lam, steps);
    for (int v = 0; v < g.n; ++v) {
        if (sym[v].size() != trop[v].size()) return false;
        for (size_t k = 0; k < sym[v].size(); ++k) {
            auto d = sym[v][k].weighted_max_degree(lam);
            if (!d || *d != trop[v][k]) return false;
        }
    }
    return true;
}

ParitySeries<double> numeric_evolve(const Bigraph& g, const std::vector<double>& init, int steps) {
    if ((int)init.size() != g.n) throw std::invalid_argument("numeric_evolve: init size mismatch");
    for (double x : init)
        if (!(x > 0)) throw std::invalid_argument("numeric_evolve: init must be positive");
    Neighborhoods nb(g);
    int n = g.n;
    ParitySeries<double> out(n);
    std::vector<double> latest(n);  // log T
    for (int v = 0; v < n; ++v) {
        latest[v] = std::log(init[v]);
        out[v].push_back(latest[v]);
    }
    for (int t = 1; t <= steps; ++t) {
        std::vector<double> next = latest;
        for (int v = 0; v < n; ++v) {
            if (g.color[v] % 2 == t % 2) continue;
            double rs = 0, bs = 0;  // empty products are log 1 = 0
            for (auto [u, m] : nb.red[v]) rs += m * latest[u];
            for (auto [w, m] : nb.blue[v]) bs += m * latest[w];
            double mx = std::max(rs, bs);
            double val = mx + std::log1p(std::exp(std::min(rs, bs) - mx)) - latest[v];
            if (!std::isfinite(val))
                throw std::runtime_error("numeric_evolve: non-finite value at step " +
                                         std::to_string(t));
            next[v] = val;
            out[v].push_back(val);
        }
        latest = std::move(next);
    }
    return out;
}

std::string growth_tag_name(GrowthTag t) {
    switch (t) {
        case GrowthTag::Bounded: return "Bounded";
        case GrowthTag::Exponential: return "Exponential";
        case GrowthTag::QuadraticExponential: return "QuadraticExponential";
        case GrowthTag::DoublyExponential: return "DoublyExponential";
    }
    return "?";
}

GrowthVerdict growth_classify(const ParitySeries<double>& series, const GrowthConfig& cfg) {
    int n = (int)series.size();
    size_t len = series.empty() ? 0 : series[0].size();
    for (auto& s : series) len = std::min(len, s.size());
    if (len < 64) throw std::invalid_argument("growth_classify: need at least 64 steps");

    // Bounded: revisit of a full state (both parity layers) within rel tol.
    // State k = (values at k-1, values at k) across all vertices, in log space.
    auto state_close = [&](size_t a, size_t b) {
        for (int v = 0; v < n; ++v)
            for (size_t off = 0; off < 2; ++off) {
                double x = series[v][a + off], y = series[v][b + off];
                if (std::fabs(x - y) > cfg.bounded_rel_tol * std::max(1.0, std::fabs(x)))
                    return false;
            }
        return true;
    };
    for (size_t b = 1; b + 1 < len; ++b)
        for (size_t a = 0; a < b; ++a)
            if (state_close(a, b)) {
                GrowthVerdict v;
                v.tag = GrowthTag::Bounded;
                v.period = (int)(b - a);
                v.statistic = "state-revisit";
                return v;
            }

    // pick the vertex with the largest final log value
    int vbest = 0;
    for (int v = 1; v < n; ++v)
        if (series[v][len - 1] > series[vbest][len - 1]) vbest = v;
    const auto& y = series[vbest];

    struct Stat {
        GrowthTag tag;
        std::string name;
        double mean = 0, rel_sd = 0;
        bool ok = false;
    };
    std::vector<Stat> stats = {{GrowthTag::Exponential, "log f(t)/t"},
                               {GrowthTag::QuadraticExponential, "log f(t)/t^2"},
                               {GrowthTag::DoublyExponential, "log log f(t)/t"}};
    size_t lo = len / 2, hi = len;
    for (auto& st : stats) {
        std::vector<double> vals;
        bool defined = true;
        for (size_t k = lo; k < hi; ++k) {
            double t = (double)k;
            double val;
            if (st.tag == GrowthTag::Exponential) val = y[k] / t;
            else if (st.tag == GrowthTag::QuadraticExponential) val = y[k] / (t * t);
            else {
                if (y[k] <= 0) { defined = false; break; }
                val = std::log(y[k]) / t;
            }
            vals.push_back(val);
        }
        if (!defined || vals.empty()) continue;
        double mean = 0;
        for (double x : vals) mean += x;
        mean /= (double)vals.size();
        double var = 0;
        for (double x : vals) var += (x - mean) * (x - mean);
        var /= (double)vals.size();
        st.mean = mean;
        st.rel_sd = mean != 0 ? std::sqrt(var) / std::fabs(mean) : 1e18;
        st.ok = mean > 0 && st.rel_sd < cfg.stabilize_rel_sd;
    }
    const Stat* chosen = nullptr;
    for (auto& st : stats)
        if (st.ok) {
            if (chosen)
                throw InconclusiveGrowth("growth_classify: multiple statistics stabilize (" +
                                         chosen->name + ", " + st.name + ")");
            chosen = &st;
        }
    if (!chosen) throw InconclusiveGrowth("growth_classify: no statistic stabilizes");
    GrowthVerdict v;
    v.tag = chosen->tag;
    v.rate = chosen->mean;
    v.statistic = chosen->name;
    v.rel_sd = chosen->rel_sd;
    v.window_lo = (int)lo;
    v.window_hi = (int)hi;
    return v;
}

}  // namespace zlab
