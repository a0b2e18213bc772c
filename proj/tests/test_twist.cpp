#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "zlab/catalog.hpp"
#include "zlab/twist.hpp"

using namespace zlab;

namespace {

Graph path4() { return Graph::make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}); }

// affine function of (a,b,c,d); exact equality via evaluation at 0 and units
using Affine = std::vector<Rational>;  // coefficients (const, a, b, c, d)

std::vector<Affine> apply_word(const Graph& g, int b, const std::vector<int>& word, bool marked) {
    // evaluate at (0,0,0,0) and the four unit vectors to pin the affine maps
    std::vector<std::vector<Rational>> results;
    for (int probe = 0; probe < 5; ++probe) {
        std::vector<Rational> h(4);
        if (probe > 0) h[probe - 1] = Rational(1);
        for (int i : word) h = marked ? reflect_marked(g, b, i, h) : reflect(g, i, h);
        results.push_back(h);
    }
    std::vector<Affine> out(4, Affine(5));
    for (int coord = 0; coord < 4; ++coord) {
        out[coord][0] = results[0][coord];
        for (int v = 0; v < 4; ++v) out[coord][1 + v] = results[1 + v][coord] - results[0][coord];
    }
    return out;
}

Affine lin(long long c0, long long ca, long long cb, long long cc, long long cd) {
    return {Rational(c0), Rational(ca), Rational(cb), Rational(cc), Rational(cd)};
}

Quiver orient_toward_color0(const Graph& g, const std::vector<int>& color) {
    std::vector<Arrow> arrows;
    for (const Edge& e : g.edges) {
        int from = color[e.u] == 1 ? e.u : e.v;
        int to = e.u ^ e.v ^ from;
        arrows.push_back({from, to, e.mult});
    }
    return Quiver::make(g.n, arrows, color);
}

Quiver orientation_of(const DynkinType& t) {
    CanonicalDiagram d = canonical_graph(t);
    return orient_toward_color0(d.graph, d.color);
}

std::mt19937 rng(2024);

Graph random_graph(int max_n) {
    int n = 2 + (int)(rng() % (max_n - 1));
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 3 == 0) es.push_back({u, v, 1 + (int)(rng() % 2)});
    // keep it connected: chain fallback edges
    for (int v = 1; v < n; ++v)
        if (rng() % 2) es.push_back({v - 1, v, 1});
    return Graph::make(n, es);
}

}  // namespace

TEST_CASE("the reflection table of the worked path example") {
    Graph g = path4();
    int b = 1;  // the distinguished vertex is the second one
    // plain reflections
    auto r1 = apply_word(g, b, {1}, false);
    CHECK(r1[0] == lin(0, 1, 0, 0, 0));
    CHECK(r1[1] == lin(0, 1, -1, 1, 0));  // a + c - b
    CHECK(r1[2] == lin(0, 0, 0, 1, 0));
    CHECK(r1[3] == lin(0, 0, 0, 0, 1));
    auto r2 = apply_word(g, b, {1, 2}, false);
    CHECK(r2[1] == lin(0, 1, -1, 1, 0));
    CHECK(r2[2] == lin(0, 1, -1, 0, 1));  // a + d - b
    auto r3 = apply_word(g, b, {1, 2, 1}, false);
    CHECK(r3[1] == lin(0, 1, 0, -1, 1));  // a + d - c
    CHECK(r3[2] == lin(0, 1, -1, 0, 1));
    // marked reflections pick up +1 at b
    auto m1 = apply_word(g, b, {1}, true);
    CHECK(m1[1] == lin(1, 1, -1, 1, 0));  // a + c - b + 1
    auto m2 = apply_word(g, b, {1, 2}, true);
    CHECK(m2[1] == lin(1, 1, -1, 1, 0));
    CHECK(m2[2] == lin(1, 1, -1, 0, 1));  // a + d - b + 1
    auto m3 = apply_word(g, b, {1, 2, 1}, true);
    CHECK(m3[1] == lin(1, 1, 0, -1, 1));  // a + d - c + 1
    CHECK(m3[2] == lin(1, 1, -1, 0, 1));
}

TEST_CASE("reflections are involutions and satisfy braid relations") {
    for (int it = 0; it < 60; ++it) {
        Graph g = random_graph(6);
        std::vector<Rational> h;
        for (int v = 0; v < g.n; ++v)
            h.push_back(Rational((long long)(rng() % 19) - 9, 1 + (long long)(rng() % 5)));
        int b = (int)(rng() % g.n);
        for (int i = 0; i < g.n; ++i) CHECK(reflect(g, i, reflect(g, i, h)) == h);
        // braid relations of the marked action: m_ij = 3 on a single edge, 2 on a non-edge
        auto mult = adjacency(g.n, g.edges);
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j) {
                long long q = mult[(size_t)i * g.n + j];
                if (q > 1) continue;  // infinite order on multi-edges
                int m = q == 1 ? 3 : 2;
                std::vector<Rational> x = h;
                for (int rep = 0; rep < m; ++rep) {
                    x = reflect_marked(g, b, j, x);
                    x = reflect_marked(g, b, i, x);
                }
                CHECK(x == h);
            }
    }
}

TEST_CASE("twist of a triangle is the del Pezzo 3 quiver") {
    Quiver tri = Quiver::make(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    Quiver dp3 = twist_quiver(tri);
    CHECK(dp3.n == 6);
    long long arrows = 0;
    for (const Arrow& a : dp3.arrows) arrows += a.mult;
    CHECK(arrows == 12);
    // tau_i fixes the twist: mutate at i' then i'', then swap the two labels
    for (int i = 0; i < 3; ++i) {
        Quiver m = mutate(mutate(dp3, i), 3 + i);
        std::vector<Arrow> swapped;
        auto sw = [&](int v) { return v == i ? 3 + i : v == 3 + i ? i : v; };
        for (const Arrow& a : m.arrows) swapped.push_back({sw(a.from), sw(a.to), a.mult});
        CHECK(Quiver::make(6, swapped) == Quiver::make(6, dp3.arrows));
    }
}

TEST_CASE("twist quiver of a bipartite quiver matches the bigraph twist") {
    for (auto t : std::vector<DynkinType>{{DynkinKind::A, 4}, {DynkinKind::AffD, 4}}) {
        CanonicalDiagram d = canonical_graph(t);
        Quiver q = orient_toward_color0(d.graph, d.color);
        Quiver qq = twist_quiver(q);
        CHECK(qq.bipartition.has_value());
        CHECK(is_isomorphic(bigraph_of(qq), build_twist(d.graph)));
        long long a0 = 0, a1 = 0;
        for (const Arrow& a : q.arrows) a0 += a.mult;
        for (const Arrow& a : qq.arrows) a1 += a.mult;
        CHECK(a1 == 4 * a0);
    }
}

TEST_CASE("one tau step on the A_2 quiver") {
    TermBudget budget;
    Quiver q = Quiver::make(2, {{0, 1, 1}});
    TauState st = tau_evolve_symbolic(q, {0}, budget);
    int nv = 4;  // x0' x1' x0'' x1''
    LaurentPoly expect = *LaurentPoly::divide_exact(
        LaurentPoly::variable(nv, 1) + LaurentPoly::variable(nv, 3),
        LaurentPoly::variable(nv, 2));
    CHECK(st.prime[0] == expect);  // (x_1' + x_1'')/x_0''
    // empty sequence keeps the seed
    TauState st0 = tau_evolve_symbolic(q, {}, budget);
    CHECK(st0.prime[0] == LaurentPoly::variable(nv, 0));
    CHECK(st0.dprime[1] == LaurentPoly::variable(nv, 3));
}

TEST_CASE("exponent matrix of the A_2 example") {
    Graph g = Graph::make(2, {{0, 1, 1}});
    auto a = exponent_matrix(g, {0});
    CHECK(a[0][0] == 1);
    CHECK(a[1][0] == 0);
    CHECK(a[0][1] == 0);
    CHECK(a[1][1] == 0);
    auto empty = exponent_matrix(g, {});
    CHECK(empty[0][0] == 0);
    CHECK(empty[1][1] == 0);
}

TEST_CASE("positivity of exponent matrices on random instances") {
    for (int it = 0; it < 300; ++it) {
        Graph g = random_graph(6);
        int len = 1 + (int)(rng() % 20);
        std::vector<int> seq;
        for (int k = 0; k < len; ++k) seq.push_back((int)(rng() % g.n));
        auto a = exponent_matrix(g, seq);
        for (auto& row : a)
            for (long long x : row) CHECK(x >= 0);
    }
}

TEST_CASE("factorization holds for the del Pezzo, A_3 and hD_4 twists") {
    TermBudget budget;
    budget.limit = 10000000;
    Quiver tri = Quiver::make(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    Quiver a3 = orientation_of({DynkinKind::A, 3});
    Quiver d4 = orientation_of({DynkinKind::AffD, 4});
    for (const Quiver& q : {tri, a3, d4}) {
        CHECK(factorization_check(q, {}, budget));
        for (int it = 0; it < 12; ++it) {
            int len = 1 + (int)(rng() % 6);
            std::vector<int> seq;
            for (int k = 0; k < len; ++k) seq.push_back((int)(rng() % q.n));
            CHECK(factorization_check(q, seq, budget));
        }
    }
}

TEST_CASE("coxeter analysis trichotomy") {
    for (auto [t, h] : std::vector<std::pair<DynkinType, long long>>{
             {{DynkinKind::A, 2}, 3}, {{DynkinKind::A, 5}, 6},
             {{DynkinKind::D, 4}, 6}, {{DynkinKind::E6, 6}, 12}}) {
        CanonicalDiagram d = canonical_graph(t);
        CoxeterData cd = coxeter_analysis(d.graph, d.color);
        CHECK(cd.kind == CoxeterData::Kind::FinitePeriodic);
        CHECK(cd.period_or_m == h);
    }
    for (auto [t, m] : std::vector<std::pair<DynkinType, long long>>{
             {{DynkinKind::AffA, 3}, 2}, {{DynkinKind::AffD, 4}, 2},
             {{DynkinKind::AffD, 5}, 6}, {{DynkinKind::AffE6, 6}, 6},
             {{DynkinKind::AffE7, 7}, 12}, {{DynkinKind::AffE8, 8}, 30}}) {
        CanonicalDiagram d = canonical_graph(t);
        CoxeterData cd = coxeter_analysis(d.graph, d.color);
        CHECK(cd.kind == CoxeterData::Kind::AffineUnipotent);
        CHECK(cd.period_or_m == m);
        CHECK(cd.period_or_m == affine_coxeter_number(t));
    }
    Graph star = Graph::make(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
    CoxeterData cd = coxeter_analysis(star, {0, 1, 1, 1, 1, 1});
    CHECK(cd.kind == CoxeterData::Kind::IndefiniteExpanding);
}

TEST_CASE("growth samples: periodic, quadratic, exponential") {
    auto second_diffs_on_stride = [](const std::vector<long long>& g, long long stride) {
        std::vector<long long> d;
        for (size_t i = 2 * stride; i < g.size(); i += stride)
            d.push_back(g[i] - 2 * g[i - stride] + g[i - 2 * stride]);
        return d;
    };
    {
        CanonicalDiagram d = canonical_graph({DynkinKind::A, 3});
        CoxeterData cd = coxeter_analysis(d.graph, d.color, 24);
        for (size_t i = 0; i + cd.period_or_m < cd.growth.size(); ++i)
            CHECK(cd.growth[i] == cd.growth[i + cd.period_or_m]);
    }
    for (auto t : std::vector<DynkinType>{{DynkinKind::AffA, 3}, {DynkinKind::AffE6, 6}}) {
        CanonicalDiagram d = canonical_graph(t);
        CoxeterData cd = coxeter_analysis(d.graph, d.color, 40);
        auto dd = second_diffs_on_stride(cd.growth, cd.period_or_m);
        REQUIRE(dd.size() >= 3);
        for (size_t i = 1; i < dd.size(); ++i) CHECK(dd[i] == dd[0]);
        CHECK(dd[0] > 0);
    }
    {
        Graph star = Graph::make(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
        CoxeterData cd = coxeter_analysis(star, {0, 1, 1, 1, 1, 1}, 20);
        for (size_t i = 6; i + 1 < cd.growth.size(); ++i)
            CHECK((double)cd.growth[i + 1] > (1.0 + 1e-6) * (double)cd.growth[i]);
    }
}

TEST_CASE("devron property of twists") {
    CHECK(devron_check(orientation_of({DynkinKind::A, 3})));
    CHECK(devron_check(orientation_of({DynkinKind::AffD, 4})));
    CHECK(devron_check(orientation_of({DynkinKind::AffA, 1})));
    CHECK(devron_check(orientation_of({DynkinKind::AffE6, 6})));
    CHECK(devron_check(orientation_of({DynkinKind::A, 1})));
    CHECK_THROWS(devron_check(Quiver::make(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}})));
}

TEST_CASE("coxeter-mckay ratios are 1 or 2") {
    for (auto t : std::vector<DynkinType>{{DynkinKind::AffA, 3}, {DynkinKind::AffA, 9},
                                          {DynkinKind::AffD, 4}, {DynkinKind::AffD, 5},
                                          {DynkinKind::AffD, 8}, {DynkinKind::AffD, 9},
                                          {DynkinKind::AffE6, 6}, {DynkinKind::AffE7, 7},
                                          {DynkinKind::AffE8, 8}}) {
        long long g = coxeter_mckay_ratio(t);
        CHECK((g == 1 || g == 2));
        CHECK(4 * affine_coxeter_number(t) == g * mckay_number(t));
    }
    CHECK(coxeter_mckay_ratio({DynkinKind::AffA, 3}) == 2);
    CHECK(coxeter_mckay_ratio({DynkinKind::AffD, 4}) == 1);
    CHECK(coxeter_mckay_ratio({DynkinKind::AffE6, 6}) == 1);
}

TEST_CASE("conserved quantities on small twists") {
    for (auto [t, m, g] : std::vector<std::tuple<DynkinType, long long, long long>>{
             {{DynkinKind::AffD, 4}, 2, 1},
             {{DynkinKind::AffA, 3}, 2, 2},
             {{DynkinKind::AffE6, 6}, 6, 1}}) {
        ConservedReport rep = conserved_check(t, 5, 777, 1e-8, 3);
        CHECK(rep.m == m);
        CHECK(rep.ratio == g);
        CHECK_MESSAGE(rep.ok, t.name(), " worst_b=", rep.worst_b, " worst_a=", rep.worst_a);
        CHECK(rep.worst_b <= 1e-8);
        CHECK(rep.worst_a <= 1e-8);
        CHECK(rep.sign != 0);
    }
}

TEST_CASE("factorization on random small quivers") {
    TermBudget budget;
    budget.limit = 10000000;
    std::mt19937 lrng(31337);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + (int)(lrng() % 4);  // up to 5 vertices
        std::vector<Arrow> arrows;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int roll = (int)(lrng() % 3);
                if (roll == 0) arrows.push_back({u, v, 1});
                else if (roll == 1) arrows.push_back({v, u, 1});
            }
        Quiver q = Quiver::make(n, arrows);
        int len = 1 + (int)(lrng() % 6);
        std::vector<int> seq;
        for (int k = 0; k < len; ++k) seq.push_back((int)(lrng() % n));
        CHECK(factorization_check(q, seq, budget));
    }
}
