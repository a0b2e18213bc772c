// Acceptance suite: one line per criterion, exact tolerances pinned in code.
//
// Criterion 7 is special: the closed form it asserts for the tropical system
// under a Perron seed does not satisfy the tropical recurrence (a two-vertex
// instance with a tripled red edge gives the sequence 1, 2, 5, 13, 34, ...
// with ratio (3+sqrt 5)/2 rather than mu - 1 = 2).  The criterion is run
// exactly as stated and is expected to fail; the companion check 7b verifies
// the corrected statement (the same system with z-scaled seeds follows the
// exact geometric solution with z^2 - mu z + 1 = 0) at the same tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "zlab/catalog.hpp"
#include "zlab/dynamics.hpp"
#include "zlab/dynkin.hpp"
#include "zlab/quiver.hpp"
#include "zlab/spectral.hpp"
#include "zlab/twist.hpp"

using namespace zlab;

namespace {

int failures = 0;
int expected_failures = 0;

double now() {
    static auto start = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& id, bool pass, const std::string& note, double secs,
            bool expect_fail = false) {
    printf("[%3s] %s %s%s(%.1fs)\n", id.c_str(), pass ? "PASS" : "FAIL",
           note.empty() ? "" : (note + " ").c_str(), expect_fail ? "[expected failure] " : "",
           secs);
    fflush(stdout);
    if (!pass) {
        if (expect_fail) ++expected_failures;
        else ++failures;
    } else if (expect_fail) {
        // a documented-defective criterion passing would be a surprise worth failing on
        ++failures;
    }
}

DynkinType hA(int i) { return {DynkinKind::AffA, i}; }
DynkinType hD(int i) { return {DynkinKind::AffD, i}; }
DynkinType hE(int i) {
    if (i == 6) return {DynkinKind::AffE6, 6};
    if (i == 7) return {DynkinKind::AffE7, 7};
    return {DynkinKind::AffE8, 8};
}

Graph finite_path(int n) { return canonical_graph({DynkinKind::A, n}).graph; }

Graph star5() {
    return Graph::make(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
}

Quiver orient_toward_color0(const Graph& g, const std::vector<int>& color) {
    std::vector<Arrow> arrows;
    for (const Edge& e : g.edges) {
        int from = color[e.u] == 1 ? e.u : e.v;
        arrows.push_back({from, e.u ^ e.v ^ from, e.mult});
    }
    return Quiver::make(g.n, arrows, color);
}

Quiver orientation_of(const DynkinType& t) {
    CanonicalDiagram d = canonical_graph(t);
    return orient_toward_color0(d.graph, d.color);
}

const std::vector<FamilyId>& smallest_instances() {
    static const std::vector<FamilyId> fams = {
        {1, {encode_type(hA(1)), encode_type(hA(1))}},
        {2, {encode_type(hA(3))}},
        {3, {2, 1, 3, 1}},
        {4, {2, 2}},   {5, {2, 3}},   {6, {2, 2}},   {7, {2, 2}},   {8, {2, 2}},
        {9, {2, 3}},   {10, {2, 2}},  {11, {1, 3}},  {12, {2}},     {13, {2}},
        {14, {2}},     {15, {2}},     {16, {2}},     {17, {1, 0, 2, 2}},
        {18, {2, 1, 2}}, {19, {5, 2}}, {20, {2, 2}}, {21, {2}},    {22, {2, 2}},
        {23, {2, 2}},  {24, {2, 2}},  {25, {2, 2}},  {26, {2, 2}},  {27, {2, 2}},
        {28, {2, 2}},  {29, {2, 2}},  {30, {2}},     {31, {2}},     {32, {2}},
        {33, {2}},     {34, {2}},     {35, {2}},     {36, {}},      {37, {}},
        {38, {}},      {39, {}},      {40, {}},      {41, {}},      {42, {}},
        {43, {}},      {44, {}},      {45, {}},      {46, {}},      {47, {2, 2}},
        {48, {2, 2}},  {49, {2}},     {50, {2}},     {51, {}},      {52, {}},
        {53, {1, 1}}};
    return fams;
}

bool all_components_are(const Bigraph& g, bool red, bool want_affine) {
    for (auto& comp : components(g.n, red ? g.red : g.blue)) {
        Bigraph sub = induced(g, comp);
        DynkinType t = recognize(Graph::make(sub.n, red ? sub.red : sub.blue)).type;
        if (want_affine ? !t.is_affine() : !t.is_finite_ade()) return false;
    }
    return true;
}

void criterion1() {
    double t0 = now();
    Quiver q = Quiver::make(4, {{0, 1, 1}, {3, 1, 1}, {3, 2, 1}, {2, 0, 1}, {0, 3, 1}});
    Quiver expect = Quiver::make(4, {{1, 0, 1}, {3, 1, 1}, {3, 0, 1}, {0, 2, 1}, {2, 1, 1}});
    bool ok = mutate(q, 0) == expect && mutate(mutate(q, 0), 0) == q;
    report("1", ok, "mutation fixture", now() - t0);
}

void criterion2() {
    double t0 = now();
    // every family at its smallest parameters, all 13 exceptionals included,
    // plus every catalog instance on at most 12 vertices
    std::vector<std::pair<std::string, Bigraph>> instances;
    for (const FamilyId& f : smallest_instances()) instances.push_back({f.to_string(), build_family(f)});
    for (auto& [f, g] : enumerate_catalog(12)) instances.push_back({f.to_string(), g});
    bool ok = true;
    std::string bad;
    for (auto& [name, g] : instances) {
        bool fine = is_recurrent(g) && all_components_are(g, true, true) &&
                    all_components_are(g, false, true) &&
                    labeling_regime(g).tag == RegimeTag::AffineAffine;
        if (!fine && bad.empty()) bad = name;
        ok &= fine;
    }
    report("2", ok, "catalog soundness over " + std::to_string(instances.size()) + " instances" +
                       (bad.empty() ? "" : " (first failure " + bad + ")"),
           now() - t0);
}

void criterion3() {
    double t0 = now();
    struct Expect {
        FamilyId f;
        const char* kq;
    };
    // transcribed from the classification listing at each item's parameters
    std::vector<Expect> expects = {
        {{2, {encode_type(hD(8))}}, "A_1^(1)[hD_8,hD_8] | A_1^(1)[hD_8,hD_8]"},
        {{3, {2, 1, 3, 1}}, "A_2^(1)[hA_1,hA_1,hA_1] | A_0^(1)[hA_5]"},
        {{5, {2, 3}}, "A_2^(1)[hA_3,hA_3,hA_3] | 1/2A_3^(1)[hA_5,hA_5]"},
        {{7, {2, 2}}, "A_1^(1)[hD_4,hD_4] | C_2^(1)[hA_3,hA_1,hA_3]"},
        {{12, {2}}, "A_1^(1)[hD_4,hD_4] | A_2^(2)[hA_1,hA_7]"},
        {{17, {1, 0, 3, 2}}, "C_3^(1)[hD_4,hA_3,hA_3,hD_4] | C_2^(1)[hD_5,hA_5,hD_5]"},
        {{19, {5, 2}}, "A_1^(1)[hD_7,hD_7] | A_1^(1)[hD_7,hD_7]"},
        {{22, {2, 2}}, "C_2^(1)[hA_7,hA_3,hD_4] | D_3^(2)[hD_4,hD_6,hD_4]"},
        {{25, {2, 2}}, "A_4^(2)[hA_3,hD_4,hD_6] | A_4^(2)[hA_3,hD_4,hD_6]"},
        {{31, {2}}, "A_4^(2)[hA_3,hD_4,hD_6] | A_2^(2)[hD_4,hD_10]"},
        {{36, {}}, "A_1^(1)[hE_8,hE_8] | A_1^(1)[hE_8,hE_8]"},
        {{39, {}}, "A_2^(2)[hA_3,hD_6] | A_2^(2)[hA_3,hD_6]"},
        {{42, {}}, "G_2^(1)[hD_5,hD_5,hA_3] | A_1^(1)[hE_7,hE_7]"},
        {{46, {}}, "G_2^(1)[hE_6,hE_6,hD_4] | G_2^(1)[hE_6,hE_6,hD_4]"},
        {{53, {1, 2}}, "1/2C_5^(1)[hD_5,hA_5,hA_5] | 1/2C_3^(1)[hD_7,hA_9]"},
    };
    bool ok = true;
    std::string bad;
    for (auto& e : expects) {
        std::string got = kac_quadruple(build_family(e.f)).to_string();
        if (got != e.kq) {
            ok = false;
            if (bad.empty()) bad = e.f.to_string() + " got " + got;
        }
    }
    report("3", ok, "kac quadruples (15 items)" + (bad.empty() ? "" : ": " + bad), now() - t0);
}

void criterion4() {
    double t0 = now();
    bool ok = true;
    int by_iso = 0, by_kq = 0;
    std::string bad;
    for (auto& [f, g] : enumerate_catalog(40)) {
        bool fine;
        if (auto d = build_dual_instance(f)) {
            fine = is_isomorphic(dual(g), *d);
            ++by_iso;
        } else {
            KacQuadruple kq = kac_quadruple(g), kqd = kac_quadruple(dual(g));
            fine = kq.s_gstar == kqd.s_g && kq.descr_gstar == kqd.descr_g &&
                   kq.s_g == kqd.s_gstar && kq.descr_g == kqd.descr_gstar;
            ++by_kq;
        }
        if (!fine && bad.empty()) bad = f.to_string();
        ok &= fine;
    }
    report("4", ok,
           "duality closure <= 40 vertices (" + std::to_string(by_iso) + " explicit, " +
               std::to_string(by_kq) + " via quadruple transposition)" +
               (bad.empty() ? "" : " first failure " + bad),
           now() - t0);
}

void criterion5() {
    double t0 = now();
    bool ok = true;
    long long checked = 0;
    for (auto& [f, g] : enumerate_catalog(40)) {
        std::vector<std::vector<int>> comps;
        WeakGCM a = cartan_of(g, comps);
        std::vector<DynkinType> types;
        for (auto& comp : comps) {
            Bigraph sub = induced(g, comp);
            types.push_back(recognize(Graph::make(sub.n, sub.red)).type);
        }
        for (int i = 0; i < a.n; ++i)
            for (int j = i + 1; j < a.n; ++j) {
                if (a.at(i, j) == 0) continue;
                long long p = -a.at(i, j), q = -a.at(j, i);
                ok &= p * mckay_number(types[i]) == q * mckay_number(types[j]);
                ++checked;
            }
    }
    report("5", ok, "double-count identity over " + std::to_string(checked) + " bindings",
           now() - t0);
}

void criterion6() {
    double t0 = now();
    std::mt19937 rng(20260808);
    auto rand_lam = [&](int n) {
        std::vector<Rational> lam;
        for (int v = 0; v < n; ++v)
            lam.push_back(Rational(1 + (long long)(rng() % 5), 1 + (long long)(rng() % 4)));
        return lam;
    };
    std::vector<std::pair<std::string, Bigraph>> cases = {
        {"A2xA2", build_tensor(finite_path(2), finite_path(2))},
        {"A3xA3", build_tensor(finite_path(3), finite_path(3))},
        {"hA1xhA1", build_tensor(canonical_graph(hA(1)).graph, canonical_graph(hA(1)).graph)},
        {"hA3xA3", build_tensor(canonical_graph(hA(3)).graph, finite_path(3))},
        {"twistD4", build_twist(canonical_graph(hD(4)).graph)},
    };
    bool ok = true;
    std::string bad;
    for (auto& [name, g] : cases) {
        TermBudget budget;
        budget.limit = 100000000;
        auto sym = symbolic_evolve(g, 7, budget);  // all values with t <= 8
        for (int rep = 0; rep < 3; ++rep) {
            auto lam = rand_lam(g.n);
            auto trop = tropical_evolve(g, lam, 7);
            for (int v = 0; v < g.n && ok; ++v)
                for (size_t k = 0; k < sym[v].size(); ++k) {
                    auto d = sym[v][k].weighted_max_degree(lam);
                    if (!d || *d != trop[v][k]) {
                        ok = false;
                        bad = name;
                        break;
                    }
                }
        }
    }
    report("6", ok, "tropical = max degree (5 bigraphs x 3 labelings, t <= 8)" +
                       (bad.empty() ? "" : " first failure " + bad),
           now() - t0);
}

void criterion7() {
    double t0 = now();
    Bigraph g = build_tensor(star5(), finite_path(2));
    PerronData p = perron(g, 1e-15, 300000);
    auto trop = tropical_evolve(g, p.eigenvector, 80);
    double mu = std::sqrt(5.0);
    // as stated: t(eps_v + 2t) = lambda(v) (sqrt5 - 1)^t at t = 40, rel tol 1e-9
    bool stated = true;
    double worst = 0;
    for (int v = 0; v < g.n; ++v) {
        double expect = p.eigenvector[v] * std::pow(mu - 1.0, 40.0);
        double rel = std::fabs(trop[v][40] - expect) / std::fabs(expect);
        worst = std::max(worst, rel);
        stated &= rel <= 1e-9;
    }
    char note[160];
    snprintf(note, sizeof note,
             "entropy closed form as stated (worst rel deviation %.3e; see notes in header)", worst);
    report("7", stated, note, now() - t0, /*expect_fail=*/true);

    // corrected closed form: z-scaled seeds follow lambda(v) z^t exactly
    double t1 = now();
    double z = (mu + std::sqrt(mu * mu - 4.0)) / 2.0;
    std::vector<double> seed(g.n);
    for (int v = 0; v < g.n; ++v) seed[v] = p.eigenvector[v] * (g.color[v] ? z : 1.0);
    auto trop2 = tropical_evolve(g, seed, 80);
    bool fixed = true;
    for (int v = 0; v < g.n; ++v) {
        double expect = p.eigenvector[v] * std::pow(z, (double)(g.color[v] + 2 * 40));
        fixed &= std::fabs(trop2[v][40] - expect) <= 1e-9 * std::fabs(expect);
    }
    report("7b", fixed, "corrected geometric form, z^2 - sqrt(5) z + 1 = 0, rel tol 1e-9",
           now() - t1);
}

void criterion8() {
    double t0 = now();
    auto tag_of = [](const Bigraph& g) {
        auto series = numeric_evolve(g, std::vector<double>(g.n, 1.0), 256);
        return growth_classify(series).tag;
    };
    bool ok = true;
    ok &= tag_of(build_tensor(finite_path(3), finite_path(3))) == GrowthTag::Bounded;
    ok &= tag_of(build_tensor(canonical_graph(hA(3)).graph, finite_path(3))) == GrowthTag::Exponential;
    ok &= tag_of(build_tensor(canonical_graph(hA(1)).graph, canonical_graph(hA(1)).graph)) ==
          GrowthTag::QuadraticExponential;
    ok &= tag_of(build_twist(canonical_graph(hD(4)).graph)) == GrowthTag::QuadraticExponential;
    ok &= tag_of(build_tensor(star5(), finite_path(2))) == GrowthTag::DoublyExponential;
    report("8", ok, "growth regimes of the five reference systems (256 steps)", now() - t0);
}

void criterion9() {
    double t0 = now();
    Graph g = Graph::make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    int b = 1;
    auto probe = [&](const std::vector<int>& word, bool marked, long long a, long long bb,
                     long long c, long long d) {
        // evaluate at five points to pin the affine map exactly
        std::vector<std::vector<Rational>> rs;
        for (int pr = 0; pr < 5; ++pr) {
            std::vector<Rational> h(4);
            if (pr > 0) h[pr - 1] = Rational(1);
            for (int i : word) h = marked ? reflect_marked(g, b, i, h) : reflect(g, i, h);
            rs.push_back(h);
        }
        return [rs](int coord, std::vector<Rational> expect_coeffs) {
            Rational c0 = rs[0][coord];
            if (c0 != expect_coeffs[0]) return false;
            for (int v = 0; v < 4; ++v)
                if (rs[1 + v][coord] - rs[0][coord] != expect_coeffs[1 + v]) return false;
            return true;
        };
        (void)a; (void)bb; (void)c; (void)d;
    };
    auto lin = [](long long c0, long long ca, long long cb, long long cc, long long cd) {
        return std::vector<Rational>{Rational(c0), Rational(ca), Rational(cb), Rational(cc),
                                     Rational(cd)};
    };
    bool ok = true;
    auto r1 = probe({1}, false, 0, 0, 0, 0);
    ok &= r1(1, lin(0, 1, -1, 1, 0));                 // s_2 h = a + c - b
    auto r2 = probe({1, 2}, false, 0, 0, 0, 0);
    ok &= r2(1, lin(0, 1, -1, 1, 0)) && r2(2, lin(0, 1, -1, 0, 1));
    auto r3 = probe({1, 2, 1}, false, 0, 0, 0, 0);
    ok &= r3(1, lin(0, 1, 0, -1, 1)) && r3(2, lin(0, 1, -1, 0, 1));
    auto m1 = probe({1}, true, 0, 0, 0, 0);
    ok &= m1(1, lin(1, 1, -1, 1, 0));
    auto m2 = probe({1, 2}, true, 0, 0, 0, 0);
    ok &= m2(1, lin(1, 1, -1, 1, 0)) && m2(2, lin(1, 1, -1, 0, 1));
    auto m3 = probe({1, 2, 1}, true, 0, 0, 0, 0);
    ok &= m3(1, lin(1, 1, 0, -1, 1)) && m3(2, lin(1, 1, -1, 0, 1));
    report("9", ok, "reflection table (six rows, exact)", now() - t0);
}

void criterion10() {
    double t0 = now();
    std::mt19937 rng(99);
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + (int)(rng() % 5);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) es.push_back({u, v, 1 + (int)(rng() % 2)});
        for (int v = 1; v < n; ++v)
            if (rng() % 2) es.push_back({v - 1, v, 1});
        Graph g = Graph::make(n, es);
        int len = 1 + (int)(rng() % 20);
        std::vector<int> seq;
        for (int k = 0; k < len; ++k) seq.push_back((int)(rng() % n));
        auto a = exponent_matrix(g, seq);
        for (auto& row : a)
            for (long long x : row) ok &= x >= 0;
    }
    report("10", ok, "positivity over 1000 random reflection orbits", now() - t0);
}

void criterion11() {
    double t0 = now();
    std::mt19937 rng(7);
    TermBudget budget;
    budget.limit = 100000000;
    Quiver tri = Quiver::make(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    Quiver a3 = orientation_of({DynkinKind::A, 3});
    Quiver d4 = orientation_of({DynkinKind::AffD, 4});
    bool ok = true;
    for (const Quiver& q : {tri, a3, d4})
        for (int it = 0; it < 50 && ok; ++it) {
            int len = 1 + (int)(rng() % 6);
            std::vector<int> seq;
            for (int k = 0; k < len; ++k) seq.push_back((int)(rng() % q.n));
            ok &= factorization_check(q, seq, budget);
        }
    report("11", ok, "tau factorization (3 quivers x 50 sequences)", now() - t0);
}

void criterion12() {
    double t0 = now();
    bool ok = true;
    for (auto [t, h] : std::vector<std::pair<DynkinType, long long>>{{{DynkinKind::A, 2}, 3},
                                                                     {{DynkinKind::A, 3}, 4},
                                                                     {{DynkinKind::A, 4}, 5},
                                                                     {{DynkinKind::A, 5}, 6},
                                                                     {{DynkinKind::D, 4}, 6},
                                                                     {{DynkinKind::E6, 6}, 12}}) {
        CanonicalDiagram d = canonical_graph(t);
        CoxeterData cd = coxeter_analysis(d.graph, d.color);
        ok &= cd.kind == CoxeterData::Kind::FinitePeriodic && cd.period_or_m == h;
    }
    for (auto [t, m] : std::vector<std::pair<DynkinType, long long>>{
             {{DynkinKind::AffA, 3}, 2}, {{DynkinKind::AffD, 4}, 2}, {{DynkinKind::AffD, 5}, 6},
             {{DynkinKind::AffE6, 6}, 6}, {{DynkinKind::AffE7, 7}, 12},
             {{DynkinKind::AffE8, 8}, 30}}) {
        CanonicalDiagram d = canonical_graph(t);
        CoxeterData cd = coxeter_analysis(d.graph, d.color, 8 + 4 * (int)m);
        ok &= cd.kind == CoxeterData::Kind::AffineUnipotent && cd.period_or_m == m;
    }
    // quadratic growth: second differences along the unipotent stride are
    // eventually constant and positive (per-step second differences oscillate
    // with period m, see notes)
    for (auto t : std::vector<DynkinType>{{DynkinKind::AffA, 3}, {DynkinKind::AffE6, 6}}) {
        CanonicalDiagram d = canonical_graph(t);
        CoxeterData cd = coxeter_analysis(d.graph, d.color, 44);
        long long m = cd.period_or_m;
        std::vector<long long> dd;
        for (size_t i = 2 * m; i < cd.growth.size(); i += m)
            dd.push_back(cd.growth[i] - 2 * cd.growth[i - m] + cd.growth[i - 2 * m]);
        ok &= dd.size() >= 3 && dd[0] > 0;
        for (size_t i = 1; i < dd.size(); ++i) ok &= dd[i] == dd[0];
    }
    {
        CoxeterData cd = coxeter_analysis(star5(), {0, 1, 1, 1, 1, 1}, 20);
        ok &= cd.kind == CoxeterData::Kind::IndefiniteExpanding;
        for (size_t i = 6; i + 1 < cd.growth.size(); ++i)
            ok &= (double)cd.growth[i + 1] > (1.0 + 1e-6) * (double)cd.growth[i];
    }
    report("12", ok, "coxeter trichotomy and growth certificates", now() - t0);
}

void criterion13() {
    double t0 = now();
    bool ok = devron_check(orientation_of({DynkinKind::A, 3})) &&
              devron_check(orientation_of({DynkinKind::AffD, 4})) &&
              devron_check(orientation_of({DynkinKind::AffA, 1})) &&
              devron_check(orientation_of({DynkinKind::AffE6, 6}));
    report("13", ok, "devron property at t0 = 2", now() - t0);
}

void criterion14() {
    double t0 = now();
    bool ok = true;
    for (auto t : std::vector<DynkinType>{hD(4), hA(3), hE(6)}) {
        ConservedReport rep = conserved_check(t, 20, 424242, 1e-8, 3);
        ok &= rep.ok && rep.worst_a <= 1e-8 && rep.worst_b <= 1e-8;
    }
    report("14", ok, "conserved quantities (3 twists x 20 seeds, rel tol 1e-8)", now() - t0);
}

void criterion15() {
    double t0 = now();
    bool ok = true;
    ok &= *coxeter_number({DynkinKind::A, 1}) == 2 && *coxeter_number({DynkinKind::A, 7}) == 8;
    for (int l = 4; l <= 10; ++l) ok &= *coxeter_number({DynkinKind::D, l}) == 2 * l - 2;
    ok &= *coxeter_number({DynkinKind::E6, 6}) == 12 && *coxeter_number({DynkinKind::E7, 7}) == 18 &&
          *coxeter_number({DynkinKind::E8, 8}) == 30;
    ok &= !coxeter_number(hA(5)).has_value();
    for (int l = 1; l <= 11; l += 2) ok &= mckay_number(hA(l)) == l + 1;
    for (int l = 4; l <= 10; ++l) ok &= mckay_number(hD(l)) == 4 * (l - 2);
    ok &= mckay_number(hE(6)) == 24 && mckay_number(hE(7)) == 48 && mckay_number(hE(8)) == 120;
    // cross-checks against the additive functions
    for (auto t : std::vector<DynkinType>{hA(9), hD(7), hE(6), hE(7), hE(8)}) {
        CanonicalDiagram d = canonical_graph(t);
        long long sq = 0, sum = 0;
        for (long long x : d.additive) {
            sq += x * x;
            sum += x;
        }
        ok &= sq == mckay_number(t);
        DynkinType fin = t.kind == DynkinKind::AffA ? DynkinType{DynkinKind::A, t.index}
                         : t.kind == DynkinKind::AffD
                             ? DynkinType{DynkinKind::D, t.index}
                             : t.kind == DynkinKind::AffE6
                                   ? DynkinType{DynkinKind::E6, 6}
                                   : t.kind == DynkinKind::AffE7 ? DynkinType{DynkinKind::E7, 7}
                                                                 : DynkinType{DynkinKind::E8, 8};
        ok &= sum == *coxeter_number(fin);
    }
    report("15", ok, "coxeter and mckay tables", now() - t0);
}

// exhaustive addendum: every affine (x) affine double binding on <= 14
// vertices found by brute force matches a catalog instance or the dual of one
void addendum() {
    double t0 = now();
    auto cat = enumerate_catalog(14);
    std::vector<Bigraph> known;
    for (auto& [f, g] : cat) {
        known.push_back(g);
        known.push_back(dual(g));
        if (auto d = build_dual_instance(f)) known.push_back(*d);
    }
    std::vector<DynkinType> types;
    for (auto t : bipartite_affine_types(12)) types.push_back(t);
    bool ok = true;
    int found_total = 0;
    for (size_t i = 0; i < types.size(); ++i)
        for (size_t j = 0; j < types.size(); ++j) {
            const DynkinType &x = types[i], &y = types[j];
            if (x.vertex_count() + y.vertex_count() > 14) continue;
            for (auto [a, b] : std::vector<std::pair<long long, long long>>{{2, 2}, {4, 1}}) {
                if (a * mckay_number(x) != b * mckay_number(y)) continue;
                if (a == b && i > j) continue;  // unordered pair once
                CanonicalDiagram dx = canonical_graph(x), dy = canonical_graph(y);
                int nx = dx.graph.n, ny = dy.graph.n;
                auto ax = adjacency(nx, dx.graph.edges), ay = adjacency(ny, dy.graph.edges);
                std::vector<Bigraph> found;
                for (int flip = 0; flip < 2; ++flip) {
                    std::vector<std::vector<int>> m(nx, std::vector<int>(ny, 0));
                    std::vector<long long> colsum(ny, 0);
                    auto rec = [&](auto&& self, int xv) -> void {
                        if (xv == nx) {
                            for (int yv = 0; yv < ny; ++yv)
                                if (colsum[yv] != b * dy.additive[yv]) return;
                            for (int u = 0; u < nx; ++u)
                                for (int w = 0; w < ny; ++w) {
                                    long long lhs = 0, rhs = 0;
                                    for (int k = 0; k < nx; ++k) lhs += ax[(size_t)u * nx + k] * m[k][w];
                                    for (int k = 0; k < ny; ++k) rhs += m[u][k] * ay[(size_t)k * ny + w];
                                    if (lhs != rhs) return;
                                }
                            std::vector<int> color(nx + ny);
                            std::vector<Edge> red, blue;
                            for (int u = 0; u < nx; ++u) color[u] = dx.color[u];
                            for (int w = 0; w < ny; ++w) color[nx + w] = dy.color[w] ^ flip;
                            for (const Edge& e : dx.graph.edges) red.push_back(e);
                            for (const Edge& e : dy.graph.edges)
                                red.push_back({nx + e.u, nx + e.v, e.mult});
                            for (int u = 0; u < nx; ++u)
                                for (int w = 0; w < ny; ++w)
                                    if (m[u][w]) blue.push_back({u, nx + w, m[u][w]});
                            Bigraph g = Bigraph::make(nx + ny, color, red, blue);
                            if (!is_connected(g)) return;
                            for (auto& h : found)
                                if (is_isomorphic(h, g)) return;
                            found.push_back(std::move(g));
                            return;
                        }
                        // rows: weighted compositions of a * lambda_x
                        auto fill = [&](auto&& fself, int yv, long long left) -> void {
                            if (yv == ny) {
                                if (left == 0) self(self, xv + 1);
                                return;
                            }
                            long long mx =
                                dx.color[xv] != (dy.color[yv] ^ flip) ? left / dy.additive[yv] : 0;
                            for (long long k = 0; k <= mx; ++k) {
                                if (colsum[yv] + k * dx.additive[xv] > b * dy.additive[yv]) break;
                                m[xv][yv] = (int)k;
                                colsum[yv] += k * dx.additive[xv];
                                fself(fself, yv + 1, left - k * dy.additive[yv]);
                                colsum[yv] -= k * dx.additive[xv];
                                m[xv][yv] = 0;
                            }
                        };
                        fill(fill, 0, a * dx.additive[xv]);
                    };
                    rec(rec, 0);
                }
                for (auto& g : found) {
                    ++found_total;
                    bool matched = false;
                    for (auto& h : known)
                        if (h.n == g.n && is_isomorphic(h, g)) {
                            matched = true;
                            break;
                        }
                    if (!matched) {
                        printf("      unmatched double binding %s * %s (scf %lld,%lld)\n",
                               x.name().c_str(), y.name().c_str(), a, b);
                        ok = false;
                    }
                }
            }
        }
    report("A", ok,
           "exhaustive double bindings <= 14 vertices (" + std::to_string(found_total) +
               " found, all matched to the catalog)",
           now() - t0);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    criterion14();
    criterion15();
    addendum();
    printf("acceptance: %d unexpected failures, %d expected failures (criterion 7 as stated)\n",
           failures, expected_failures);
    return failures == 0 ? 0 : 1;
}
