#include "zlab/dynkin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "zlab/linalg.hpp"

namespace zlab {

Graph Graph::make(int n, std::vector<Edge> edges) {
    Graph g;
    g.n = n;
    g.edges = normalize_edges(std::move(edges));
    for (const Edge& e : g.edges) {
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("graph has a loop");
    }
    return g;
}

int DynkinType::vertex_count() const {
    switch (kind) {
        case DynkinKind::A: return index;
        case DynkinKind::D: return index;
        case DynkinKind::E6: return 6;
        case DynkinKind::E7: return 7;
        case DynkinKind::E8: return 8;
        case DynkinKind::AffA: return index + 1;
        case DynkinKind::AffD: return index + 1;
        case DynkinKind::AffE6: return 7;
        case DynkinKind::AffE7: return 8;
        case DynkinKind::AffE8: return 9;
        default: return 0;
    }
}

std::string DynkinType::name() const {
    switch (kind) {
        case DynkinKind::A: return "A_" + std::to_string(index);
        case DynkinKind::D: return "D_" + std::to_string(index);
        case DynkinKind::E6: return "E_6";
        case DynkinKind::E7: return "E_7";
        case DynkinKind::E8: return "E_8";
        case DynkinKind::AffA: return "hA_" + std::to_string(index);
        case DynkinKind::AffD: return "hD_" + std::to_string(index);
        case DynkinKind::AffE6: return "hE_6";
        case DynkinKind::AffE7: return "hE_7";
        case DynkinKind::AffE8: return "hE_8";
        default: return "NonADE";
    }
}

std::optional<int> coxeter_number(const DynkinType& t) {
    switch (t.kind) {
        case DynkinKind::A: return t.index + 1;
        case DynkinKind::D: return 2 * t.index - 2;
        case DynkinKind::E6: return 12;
        case DynkinKind::E7: return 18;
        case DynkinKind::E8: return 30;
        case DynkinKind::AffA:
        case DynkinKind::AffD:
        case DynkinKind::AffE6:
        case DynkinKind::AffE7:
        case DynkinKind::AffE8: return std::nullopt;  // infinity
        default: throw std::invalid_argument("coxeter_number: not an ADE type");
    }
}

long long mckay_number(const DynkinType& t) {
    switch (t.kind) {
        case DynkinKind::AffA: return t.index + 1;
        case DynkinKind::AffD: return 4LL * (t.index - 2);
        case DynkinKind::AffE6: return 24;
        case DynkinKind::AffE7: return 48;
        case DynkinKind::AffE8: return 120;
        default: throw std::invalid_argument("mckay_number: not an affine ADE type");
    }
}

std::optional<AdditiveFunction> solve_additive(const Graph& g) {
    // kernel of (2I - A) over the rationals
    QMatrix m(g.n, g.n);
    for (int i = 0; i < g.n; ++i) m.at(i, i) = Rational(2);
    for (const Edge& e : g.edges) {
        m.at(e.u, e.v) -= Rational(e.mult);
        m.at(e.v, e.u) -= Rational(e.mult);
    }
    auto basis = nullspace(std::move(m));
    if (basis.size() != 1) return std::nullopt;
    auto& v = basis[0];
    int sign = 0;
    for (const Rational& x : v) {
        if (x.is_zero()) return std::nullopt;
        if (sign == 0) sign = x.sign();
        else if (x.sign() != sign) return std::nullopt;
    }
    // scale to coprime positive integers
    BigInt l(1);
    for (const Rational& x : v) l = l * x.den() / BigInt::gcd(l, x.den());
    std::vector<BigInt> ints;
    for (const Rational& x : v) ints.push_back(x.num() * (l / x.den()) * BigInt(sign));
    BigInt d = ints[0];
    for (const BigInt& x : ints) d = BigInt::gcd(d, x);
    AdditiveFunction f;
    for (const BigInt& x : ints) f.values.push_back((x / d).to_ll());
    return f;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> adj_list(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back({e.v, e.mult});
        adj[e.v].push_back({e.u, e.mult});
    }
    return adj;
}

bool graph_connected(const Graph& g) {
    if (g.n == 0) return false;
    std::vector<int> seen(g.n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    auto adj = adj_list(g);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, m] : adj[v])
            if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    return std::count(seen.begin(), seen.end(), 1) == g.n;
}

// Walks a simple path away from `from` through `start` until a vertex of
// degree != 2 (or dead end); returns the vertices visited (starting at start).
std::vector<int> walk_arm(const std::vector<std::vector<std::pair<int, int>>>& adj, int from, int start) {
    std::vector<int> arm;
    int prev = from, cur = start;
    for (;;) {
        arm.push_back(cur);
        if (adj[cur].size() != 2) return arm;
        int nxt = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
        prev = cur;
        cur = nxt;
    }
}

Recognition non_ade() {
    Recognition r;
    r.type = {DynkinKind::NonADE, 0};
    return r;
}

}  // namespace

Recognition recognize(const Graph& g) {
    if (!graph_connected(g)) throw std::invalid_argument("recognize: graph must be connected");
    Recognition out;
    auto adj = adj_list(g);
    long long edge_total = 0;
    bool multi = false;
    for (const Edge& e : g.edges) {
        edge_total += e.mult;
        if (e.mult > 1) multi = true;
    }
    if (multi) {
        // the doubled edge on two vertices is AffA_1; anything else is NonADE
        if (g.n == 2 && g.edges.size() == 1 && g.edges[0].mult == 2) {
            out.type = {DynkinKind::AffA, 1};
            out.canonical_order = {0, 1};
            out.additive = AdditiveFunction{{1, 1}};
            return out;
        }
        return non_ade();
    }
    if (g.n == 1) {
        out.type = {DynkinKind::A, 1};
        out.canonical_order = {0};
        return out;
    }
    if (edge_total == g.n) {
        // cycle?
        for (int v = 0; v < g.n; ++v)
            if (adj[v].size() != 2) return non_ade();
        out.type = {DynkinKind::AffA, g.n - 1};
        int start = 0;
        int next = std::min(adj[0][0].first, adj[0][1].first);
        out.canonical_order = {start, next};
        while ((int)out.canonical_order.size() < g.n) {
            int cur = out.canonical_order.back();
            int prev = out.canonical_order[out.canonical_order.size() - 2];
            int nxt = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
            out.canonical_order.push_back(nxt);
        }
        out.additive = AdditiveFunction{std::vector<long long>(g.n, 1)};
        return out;
    }
    if (edge_total != g.n - 1) return non_ade();

    // tree
    std::vector<int> branch;
    for (int v = 0; v < g.n; ++v) {
        if (adj[v].size() > 4) return non_ade();
        if (adj[v].size() >= 3) branch.push_back(v);
    }
    if (branch.empty()) {
        // path: A_n
        out.type = {DynkinKind::A, g.n};
        int e0 = -1, e1 = -1;
        for (int v = 0; v < g.n; ++v)
            if (adj[v].size() <= 1) (e0 < 0 ? e0 : e1) = v;
        int start = std::min(e0, e1);
        out.canonical_order = {start};
        if (g.n > 1) {
            auto arm = walk_arm(adj, -1, adj[start][0].first);
            out.canonical_order.insert(out.canonical_order.end(), arm.begin(), arm.end());
        }
        return out;
    }
    if (branch.size() == 1) {
        int c = branch[0];
        std::vector<std::vector<int>> arms;
        for (auto [w, m] : adj[c]) arms.push_back(walk_arm(adj, c, w));
        std::sort(arms.begin(), arms.end(), [](auto& x, auto& y) {
            return x.size() != y.size() ? x.size() < y.size() : x[0] < y[0];
        });
        if (adj[c].size() == 4) {
            // AffD_4: four arms of length 1
            if (g.n != 5) return non_ade();
            for (auto& a : arms)
                if (a.size() != 1) return non_ade();
            out.type = {DynkinKind::AffD, 4};
            std::vector<int> leaves = {arms[0][0], arms[1][0], arms[2][0], arms[3][0]};
            std::sort(leaves.begin(), leaves.end());
            out.canonical_order = {leaves[0], leaves[1], c, leaves[2], leaves[3]};
            out.additive = AdditiveFunction{};
            out.additive->values.assign(g.n, 1);
            out.additive->values[c] = 2;
            return out;
        }
        size_t a = arms[0].size(), b = arms[1].size(), d = arms[2].size();
        auto fill_additive = [&]() { out.additive = solve_additive(g); };
        if (a == 1 && b == 1) {
            // D_n; arms (1,1,k)
            out.type = {DynkinKind::D, g.n};
            std::vector<int> leaves = {arms[0][0], arms[1][0]};
            std::sort(leaves.begin(), leaves.end());
            out.canonical_order = {leaves[0], leaves[1], c};
            out.canonical_order.insert(out.canonical_order.end(), arms[2].begin(), arms[2].end());
            return out;
        }
        if (a == 1 && b == 2 && d == 2) {
            out.type = {DynkinKind::E6, 6};
            out.canonical_order = {arms[0][0], arms[1][1], arms[1][0], c, arms[2][0], arms[2][1]};
            return out;
        }
        if (a == 1 && b == 2 && d == 3) {
            out.type = {DynkinKind::E7, 7};
            out.canonical_order = {arms[0][0], arms[1][1], arms[1][0], c,
                                   arms[2][0], arms[2][1], arms[2][2]};
            return out;
        }
        if (a == 1 && b == 2 && d == 4) {
            out.type = {DynkinKind::E8, 8};
            out.canonical_order = {arms[0][0], arms[1][1], arms[1][0], c,
                                   arms[2][0], arms[2][1], arms[2][2], arms[2][3]};
            return out;
        }
        if (a == 2 && b == 2 && d == 2) {
            out.type = {DynkinKind::AffE6, 6};
            out.canonical_order = {c};
            for (auto& arm : arms) {
                out.canonical_order.push_back(arm[0]);
                out.canonical_order.push_back(arm[1]);
            }
            fill_additive();
            return out;
        }
        if (a == 1 && b == 3 && d == 3) {
            out.type = {DynkinKind::AffE7, 7};
            // chain x1..x7 with branch on x4; direction by smaller leaf id
            std::vector<int> left = arms[1], right = arms[2];
            if (left.back() > right.back()) std::swap(left, right);
            out.canonical_order = {arms[0][0], left[2], left[1], left[0], c,
                                   right[0], right[1], right[2]};
            fill_additive();
            return out;
        }
        if (a == 1 && b == 2 && d == 5) {
            out.type = {DynkinKind::AffE8, 8};
            out.canonical_order = {arms[0][0], arms[1][1], arms[1][0], c};
            out.canonical_order.insert(out.canonical_order.end(), arms[2].begin(), arms[2].end());
            fill_additive();
            return out;
        }
        return non_ade();
    }
    if (branch.size() == 2) {
        // AffD_l, l >= 5: two branch vertices, two pendant leaves each, joined by a path
        int b1 = branch[0], b2 = branch[1];
        if (adj[b1].size() != 3 || adj[b2].size() != 3) return non_ade();
        auto leaves_of = [&](int b) {
            std::vector<int> ls;
            for (auto [w, m] : adj[b])
                if (adj[w].size() == 1) ls.push_back(w);
            std::sort(ls.begin(), ls.end());
            return ls;
        };
        std::vector<int> l1 = leaves_of(b1), l2 = leaves_of(b2);
        if (l1.size() != 2 || l2.size() != 2) return non_ade();
        if (*std::min_element(l2.begin(), l2.end()) < *std::min_element(l1.begin(), l1.end())) {
            std::swap(b1, b2);
            std::swap(l1, l2);
        }
        // spine from b1 to b2
        std::vector<int> spine = {b1};
        for (auto [w, m] : adj[b1]) {
            if (adj[w].size() == 1) continue;
            auto arm = walk_arm(adj, b1, w);
            spine.insert(spine.end(), arm.begin(), arm.end());
            break;
        }
        if (spine.back() != b2) return non_ade();
        if ((int)(spine.size() + 4) != g.n) return non_ade();
        out.type = {DynkinKind::AffD, g.n - 1};
        out.canonical_order = {l1[0], l1[1]};
        out.canonical_order.insert(out.canonical_order.end(), spine.begin(), spine.end());
        out.canonical_order.push_back(l2[0]);
        out.canonical_order.push_back(l2[1]);
        out.additive = AdditiveFunction{};
        out.additive->values.assign(g.n, 1);
        for (int v : spine) out.additive->values[v] = 2;
        return out;
    }
    return non_ade();
}

CanonicalDiagram canonical_graph(const DynkinType& t) {
    CanonicalDiagram d;
    std::vector<Edge> es;
    auto path = [&](std::vector<int> verts) {
        for (size_t i = 0; i + 1 < verts.size(); ++i) es.push_back({verts[i], verts[i + 1], 1});
    };
    int n = t.vertex_count();
    switch (t.kind) {
        case DynkinKind::A: {
            std::vector<int> p(n);
            std::iota(p.begin(), p.end(), 0);
            path(p);
            for (int i = 0; i < n; ++i) d.color.push_back(i % 2);
            break;
        }
        case DynkinKind::AffA: {
            if (t.index == 1) {
                es.push_back({0, 1, 2});
            } else {
                std::vector<int> p(n);
                std::iota(p.begin(), p.end(), 0);
                path(p);
                es.push_back({0, n - 1, 1});
            }
            for (int i = 0; i < n; ++i) d.color.push_back(i % 2);
            d.additive.assign(n, 1);
            break;
        }
        case DynkinKind::D: {
            es.push_back({0, 2, 1});
            es.push_back({1, 2, 1});
            std::vector<int> p;
            for (int i = 2; i < n; ++i) p.push_back(i);
            path(p);
            d.color = {0, 0};
            for (int i = 2; i < n; ++i) d.color.push_back((i - 1) % 2);
            break;
        }
        case DynkinKind::AffD: {
            int m = t.index - 2;  // spine has m-1 vertices at positions 2..m
            es.push_back({0, 2, 1});
            es.push_back({1, 2, 1});
            std::vector<int> p;
            for (int i = 2; i <= m; ++i) p.push_back(i);
            path(p);
            es.push_back({m, m + 1, 1});
            es.push_back({m, m + 2, 1});
            d.color.assign(n, 0);
            for (int i = 1; i <= m - 1; ++i) d.color[1 + i] = i % 2;
            d.color[0] = d.color[1] = 0;
            d.color[m + 1] = d.color[m + 2] = m % 2;
            d.additive.assign(n, 1);
            for (int i = 2; i <= m; ++i) d.additive[i] = 2;
            break;
        }
        case DynkinKind::E6: {
            path({1, 2, 3});
            path({3, 4, 5});
            es.push_back({0, 3, 1});
            d.color = {1, 0, 1, 0, 1, 0};
            break;
        }
        case DynkinKind::E7: {
            path({1, 2, 3, 4, 5, 6});
            es.push_back({0, 3, 1});
            d.color = {1, 0, 1, 0, 1, 0, 1};
            break;
        }
        case DynkinKind::E8: {
            path({1, 2, 3, 4, 5, 6, 7});
            es.push_back({0, 3, 1});
            d.color = {1, 0, 1, 0, 1, 0, 1, 0};
            break;
        }
        case DynkinKind::AffE6: {
            path({2, 1, 0});
            path({4, 3, 0});
            path({6, 5, 0});
            d.color = {0, 1, 0, 1, 0, 1, 0};
            d.additive = {3, 2, 1, 2, 1, 2, 1};
            break;
        }
        case DynkinKind::AffE7: {
            path({1, 2, 3, 4, 5, 6, 7});
            es.push_back({0, 4, 1});
            d.color = {1, 1, 0, 1, 0, 1, 0, 1};
            d.additive = {2, 1, 2, 3, 4, 3, 2, 1};
            break;
        }
        case DynkinKind::AffE8: {
            path({1, 2, 3, 4, 5, 6, 7, 8});
            es.push_back({0, 3, 1});
            d.color = {1, 0, 1, 0, 1, 0, 1, 0, 1};
            d.additive = {3, 2, 4, 6, 5, 4, 3, 2, 1};
            break;
        }
        default: throw std::invalid_argument("canonical_graph: not an ADE type");
    }
    d.graph = Graph::make(n, std::move(es));
    return d;
}

std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& f) {
    std::vector<int> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
    return r;
}

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_graph_automorphism(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> mapped;
    for (const Edge& e : g.edges) mapped.push_back({perm[e.u], perm[e.v], e.mult});
    return normalize_edges(mapped) == g.edges;
}

namespace {

bool perm_color_preserving(const std::vector<int>& perm, const std::vector<int>& color) {
    for (size_t i = 0; i < perm.size(); ++i)
        if (color[perm[i]] != color[i]) return false;
    return true;
}

NamedAutomorphism named(const DynkinType& t, std::string name, std::vector<int> perm) {
    CanonicalDiagram d = canonical_graph(t);
    if (!is_graph_automorphism(d.graph, perm))
        throw std::logic_error("automorphism table broken for " + t.name() + " " + name);
    bool cp = perm_color_preserving(perm, d.color);
    return {std::move(name), std::move(perm), cp};
}

std::vector<int> transposition(int n, int a, int b) {
    auto p = identity_perm(n);
    std::swap(p[a], p[b]);
    return p;
}

}  // namespace

NamedAutomorphism automorphism(const DynkinType& t, const std::string& name) {
    int n = t.vertex_count();
    if (name == "id") return named(t, "id", identity_perm(n));
    if (t.kind == DynkinKind::AffA) {
        int len = n;  // cycle length
        if (name.rfind("rot:", 0) == 0) {
            int k = std::stoi(name.substr(4));
            std::vector<int> p(len);
            for (int i = 0; i < len; ++i) p[i] = (i + k) % len;
            return named(t, name, p);
        }
        if (name.rfind("refl:", 0) == 0) {
            // eta_p: reflection fixing vertices p and p + len/2
            int p0 = std::stoi(name.substr(5));
            std::vector<int> p(len);
            for (int i = 0; i < len; ++i) p[i] = ((2 * p0 - i) % len + len) % len;
            return named(t, name, p);
        }
        if (name == "eta1") return automorphism(t, "refl:0");
        if (name == "eta2") {
            std::vector<int> p(len);
            for (int i = 0; i < len; ++i) p[i] = ((-1 - i) % len + len) % len;
            return named(t, name, p);
        }
    }
    if (t.kind == DynkinKind::AffD) {
        int m = t.index - 2;
        int vp = m + 1, vm = m + 2;  // canonical positions of v+, v-
        if (name == "sigma") return named(t, name, transposition(n, 0, 1));
        if (name == "sigma_perp") return named(t, name, transposition(n, vp, vm));
        if (name == "tau") {
            auto p = identity_perm(n);
            p[0] = vp; p[vp] = 0;
            p[1] = vm; p[vm] = 1;
            for (int i = 1; i <= m - 1; ++i) p[1 + i] = 1 + (m - i);
            return named(t, name, p);
        }
        if (name == "tau_perp") {  // sigma tau sigma
            auto tau = automorphism(t, "tau").perm;
            auto s = transposition(n, 0, 1);
            return named(t, name, compose(s, compose(tau, s)));
        }
        if (name == "stst") {
            auto p = identity_perm(n);
            std::swap(p[0], p[1]);
            std::swap(p[vp], p[vm]);
            return named(t, name, p);
        }
        if (name == "sigma_tau") {
            auto s = transposition(n, 0, 1);
            auto tau = automorphism(t, "tau").perm;
            return named(t, name, compose(s, tau));
        }
        if (t.index == 4) {
            // leaf numbering 1,2,3,4 = canonical positions 0,1,3,4
            int L[4] = {0, 1, 3, 4};
            if (name == "swap13") return named(t, name, transposition(n, L[0], L[2]));
            if (name == "cycle3") {
                auto p = identity_perm(n);
                p[L[0]] = L[1]; p[L[1]] = L[2]; p[L[2]] = L[0];
                return named(t, name, p);
            }
            if (name == "cycle4") {
                auto p = identity_perm(n);
                p[L[0]] = L[1]; p[L[1]] = L[2]; p[L[2]] = L[3]; p[L[3]] = L[0];
                return named(t, name, p);
            }
        }
    }
    if (t.kind == DynkinKind::AffE6) {
        // arms at positions (1,2), (3,4), (5,6)
        if (name == "swap12") {
            auto p = identity_perm(n);
            std::swap(p[1], p[3]);
            std::swap(p[2], p[4]);
            return named(t, name, p);
        }
        if (name == "swap13") {
            auto p = identity_perm(n);
            std::swap(p[1], p[5]);
            std::swap(p[2], p[6]);
            return named(t, name, p);
        }
        if (name == "rot3") {
            auto p = identity_perm(n);
            p[1] = 3; p[2] = 4; p[3] = 5; p[4] = 6; p[5] = 1; p[6] = 2;
            return named(t, name, p);
        }
    }
    if (t.kind == DynkinKind::AffE7 && name == "theta") {
        auto p = identity_perm(n);
        for (int i = 1; i <= 7; ++i) p[i] = 8 - i;
        return named(t, name, p);
    }
    throw std::invalid_argument("automorphism: unknown name " + name + " for " + t.name());
}

std::vector<NamedAutomorphism> standard_automorphisms(const DynkinType& t) {
    if (!t.is_affine()) throw std::invalid_argument("standard_automorphisms: affine types only");
    std::vector<NamedAutomorphism> out;
    switch (t.kind) {
        case DynkinKind::AffA: {
            int m = (t.index + 1) / 2;
            if (t.index % 2 == 0) return out;  // non-bipartite cycles carry no catalog role
            for (int k = 1; k <= m; ++k) out.push_back(automorphism(t, "rot:" + std::to_string(k)));
            out.push_back(automorphism(t, "eta1"));
            out.push_back(automorphism(t, "eta2"));
            for (int p = 1; p < m; ++p) out.push_back(automorphism(t, "refl:" + std::to_string(p)));
            return out;
        }
        case DynkinKind::AffD: {
            for (const char* nm : {"sigma", "stst", "tau", "sigma_tau", "sigma_perp", "tau_perp"})
                out.push_back(automorphism(t, nm));
            if (t.index == 4) {
                out.push_back(automorphism(t, "cycle4"));
                out.push_back(automorphism(t, "cycle3"));
                out.push_back(automorphism(t, "swap13"));
            }
            return out;
        }
        case DynkinKind::AffE6:
            out.push_back(automorphism(t, "swap12"));
            out.push_back(automorphism(t, "swap13"));
            out.push_back(automorphism(t, "rot3"));
            return out;
        case DynkinKind::AffE7:
            out.push_back(automorphism(t, "theta"));
            return out;
        case DynkinKind::AffE8:
            out.push_back(automorphism(t, "id"));
            return out;
        default: return out;
    }
}

}  // namespace zlab
