#include "zlab/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace zlab {

std::vector<Edge> normalize_edges(std::vector<Edge> edges) {
    std::map<std::pair<int, int>, long long> acc;
    for (const Edge& e : edges) {
        int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
        acc[{u, v}] += e.mult;
    }
    std::vector<Edge> out;
    for (auto& [k, m] : acc) {
        if (m == 0) continue;
        if (m < 0) throw std::invalid_argument("edge with negative multiplicity");
        out.push_back({k.first, k.second, (int)m});
    }
    return out;
}

static std::vector<Arrow> normalize_arrows(std::vector<Arrow> arrows) {
    std::map<std::pair<int, int>, long long> acc;
    for (const Arrow& a : arrows) acc[{a.from, a.to}] += a.mult;
    // cancel 2-cycles
    for (auto& [k, m] : acc) {
        auto rev = acc.find({k.second, k.first});
        if (rev == acc.end() || k.first >= k.second) continue;
        long long c = std::min(m, rev->second);
        m -= c;
        rev->second -= c;
    }
    std::vector<Arrow> out;
    for (auto& [k, m] : acc) {
        if (m == 0) continue;
        if (m < 0) throw std::invalid_argument("arrow with negative multiplicity");
        out.push_back({k.first, k.second, (int)m});
    }
    return out;
}

Quiver Quiver::make(int n, std::vector<Arrow> arrows, std::optional<std::vector<int>> bipartition) {
    Quiver q;
    q.n = n;
    for (const Arrow& a : arrows) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw std::invalid_argument("arrow endpoint out of range");
        if (a.from == a.to) throw std::invalid_argument("quiver has a loop");
    }
    q.arrows = normalize_arrows(std::move(arrows));
    if (bipartition) {
        if ((int)bipartition->size() != n) throw std::invalid_argument("bipartition size mismatch");
        for (const Arrow& a : q.arrows)
            if ((*bipartition)[a.from] == (*bipartition)[a.to])
                throw std::invalid_argument("arrow joins vertices of the same color");
        q.bipartition = std::move(bipartition);
    }
    return q;
}

Bigraph Bigraph::make(int n, std::vector<int> color, std::vector<Edge> red, std::vector<Edge> blue) {
    Bigraph g;
    g.n = n;
    if ((int)color.size() != n) throw std::invalid_argument("color size mismatch");
    g.color = std::move(color);
    auto check = [&](const std::vector<Edge>& es) {
        for (const Edge& e : es) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("bigraph has a loop");
            if (g.color[e.u] == g.color[e.v])
                throw std::invalid_argument("edge joins vertices of the same color");
        }
    };
    g.red = normalize_edges(std::move(red));
    g.blue = normalize_edges(std::move(blue));
    check(g.red);
    check(g.blue);
    for (size_t i = 0, j = 0; i < g.red.size() && j < g.blue.size();) {
        if (g.red[i].u == g.blue[j].u && g.red[i].v == g.blue[j].v)
            throw std::invalid_argument("red and blue share an edge");
        if (std::pair(g.red[i].u, g.red[i].v) < std::pair(g.blue[j].u, g.blue[j].v)) ++i; else ++j;
    }
    return g;
}

Quiver mutate(const Quiver& q, int v) {
    if (v < 0 || v >= q.n) throw std::invalid_argument("mutate: unknown vertex");
    std::vector<Arrow> next;
    // step 1: for arrows u->v->w add u->w (with product multiplicity)
    for (const Arrow& in : q.arrows) {
        if (in.to != v) continue;
        for (const Arrow& out : q.arrows) {
            if (out.from != v) continue;
            next.push_back({in.from, out.to, in.mult * out.mult});
        }
    }
    // step 2: reverse arrows incident to v
    for (const Arrow& a : q.arrows) {
        if (a.from == v || a.to == v) next.push_back({a.to, a.from, a.mult});
        else next.push_back(a);
    }
    // step 3 (2-cycle cancellation) happens in normalization; the bipartition
    // is kept only when the mutated quiver still respects it (a single
    // mutation of a non-recurrent quiver may create same-color arrows)
    try {
        return Quiver::make(q.n, next, q.bipartition);
    } catch (const std::invalid_argument&) {
        return Quiver::make(q.n, std::move(next), std::nullopt);
    }
}

Quiver mutate_color(const Quiver& q, int c) {
    if (!q.bipartition) throw std::invalid_argument("mutate_color: quiver is not bipartite");
    Quiver cur = q;
    for (int v = 0; v < q.n; ++v)
        if ((*q.bipartition)[v] == c) cur = mutate(cur, v);
    // reattach the coloring when the result is bipartite again
    try {
        return Quiver::make(cur.n, cur.arrows, q.bipartition);
    } catch (const std::invalid_argument&) {
        return cur;
    }
}

Quiver opposite(const Quiver& q) {
    std::vector<Arrow> rev;
    rev.reserve(q.arrows.size());
    for (const Arrow& a : q.arrows) rev.push_back({a.to, a.from, a.mult});
    return Quiver::make(q.n, std::move(rev), q.bipartition);
}

Bigraph bigraph_of(const Quiver& q) {
    if (!q.bipartition) throw std::invalid_argument("bigraph_of: quiver is not bipartite");
    const auto& eps = *q.bipartition;
    std::vector<Edge> red, blue;
    for (const Arrow& a : q.arrows) {
        if (eps[a.from] == 0) red.push_back({a.from, a.to, a.mult});
        else blue.push_back({a.from, a.to, a.mult});
    }
    return Bigraph::make(q.n, eps, std::move(red), std::move(blue));
}

Quiver quiver_of(const Bigraph& g) {
    std::vector<Arrow> arrows;
    for (const Edge& e : g.red) {
        int w = g.color[e.u] == 0 ? e.u : e.v;  // white -> black
        int b = e.u ^ e.v ^ w;
        arrows.push_back({w, b, e.mult});
    }
    for (const Edge& e : g.blue) {
        int b = g.color[e.u] == 1 ? e.u : e.v;  // black -> white
        int w = e.u ^ e.v ^ b;
        arrows.push_back({b, w, e.mult});
    }
    return Quiver::make(g.n, std::move(arrows), g.color);
}

std::vector<long long> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<long long> a((size_t)n * n, 0);
    for (const Edge& e : edges) {
        a[(size_t)e.u * n + e.v] += e.mult;
        a[(size_t)e.v * n + e.u] += e.mult;
    }
    return a;
}

bool is_recurrent(const Bigraph& g) {
    int n = g.n;
    auto ar = adjacency(n, g.red), ab = adjacency(n, g.blue);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long rb = 0, br = 0;
            for (int k = 0; k < n; ++k) {
                rb += ar[(size_t)i * n + k] * ab[(size_t)k * n + j];
                br += ab[(size_t)i * n + k] * ar[(size_t)k * n + j];
            }
            if (rb != br) return false;
        }
    return true;
}

Bigraph dual(const Bigraph& g) { return Bigraph::make(g.n, g.color, g.blue, g.red); }

std::vector<std::vector<int>> components(int n, const std::vector<Edge>& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
    for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
    std::map<int, std::vector<int>> comp;
    for (int v = 0; v < n; ++v) comp[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, verts] : comp) out.push_back(std::move(verts));
    return out;
}

Bigraph induced(const Bigraph& g, const std::vector<int>& verts) {
    std::vector<int> idx(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = (int)i;
    std::vector<int> color;
    for (int v : verts) color.push_back(g.color[v]);
    auto pick = [&](const std::vector<Edge>& es) {
        std::vector<Edge> out;
        for (const Edge& e : es)
            if (idx[e.u] >= 0 && idx[e.v] >= 0) out.push_back({idx[e.u], idx[e.v], e.mult});
        return out;
    };
    return Bigraph::make((int)verts.size(), std::move(color), pick(g.red), pick(g.blue));
}

bool is_connected(const Bigraph& g) {
    std::vector<Edge> all = g.red;
    all.insert(all.end(), g.blue.begin(), g.blue.end());
    return components(g.n, normalize_edges(all)).size() <= 1;
}

// ---- isomorphism ----------------------------------------------------------
//
// Definition 2.2 style: a bijection preserving red edges (with multiplicity)
// and blue edges (with multiplicity).  Colors are not compared; a valid
// bipartition transports along any such bijection up to per-component swap.

namespace {

struct AdjView {
    int n;
    std::vector<std::vector<std::pair<int, int>>> red, blue;  // vertex -> (nbr, mult)
    explicit AdjView(const Bigraph& g) : n(g.n), red(g.n), blue(g.n) {
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

// Iterative refinement: classes keyed by multiset of (edge color, mult, neighbor class).
std::vector<int> refine(const AdjView& a, std::vector<int> cls) {
    for (;;) {
        std::map<std::vector<long long>, int> sig_to_class;
        std::vector<int> next(a.n);
        for (int v = 0; v < a.n; ++v) {
            std::vector<long long> sig;
            sig.push_back(cls[v]);
            std::vector<long long> items;
            for (auto [w, m] : a.red[v]) items.push_back(((long long)cls[w] * 1000 + m) * 2);
            for (auto [w, m] : a.blue[v]) items.push_back(((long long)cls[w] * 1000 + m) * 2 + 1);
            std::sort(items.begin(), items.end());
            sig.insert(sig.end(), items.begin(), items.end());
            auto [it, inserted] = sig_to_class.insert({sig, (int)sig_to_class.size()});
            next[v] = it->second;
        }
        if (next == cls) return cls;
        cls = std::move(next);
    }
}

std::vector<long long> class_histogram(const std::vector<int>& cls) {
    std::map<int, long long> h;
    for (int c : cls) h[c]++;
    std::vector<long long> out;
    for (auto& [c, k] : h) { out.push_back(c); out.push_back(k); }
    return out;
}

bool extend(const AdjView& a, const AdjView& b, std::vector<int>& map_ab,
            std::vector<int>& map_ba, const std::vector<int>& cls_a,
            const std::vector<int>& cls_b) {
    // pick an unmapped vertex adjacent to the mapped region when possible;
    // anchoring to mapped neighbors keeps the branching factor small
    int best = -1;
    bool best_anchored = false;
    for (int v = 0; v < a.n; ++v) {
        if (map_ab[v] >= 0) continue;
        bool anchored = false;
        for (auto [u, m] : a.red[v]) anchored |= map_ab[u] >= 0;
        for (auto [u, m] : a.blue[v]) anchored |= map_ab[u] >= 0;
        if (best < 0 || (anchored && !best_anchored) ||
            (anchored == best_anchored && cls_a[v] < cls_a[best])) {
            best = v;
            best_anchored = anchored;
        }
    }
    if (best < 0) return true;
    int v = best;
    for (int w = 0; w < b.n; ++w) {
        if (map_ba[w] >= 0 || cls_b[w] != cls_a[v]) continue;
        // check consistency against already-mapped vertices
        bool ok = true;
        auto check_side = [&](const std::vector<std::pair<int, int>>& va,
                              const std::vector<std::pair<int, int>>& wb) {
            std::map<int, int> need;
            for (auto [u, m] : va)
                if (map_ab[u] >= 0) need[map_ab[u]] = m;
            std::map<int, int> have;
            for (auto [u, m] : wb)
                if (map_ba[u] >= 0) have[u] = m;
            return need == have;
        };
        ok = check_side(a.red[v], b.red[w]) && check_side(a.blue[v], b.blue[w]);
        if (!ok) continue;
        map_ab[v] = w;
        map_ba[w] = v;
        if (extend(a, b, map_ab, map_ba, cls_a, cls_b)) return true;
        map_ab[v] = -1;
        map_ba[w] = -1;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Bigraph& g, const Bigraph& h) {
    if (g.n != h.n || g.red.size() != h.red.size() || g.blue.size() != h.blue.size()) return false;
    AdjView a(g), b(h);
    std::vector<int> cls_a = refine(a, std::vector<int>(g.n, 0));
    std::vector<int> cls_b = refine(b, std::vector<int>(h.n, 0));
    // refinement classes must agree as histograms, after renaming by signature;
    // refine() numbers classes by sorted signature insertion order per graph, so
    // run a joint refinement to align class ids
    {
        // joint: refine the disjoint union starting from one class
        AdjView u(g);
        u.n = g.n + h.n;
        u.red.resize(u.n);
        u.blue.resize(u.n);
        for (int v = 0; v < h.n; ++v) {
            for (auto [w, m] : b.red[v]) u.red[g.n + v].push_back({g.n + w, m});
            for (auto [w, m] : b.blue[v]) u.blue[g.n + v].push_back({g.n + w, m});
        }
        std::vector<int> cls = refine(u, std::vector<int>(u.n, 0));
        cls_a.assign(cls.begin(), cls.begin() + g.n);
        cls_b.assign(cls.begin() + g.n, cls.end());
    }
    if (class_histogram(cls_a) != class_histogram(cls_b)) return false;
    std::vector<int> map_ab(g.n, -1), map_ba(h.n, -1);
    return extend(a, b, map_ab, map_ba, cls_a, cls_b);
}

// ---- JSON ------------------------------------------------------------------

std::string to_json(const Bigraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["color"] = g.color;
    auto edges = [](const std::vector<Edge>& es) {
        nlohmann::json a = nlohmann::json::array();
        for (const Edge& e : es) a.push_back({e.u, e.v, e.mult});
        return a;
    };
    j["red"] = edges(g.red);
    j["blue"] = edges(g.blue);
    return j.dump();
}

std::string to_json(const Quiver& q) {
    nlohmann::json j;
    j["n"] = q.n;
    nlohmann::json a = nlohmann::json::array();
    for (const Arrow& x : q.arrows) a.push_back({x.from, x.to, x.mult});
    j["arrows"] = a;
    if (q.bipartition) j["color"] = *q.bipartition;
    return j.dump();
}

Quiver quiver_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>()});
    std::optional<std::vector<int>> color;
    if (j.contains("color")) color = j["color"].get<std::vector<int>>();
    return Quiver::make(n, std::move(arrows), std::move(color));
}

Bigraph bigraph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<int> color = j.at("color").get<std::vector<int>>();
    auto edges = [](const nlohmann::json& a) {
        std::vector<Edge> es;
        for (const auto& e : a) es.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
        return es;
    };
    return Bigraph::make(n, std::move(color), edges(j.at("red")), edges(j.at("blue")));
}

}  // namespace zlab
