#include "zlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "zlab/linalg.hpp"

namespace zlab {

WeakGCM WeakGCM::make(int n, std::vector<long long> entries) {
    if ((int)entries.size() != n * n) throw std::invalid_argument("WeakGCM: size mismatch");
    WeakGCM m;
    m.n = n;
    m.a = std::move(entries);
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) > 2) throw std::invalid_argument("WeakGCM: a_ii > 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m.at(i, j) > 0) throw std::invalid_argument("WeakGCM: positive off-diagonal");
            if ((m.at(i, j) == 0) != (m.at(j, i) == 0))
                throw std::invalid_argument("WeakGCM: zero pattern not symmetric");
        }
    }
    return m;
}

bool WeakGCM::indecomposable() const {
    if (n == 0) return false;
    std::vector<int> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (w != v && at(v, w) != 0 && !seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    return std::count(seen.begin(), seen.end(), 1) == n;
}

PerronData perron(const Bigraph& g, double tol, int max_iter) {
    if (!is_connected(g)) throw std::invalid_argument("perron: bigraph must be connected");
    if (!is_recurrent(g)) throw std::invalid_argument("perron: bigraph must be recurrent");
    int n = g.n;
    auto ar = adjacency(n, g.red), ab = adjacency(n, g.blue);
    std::vector<double> v(n, 1.0), nv(n);
    double mu_r = 0, mu_b = 0;
    for (int it = 0; it < max_iter; ++it) {
        // iterate with A_red + A_blue + I: primitive, shares the eigenvector
        for (int i = 0; i < n; ++i) {
            double s = v[i];
            for (int j = 0; j < n; ++j)
                s += (double)(ar[(size_t)i * n + j] + ab[(size_t)i * n + j]) * v[j];
            nv[i] = s;
        }
        double norm = 0;
        for (double x : nv) norm = std::max(norm, x);
        for (double& x : nv) x /= norm;
        double delta = 0;
        for (int i = 0; i < n; ++i) delta = std::max(delta, std::fabs(nv[i] - v[i]));
        v = nv;
        if (delta < tol && it > 4) break;
    }
    auto rayleigh = [&](const std::vector<long long>& m) {
        double num = 0, den = 0;
        for (int i = 0; i < n; ++i) {
            double s = 0;
            for (int j = 0; j < n; ++j) s += (double)m[(size_t)i * n + j] * v[j];
            num += s * v[i];
            den += v[i] * v[i];
        }
        return num / den;
    };
    mu_r = rayleigh(ar);
    mu_b = rayleigh(ab);
    double mn = *std::min_element(v.begin(), v.end());
    for (double& x : v) x /= mn;
    return {mu_r, mu_b, v};
}

namespace {

Graph color_class_graph(const Bigraph& g, const std::vector<int>& verts, bool red) {
    std::vector<int> idx(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = (int)i;
    std::vector<Edge> es;
    for (const Edge& e : red ? g.red : g.blue)
        if (idx[e.u] >= 0 && idx[e.v] >= 0) es.push_back({idx[e.u], idx[e.v], e.mult});
    return Graph::make((int)verts.size(), std::move(es));
}

enum class CompClass { Finite, Affine, Neither };

CompClass classify_components(const Bigraph& g, bool red, std::vector<Recognition>* recs = nullptr,
                              std::vector<std::vector<int>>* comps_out = nullptr) {
    auto comps = components(g.n, red ? g.red : g.blue);
    bool all_fin = true, all_aff = true;
    for (auto& comp : comps) {
        Recognition r = recognize(color_class_graph(g, comp, red));
        all_fin &= r.type.is_finite_ade();
        all_aff &= r.type.is_affine();
        if (recs) recs->push_back(std::move(r));
        if (comps_out) comps_out->push_back(comp);
    }
    if (all_fin) return CompClass::Finite;
    if (all_aff) return CompClass::Affine;
    return CompClass::Neither;
}

// Exact common additive labeling: positive kernel of both 2I - A_red and 2I - A_blue.
std::optional<std::vector<Rational>> exact_additive(const Bigraph& g) {
    int n = g.n;
    QMatrix m(2 * n, n);
    auto ar = adjacency(n, g.red), ab = adjacency(n, g.blue);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = Rational((i == j ? 2 : 0) - ar[(size_t)i * n + j]);
            m.at(n + i, j) = Rational((i == j ? 2 : 0) - ab[(size_t)i * n + j]);
        }
    auto basis = nullspace(std::move(m));
    if (basis.size() != 1) return std::nullopt;
    auto v = basis[0];
    int sign = 0;
    for (auto& x : v) {
        if (x.is_zero()) return std::nullopt;
        if (sign == 0) sign = x.sign();
        if (x.sign() != sign) return std::nullopt;
    }
    if (sign < 0)
        for (auto& x : v) x = -x;
    return v;
}

}  // namespace

Regime labeling_regime(const Bigraph& g) {
    if (!is_recurrent(g)) throw std::invalid_argument("labeling_regime: bigraph must be recurrent");
    CompClass r = classify_components(g, true);
    CompClass b = classify_components(g, false);
    Regime out;
    if (r == CompClass::Finite && b == CompClass::Finite) out.tag = RegimeTag::FiniteFinite;
    else if ((r == CompClass::Affine && b == CompClass::Finite) ||
             (r == CompClass::Finite && b == CompClass::Affine))
        out.tag = RegimeTag::AffineFinite;
    else if (r == CompClass::Affine && b == CompClass::Affine) {
        out.tag = RegimeTag::AffineAffine;
        out.additive = exact_additive(g);
    } else out.tag = RegimeTag::None;
    return out;
}

WeakGCM cartan_of(const Bigraph& g) {
    std::vector<std::vector<int>> comps;
    return cartan_of(g, comps);
}

WeakGCM cartan_of(const Bigraph& g, std::vector<std::vector<int>>& red_comps) {
    red_comps.clear();
    auto comps = components(g.n, g.red);
    int k = (int)comps.size();
    std::vector<std::vector<long long>> lam(k);  // additive function per red component
    std::vector<int> comp_of(g.n, -1);
    std::vector<std::vector<int>> pos_in(k);
    for (int i = 0; i < k; ++i) {
        Recognition r = recognize(color_class_graph(g, comps[i], true));
        if (!r.type.is_affine())
            throw std::invalid_argument("cartan_of: red component is not affine ADE");
        lam[i] = r.additive->values;
        for (size_t p = 0; p < comps[i].size(); ++p) comp_of[comps[i][p]] = i;
        red_comps.push_back(comps[i]);
    }
    auto label_of = [&](int v) {
        int c = comp_of[v];
        size_t p = std::lower_bound(red_comps[c].begin(), red_comps[c].end(), v) - red_comps[c].begin();
        return lam[c][p];
    };
    // blue label sums between component pairs, per vertex
    std::vector<std::vector<long long>> sum_to(g.n, std::vector<long long>(k, 0));
    for (const Edge& e : g.blue) {
        sum_to[e.u][comp_of[e.v]] += (long long)e.mult * label_of(e.v);
        sum_to[e.v][comp_of[e.u]] += (long long)e.mult * label_of(e.u);
    }
    std::vector<long long> entries((size_t)k * k, 0);
    for (int i = 0; i < k; ++i) {
        // diagonal: self-binding multiplicity
        long long mult = -1;
        for (int v : red_comps[i]) {
            long long s = sum_to[v][i];
            if (s % label_of(v) != 0) throw std::invalid_argument("cartan_of: inconsistent self binding");
            long long q = s / label_of(v);
            if (mult < 0) mult = q;
            else if (mult != q) throw std::invalid_argument("cartan_of: inconsistent self binding");
        }
        entries[(size_t)i * k + i] = 2 - mult;
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            long long p = -1;
            bool any = false;
            for (int v : red_comps[i]) {
                long long s = sum_to[v][j];
                if (s) any = true;
            }
            if (!any) continue;
            for (int v : red_comps[i]) {
                long long s = sum_to[v][j];
                if (s % label_of(v) != 0) throw std::invalid_argument("cartan_of: inconsistent scaling factor");
                long long q = s / label_of(v);
                if (p < 0) p = q;
                else if (p != q) throw std::invalid_argument("cartan_of: inconsistent scaling factor");
            }
            entries[(size_t)i * k + j] = -p;
        }
    }
    return WeakGCM::make(k, std::move(entries));
}

std::pair<int, int> scaling_factor(const Bigraph& g) {
    auto comps = components(g.n, g.red);
    if (comps.size() != 2) throw std::invalid_argument("scaling_factor: need exactly two red components");
    // strip internal blue edges (self bindings)
    std::vector<int> comp_of(g.n);
    for (int i = 0; i < 2; ++i)
        for (int v : comps[i]) comp_of[v] = i;
    std::vector<Edge> cross;
    for (const Edge& e : g.blue)
        if (comp_of[e.u] != comp_of[e.v]) cross.push_back(e);
    Bigraph core = Bigraph::make(g.n, g.color, g.red, cross);
    std::vector<std::vector<int>> rc;
    WeakGCM a = cartan_of(core, rc);
    long long p = -a.at(0, 1), q = -a.at(1, 0);
    static const std::set<std::pair<long long, long long>> allowed = {
        {1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {4, 1}, {1, 4}, {2, 2}};
    if (!allowed.count({p, q}))
        throw std::invalid_argument("scaling_factor: pair (" + std::to_string(p) + "," +
                                    std::to_string(q) + ") not admissible");
    return {(int)p, (int)q};
}

DeltaVector delta_vector(const Bigraph& g) {
    std::vector<std::vector<int>> comps;
    WeakGCM a = cartan_of(g, comps);
    int k = a.n;
    std::vector<std::vector<long long>> lam(k);
    for (int i = 0; i < k; ++i)
        lam[i] = recognize(color_class_graph(g, comps[i], true)).additive->values;
    DeltaVector out;
    auto exact = exact_additive(g);
    if (exact) {
        out.exact = true;
        for (int i = 0; i < k; ++i) {
            Rational d = (*exact)[comps[i][0]] / Rational(lam[i][0]);
            for (size_t p = 0; p < comps[i].size(); ++p) {
                Rational d2 = (*exact)[comps[i][p]] / Rational(lam[i][p]);
                if (d2 != d) throw std::invalid_argument("delta_vector: ratio not constant on a component");
            }
            out.rat.push_back(d);
            out.approx.push_back(d.to_double());
        }
        return out;
    }
    PerronData pd = perron(g);
    for (int i = 0; i < k; ++i) {
        double d = 0;
        for (size_t p = 0; p < comps[i].size(); ++p) d += pd.eigenvector[comps[i][p]] / (double)lam[i][p];
        d /= (double)comps[i].size();
        for (size_t p = 0; p < comps[i].size(); ++p) {
            double d2 = pd.eigenvector[comps[i][p]] / (double)lam[i][p];
            if (std::fabs(d2 - d) > 1e-7 * std::max(1.0, std::fabs(d)))
                throw std::invalid_argument("delta_vector: ratio not constant on a component");
        }
        out.approx.push_back(d);
    }
    return out;
}

// ---- diagram naming --------------------------------------------------------

namespace {

struct GCMBuilder {
    int n;
    std::vector<long long> a;
    explicit GCMBuilder(int n_) : n(n_), a((size_t)n_ * n_, 0) {
        for (int i = 0; i < n; ++i) a[(size_t)i * n + i] = 2;
    }
    void edge(int i, int j, long long aij = -1, long long aji = -1) {
        a[(size_t)i * n + j] = aij;
        a[(size_t)j * n + i] = aji;
    }
    void loop(int i, int count = 1) { a[(size_t)i * n + i] = 2 - count; }
    void chain(int from, int to) {
        for (int i = from; i < to; ++i) edge(i, i + 1);
    }
    WeakGCM build() { return WeakGCM::make(n, std::move(a)); }
};

}  // namespace

std::optional<WeakGCM> diagram_matrix(const std::string& name) {
    auto num_after = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        size_t pos = prefix.size();
        size_t end = name.find('^', pos);
        std::string digits = end == std::string::npos ? name.substr(pos) : name.substr(pos, end - pos);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stoi(digits);
    };
    bool aff1 = name.size() > 4 && name.substr(name.size() - 4) == "^(1)";
    bool aff2 = name.size() > 4 && name.substr(name.size() - 4) == "^(2)";
    bool aff3 = name.size() > 4 && name.substr(name.size() - 4) == "^(3)";
    bool half = name.rfind("1/2", 0) == 0;
    std::string base = half ? name.substr(3) : name;

    if (!aff1 && !aff2 && !aff3) {
        // finite types
        if (half) {
            auto l = num_after("1/2A_");
            if (l && *l >= 2 && *l % 2 == 0) {  // 1/2A_{2k}: path of k vertices, loop at one end
                int k = *l / 2;
                GCMBuilder b(k);
                b.chain(0, k - 1);
                b.loop(0);
                return b.build();
            }
            return std::nullopt;
        }
        if (auto l = num_after("A_"); l && *l >= 1) {
            GCMBuilder b(*l);
            b.chain(0, *l - 1);
            return b.build();
        }
        if (auto l = num_after("B_"); l && *l >= 2) {
            GCMBuilder b(*l);
            b.chain(0, *l - 2);
            b.edge(*l - 2, *l - 1, -1, -2);  // arrow toward the last vertex
            return b.build();
        }
        if (auto l = num_after("C_"); l && *l >= 2) {
            GCMBuilder b(*l);
            b.chain(0, *l - 2);
            b.edge(*l - 2, *l - 1, -2, -1);
            return b.build();
        }
        if (auto l = num_after("D_"); l && *l >= 4) {
            GCMBuilder b(*l);
            b.edge(0, 2);
            b.edge(1, 2);
            b.chain(2, *l - 1);
            return b.build();
        }
        if (name == "E_6" || name == "E_7" || name == "E_8") {
            int l = name[2] - '0';
            GCMBuilder b(l);
            b.edge(0, 3);
            b.chain(1, l - 1);
            return b.build();
        }
        if (name == "F_4") {
            GCMBuilder b(4);
            b.edge(0, 1);
            b.edge(1, 2, -2, -1);
            b.edge(2, 3);
            return b.build();
        }
        if (name == "G_2") {
            GCMBuilder b(2);
            b.edge(0, 1, -1, -3);
            return b.build();
        }
        return std::nullopt;
    }

    if (aff1 && !half) {
        if (name == "A_0^(1)") {
            GCMBuilder b(1);
            b.loop(0, 2);
            return b.build();
        }
        if (name == "A_1^(1)") {
            GCMBuilder b(2);
            b.edge(0, 1, -2, -2);
            return b.build();
        }
        if (auto l = num_after("A_"); l && *l >= 2) {
            GCMBuilder b(*l + 1);
            b.chain(0, *l);
            b.edge(0, *l);
            return b.build();
        }
        if (auto l = num_after("B_"); l && *l >= 3) {
            // fork 0,1 on 2; chain to the end; double arrow toward the last
            GCMBuilder b(*l + 1);
            b.edge(0, 2);
            b.edge(1, 2);
            b.chain(2, *l - 1);
            b.edge(*l - 1, *l, -1, -2);
            return b.build();
        }
        if (auto l = num_after("C_"); l && *l >= 2) {
            GCMBuilder b(*l + 1);
            b.edge(0, 1, -1, -2);
            b.chain(1, *l - 1);
            b.edge(*l - 1, *l, -2, -1);
            return b.build();
        }
        if (auto l = num_after("D_"); l && *l >= 4) {
            GCMBuilder b(*l + 1);
            b.edge(0, 2);
            b.edge(1, 2);
            b.chain(2, *l - 2);
            b.edge(*l - 2, *l - 1);
            b.edge(*l - 2, *l);
            return b.build();
        }
        if (name == "E_6^(1)") {
            GCMBuilder b(7);
            // center 0, arms (1,2),(3,4),(5,6) leaf-outward
            b.edge(0, 1); b.edge(1, 2);
            b.edge(0, 3); b.edge(3, 4);
            b.edge(0, 5); b.edge(5, 6);
            return b.build();
        }
        if (name == "E_7^(1)") {
            GCMBuilder b(8);
            b.chain(1, 7);
            b.edge(0, 4);
            return b.build();
        }
        if (name == "E_8^(1)") {
            GCMBuilder b(9);
            b.chain(1, 8);
            b.edge(0, 3);
            return b.build();
        }
        if (name == "F_4^(1)") {
            GCMBuilder b(5);
            b.edge(0, 1); b.edge(1, 2);
            b.edge(2, 3, -1, -2);
            b.edge(3, 4);
            return b.build();
        }
        if (name == "G_2^(1)") {
            GCMBuilder b(3);
            b.edge(0, 1);
            b.edge(1, 2, -1, -3);
            return b.build();
        }
        return std::nullopt;
    }
    if (aff2 && !half) {
        if (name == "A_2^(2)") {
            GCMBuilder b(2);
            b.edge(0, 1, -4, -1);
            return b.build();
        }
        if (auto l = num_after("D_"); l && *l >= 3) {  // D_{l}^(2) here means subscript l = m+1, m >= 2
            int m = *l - 1;
            GCMBuilder b(m + 1);
            b.edge(0, 1, -2, -1);
            b.chain(1, m - 1);
            b.edge(m - 1, m, -1, -2);
            return b.build();
        }
        if (auto l = num_after("A_"); l) {
            if (*l >= 5 && *l % 2 == 1) {  // A_{2k-1}^(2), k >= 3
                int k = (*l + 1) / 2;
                GCMBuilder b(k + 1);
                b.edge(0, 2);
                b.edge(1, 2);
                b.chain(2, k - 1);
                b.edge(k - 1, k, -2, -1);
                return b.build();
            }
            if (*l >= 4 && *l % 2 == 0) {  // A_{2k}^(2), k >= 2
                int k = *l / 2;
                GCMBuilder b(k + 1);
                b.edge(0, 1, -2, -1);
                b.chain(1, k - 1);
                b.edge(k - 1, k, -2, -1);
                return b.build();
            }
        }
        if (name == "E_6^(2)") {
            GCMBuilder b(5);
            b.edge(0, 1); b.edge(1, 2);
            b.edge(2, 3, -2, -1);
            b.edge(3, 4);
            return b.build();
        }
        return std::nullopt;
    }
    if (aff3) {
        if (name == "D_4^(3)") {
            GCMBuilder b(3);
            b.edge(0, 1);
            b.edge(1, 2, -3, -1);
            return b.build();
        }
        return std::nullopt;
    }
    if (half && aff1) {
        if (auto l = num_after("1/2A_"); l && *l >= 1 && *l % 2 == 1) {
            int k = (*l + 1) / 2;  // vertices; path with loops at both ends
            GCMBuilder b(k);
            b.chain(0, k - 1);
            b.loop(0);
            b.loop(k == 1 ? 0 : k - 1, k == 1 ? 2 : 1);
            return b.build();
        }
        if (auto l = num_after("1/2C_"); l && *l >= 3 && *l % 2 == 1) {
            int k = (*l + 1) / 2;  // 1/2C_{2j+1}: j+1 vertices
            GCMBuilder b(k);
            b.edge(0, 1, -1, -2);
            b.chain(1, k - 1);
            b.loop(k - 1);
            return b.build();
        }
        if (auto l = num_after("1/2D_"); l && *l >= 5 && *l % 2 == 1) {
            int k = (*l - 1) / 2;  // 1/2D_{2j+1}^(1): j+1 vertices, fork + chain + loop
            GCMBuilder b(k + 1);
            b.edge(0, 2);
            b.edge(1, 2);
            b.chain(2, k);
            b.loop(k);
            return b.build();
        }
        return std::nullopt;
    }
    if (half && aff2) {
        if (auto l = num_after("1/2D_"); l && *l >= 5 && *l % 2 == 1) {
            int k = (*l + 1) / 2;  // 1/2D_{2j+3}^(2): j+2 vertices
            GCMBuilder b(k);
            b.edge(0, 1, -2, -1);
            b.chain(1, k - 1);
            b.loop(k - 1);
            return b.build();
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> diagram_names(int n, KacTri tri) {
    std::vector<std::string> names;
    auto num = [](long long x) { return std::to_string(x); };
    if (tri == KacTri::Fin) {
        names.push_back("A_" + num(n));
        if (n >= 2) names.push_back("B_" + num(n));
        if (n >= 2) names.push_back("C_" + num(n));
        if (n >= 4) names.push_back("D_" + num(n));
        if (n >= 6 && n <= 8) names.push_back("E_" + num(n));
        if (n == 4) names.push_back("F_4");
        if (n == 2) names.push_back("G_2");
        names.push_back("1/2A_" + num(2 * n));
    } else if (tri == KacTri::Aff) {
        if (n == 1) names.push_back("A_0^(1)");
        if (n == 2) {
            names.push_back("A_1^(1)");
            names.push_back("A_2^(2)");
        }
        if (n >= 3) names.push_back("A_" + num(n - 1) + "^(1)");
        if (n >= 4) names.push_back("B_" + num(n - 1) + "^(1)");
        if (n >= 3) names.push_back("C_" + num(n - 1) + "^(1)");
        if (n >= 5) names.push_back("D_" + num(n - 1) + "^(1)");
        if (n >= 3) names.push_back("D_" + num(n) + "^(2)");
        if (n >= 4) names.push_back("A_" + num(2 * n - 3) + "^(2)");
        if (n >= 3) names.push_back("A_" + num(2 * n - 2) + "^(2)");
        if (n == 7) names.push_back("E_6^(1)");
        if (n == 8) names.push_back("E_7^(1)");
        if (n == 9) names.push_back("E_8^(1)");
        if (n == 5) names.push_back("F_4^(1)");
        if (n == 3) names.push_back("G_2^(1)");
        if (n == 5) names.push_back("E_6^(2)");
        if (n == 3) names.push_back("D_4^(3)");
        names.push_back("1/2A_" + num(2 * n - 1) + "^(1)");
        if (n >= 2) names.push_back("1/2C_" + num(2 * n - 1) + "^(1)");
        if (n >= 3) names.push_back("1/2D_" + num(2 * n - 1) + "^(1)");
        if (n >= 3) names.push_back("1/2D_" + num(2 * n - 1) + "^(2)");
    }
    return names;
}

namespace {

bool gcm_extend(const WeakGCM& a, const WeakGCM& b, std::vector<int>& map_ab,
                std::vector<int>& map_ba, int depth) {
    if (depth == a.n) return true;
    int v = depth;
    for (int w = 0; w < b.n; ++w) {
        if (map_ba[w] >= 0) continue;
        if (a.at(v, v) != b.at(w, w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            int x = map_ab[u];
            ok = a.at(v, u) == b.at(w, x) && a.at(u, v) == b.at(x, w);
        }
        if (!ok) continue;
        map_ab[v] = w;
        map_ba[w] = v;
        if (gcm_extend(a, b, map_ab, map_ba, depth + 1)) return true;
        map_ab[v] = -1;
        map_ba[w] = -1;
    }
    return false;
}

}  // namespace

bool gcm_isomorphic(const WeakGCM& a, const WeakGCM& b, std::vector<int>& map) {
    if (a.n != b.n) return false;
    std::vector<int> map_ab(a.n, -1), map_ba(b.n, -1);
    if (!gcm_extend(a, b, map_ab, map_ba, 0)) return false;
    map = map_ab;
    return true;
}

KacClass kac_type(const WeakGCM& a) {
    if (!a.indecomposable()) throw std::invalid_argument("kac_type: matrix must be indecomposable");
    KacClass out;
    int n = a.n;
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(a.at(i, j));
    auto kern = nullspace(m);
    if (kern.size() == 1) {
        auto& v = kern[0];
        int sign = 0;
        bool positive = true;
        for (auto& x : v) {
            if (x.is_zero()) { positive = false; break; }
            if (sign == 0) sign = x.sign();
            if (x.sign() != sign) { positive = false; break; }
        }
        if (positive) {
            out.trichotomy = KacTri::Aff;
            BigInt l(1);
            for (auto& x : v) l = l * x.den() / BigInt::gcd(l, x.den());
            std::vector<BigInt> ints;
            for (auto& x : v) ints.push_back(x.num() * (l / x.den()) * BigInt(sign));
            BigInt d = ints[0];
            for (auto& x : ints) d = BigInt::gcd(d, x);
            for (auto& x : ints) out.delta.push_back((x / d).to_ll());
        }
    }
    if (out.trichotomy != KacTri::Aff) {
        QMatrix inv;
        bool nonsingular = try_inverse(m, inv);
        bool fin = nonsingular;
        if (nonsingular) {
            // Fin  <=>  A^{-1} * 1 > 0  (then u = A^{-1} 1 satisfies u > 0, Au > 0)
            for (int i = 0; i < n && fin; ++i) {
                Rational s(0);
                for (int j = 0; j < n; ++j) s += inv.at(i, j);
                fin = s.sign() > 0;
            }
        }
        out.trichotomy = fin ? KacTri::Fin : KacTri::Ind;
    }
    if (out.trichotomy == KacTri::Ind) return out;
    for (const std::string& name : diagram_names(n, out.trichotomy)) {
        auto cand = diagram_matrix(name);
        if (!cand) continue;
        std::vector<int> map;
        if (gcm_isomorphic(a, *cand, map)) {
            out.diagram_name = name;
            out.canonical_map = map;
            return out;
        }
    }
    throw std::logic_error("kac_type: no diagram matched an indecomposable matrix of " +
                           std::string(out.trichotomy == KacTri::Fin ? "finite" : "affine") + " type");
}

}  // namespace zlab
