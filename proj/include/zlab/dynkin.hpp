#ifndef ZLAB_DYNKIN_HPP
#define ZLAB_DYNKIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "zlab/quiver.hpp"

namespace zlab {

enum class DynkinKind { A, D, E6, E7, E8, AffA, AffD, AffE6, AffE7, AffE8, NonADE };

struct DynkinType {
    DynkinKind kind = DynkinKind::NonADE;
    int index = 0;  // the subscript where applicable (A_l, D_l, AffA_l, AffD_l)

    bool is_affine() const {
        return kind == DynkinKind::AffA || kind == DynkinKind::AffD ||
               kind == DynkinKind::AffE6 || kind == DynkinKind::AffE7 ||
               kind == DynkinKind::AffE8;
    }
    bool is_finite_ade() const {
        return kind == DynkinKind::A || kind == DynkinKind::D || kind == DynkinKind::E6 ||
               kind == DynkinKind::E7 || kind == DynkinKind::E8;
    }
    int vertex_count() const;
    std::string name() const;  // "A_5", "hD_6" (h marks affine hats)
    friend bool operator==(const DynkinType&, const DynkinType&) = default;
    friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

// Positive integer vertex labels with 2*f(v) = sum of f over neighbors, gcd 1.
struct AdditiveFunction {
    std::vector<long long> values;  // indexed by input vertex id
};

// Plain undirected multigraph.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    static Graph make(int n, std::vector<Edge> edges);
};

struct Recognition {
    DynkinType type;
    std::optional<AdditiveFunction> additive;  // affine types only
    // canonical position -> input vertex id; layouts per type are fixed, see
    // canonical_graph(). Empty for NonADE.
    std::vector<int> canonical_order;
};

// Classifies a connected multigraph as finite ADE, affine ADE, or neither.
// Affinity is decided exactly: the system 2*f = A*f must have a positive
// one-dimensional rational kernel.
Recognition recognize(const Graph& g);

// Solves 2f = Af exactly; returns the coprime positive integer solution when
// one exists (the graph is then affine ADE by Vinberg's theorem).
std::optional<AdditiveFunction> solve_additive(const Graph& g);

// l+1 for A_l, 2l-2 for D_l, 12/18/30 for E6/E7/E8; nullopt (= infinity) for affine.
std::optional<int> coxeter_number(const DynkinType& t);

// Sum of squares of the additive function of an affine diagram.
long long mckay_number(const DynkinType& t);

// The diagram in canonical layout together with its canonical 2-coloring.
// Canonical layouts:
//   AffA_l:  cycle 0,1,...,l (color = parity; requires l odd to be bipartite)
//   AffD_l:  [u+ u- c_1..c_{l-3} v+ v-] with u's on c_1, v's on c_{l-3}
//   AffE6:   [center m1 l1 m2 l2 m3 l3]
//   AffE7:   [branch x1..x7], branch attached to x4
//   AffE8:   [branch s1 s2 center t1..t5], arms 1/2/5
//   A_l, D_l, E6..E8: analogous finite shapes
struct CanonicalDiagram {
    Graph graph;
    std::vector<int> color;
    std::vector<long long> additive;  // affine only, else empty
};
CanonicalDiagram canonical_graph(const DynkinType& t);

struct NamedAutomorphism {
    std::string name;
    std::vector<int> perm;  // canonical position -> canonical position
    bool color_preserving;
};

// Generators/representatives used by the catalog constructions, as explicit
// permutations of the canonical layout. Affine types only.
std::vector<NamedAutomorphism> standard_automorphisms(const DynkinType& t);

// Looks up one automorphism by name; throws if absent.
NamedAutomorphism automorphism(const DynkinType& t, const std::string& name);

// Composition g(f(x)) and related helpers.
std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& f);
std::vector<int> identity_perm(int n);
bool is_graph_automorphism(const Graph& g, const std::vector<int>& perm);

}  // namespace zlab

#endif
