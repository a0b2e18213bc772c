#ifndef ZLAB_QUIVER_HPP
#define ZLAB_QUIVER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zlab {

// Undirected edge with multiplicity, stored with u < v.
struct Edge {
    int u, v;
    int mult;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed arrow with multiplicity.
struct Arrow {
    int from, to;
    int mult;
    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// Loop-free, 2-cycle-free directed multigraph with an optional bipartition.
// Immutable by convention: operations return new quivers.
struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows;  // sorted by (from,to), mult > 0, no loops, no 2-cycles
    std::optional<std::vector<int>> bipartition;

    static Quiver make(int n, std::vector<Arrow> arrows,
                       std::optional<std::vector<int>> bipartition = std::nullopt);
    bool is_bipartite() const { return bipartition.has_value(); }
    friend bool operator==(const Quiver&, const Quiver&) = default;
};

// Bigraph: one vertex set, a color map epsilon, and two undirected edge
// multisets (red and blue) that share no edge and join opposite colors.
struct Bigraph {
    int n = 0;
    std::vector<int> color;  // epsilon: vertex -> {0,1}
    std::vector<Edge> red, blue;

    static Bigraph make(int n, std::vector<int> color,
                        std::vector<Edge> red, std::vector<Edge> blue);
    friend bool operator==(const Bigraph&, const Bigraph&) = default;
};

struct Labeling {
    std::vector<double> values;  // strictly positive
};

Quiver mutate(const Quiver& q, int v);
Quiver mutate_color(const Quiver& q, int c);
Quiver opposite(const Quiver& q);

Bigraph bigraph_of(const Quiver& q);
Quiver quiver_of(const Bigraph& g);

bool is_recurrent(const Bigraph& g);
Bigraph dual(const Bigraph& g);
bool is_isomorphic(const Bigraph& g, const Bigraph& h);

// Adjacency matrix of an edge list (n x n, flattened row-major).
std::vector<long long> adjacency(int n, const std::vector<Edge>& edges);

// Connected components induced by one edge color; each component is a sorted vertex list.
std::vector<std::vector<int>> components(int n, const std::vector<Edge>& edges);

// Vertex-induced sub-bigraph; keeps both edge colors, relabels to 0..k-1 in the
// order given by `verts` (must be sorted).
Bigraph induced(const Bigraph& g, const std::vector<int>& verts);

bool is_connected(const Bigraph& g);

// Normalizes an edge list: orients u < v, merges duplicates, drops zero
// multiplicities, sorts.
std::vector<Edge> normalize_edges(std::vector<Edge> edges);

std::string to_json(const Bigraph& g);
Bigraph bigraph_from_json(const std::string& text);
std::string to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& text);

}  // namespace zlab

#endif
