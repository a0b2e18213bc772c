#ifndef ZLAB_SPECTRAL_HPP
#define ZLAB_SPECTRAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "zlab/bigint.hpp"
#include "zlab/dynkin.hpp"
#include "zlab/quiver.hpp"

namespace zlab {

struct PerronData {
    double mu_red = 0, mu_blue = 0;
    std::vector<double> eigenvector;  // positive, min entry 1
};

// Square integer matrix with a_ii <= 2, a_ij <= 0 off-diagonal, and
// a_ij = 0 iff a_ji = 0.
struct WeakGCM {
    int n = 0;
    std::vector<long long> a;  // row-major

    long long& at(int i, int j) { return a[(size_t)i * n + j]; }
    long long at(int i, int j) const { return a[(size_t)i * n + j]; }
    static WeakGCM make(int n, std::vector<long long> entries);
    bool indecomposable() const;
    friend bool operator==(const WeakGCM&, const WeakGCM&) = default;
};

enum class KacTri { Fin, Aff, Ind };

struct KacClass {
    KacTri trichotomy = KacTri::Ind;
    std::string diagram_name;          // "" for Ind
    std::vector<long long> delta;      // Aff only: positive coprime, A*delta = 0
    // matrix index -> canonical position in the named diagram (Fin/Aff only)
    std::vector<int> canonical_map;
};

enum class RegimeTag { FiniteFinite, AffineFinite, AffineAffine, None };

struct Regime {
    RegimeTag tag = RegimeTag::None;
    // exact additive labeling, present for AffineAffine on connected inputs
    std::optional<std::vector<Rational>> additive;
};

struct DeltaVector {
    bool exact = false;
    std::vector<Rational> rat;      // when exact
    std::vector<double> approx;     // always filled
};

PerronData perron(const Bigraph& g, double tol = 1e-12, int max_iter = 100000);

Regime labeling_regime(const Bigraph& g);

// Weak generalized Cartan matrix A(G) over the red components of g; red
// components must all be affine ADE.  Also reports the red components in
// matrix order.
WeakGCM cartan_of(const Bigraph& g);
WeakGCM cartan_of(const Bigraph& g, std::vector<std::vector<int>>& red_comps);

KacClass kac_type(const WeakGCM& a);

// Scaling factor of a double binding (two affine red components, self
// bindings removed).  First component = the one containing vertex 0.
std::pair<int, int> scaling_factor(const Bigraph& g);

DeltaVector delta_vector(const Bigraph& g);

// Candidate matrix for a diagram name ("A_5", "C_3^(1)", "1/2A_3^(1)", ...).
// Used by the structural matcher and exposed for tests.
std::optional<WeakGCM> diagram_matrix(const std::string& name);

// All finite/affine diagram names with the given vertex count.
std::vector<std::string> diagram_names(int n, KacTri tri);

// Label-preserving digraph isomorphism of weak GCMs; fills `map` with
// index-in-a -> index-in-b when found.
bool gcm_isomorphic(const WeakGCM& a, const WeakGCM& b, std::vector<int>& map);

}  // namespace zlab

#endif
