#ifndef ZLAB_CATALOG_HPP
#define ZLAB_CATALOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zlab/dynkin.hpp"
#include "zlab/quiver.hpp"
#include "zlab/spectral.hpp"

namespace zlab {

// Catalog item: id 1..53 in the classification order, with the item's own
// parameter tuple.  Type-valued parameters are encoded as (code, index) pairs
// via encode_type/decode_type.
struct FamilyId {
    int id = 0;
    std::vector<long long> params;
    friend bool operator==(const FamilyId&, const FamilyId&) = default;
    friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
    std::string to_string() const;
};

long long encode_type(const DynkinType& t);
DynkinType decode_type(long long code);

std::string family_name(int id);

// 2-coloring of a connected bipartite graph; throws on odd cycles.
std::vector<int> bipartition_of(const Graph& g);

Bigraph build_tensor(const Graph& s, const Graph& t);
Bigraph build_twist(const Graph& h);
Bigraph build_toric(const DynkinType& t, const NamedAutomorphism& eta, int n);
Bigraph build_path(const DynkinType& t, const NamedAutomorphism& alpha,
                   const NamedAutomorphism& beta, int n);
Bigraph build_pseudo_twist(int m, int p);

// Standalone self/double bindings:
//   "self"        params {n}   : S_{4n+1}, a (4n+2)-gon with blue diameters
//   "parallel"    params {type}: type (x) A_2
//   "DA2"  {m} : hD_{m+2}  => hA_{2m-1}      (scf (1,2))
//   "AA2"  {m} : hA_{4m-1} => hA_{2m-1}
//   "DD2"  {m} : hD_{2m+2} => hD_{m+2}
//   "E7E6" {}  : hE_7 => hE_6
//   "DD3"  {n} : hD_{3n+2} =3> hD_{n+2}      (scf (1,3))
//   "AA3"  {n} : hA_{6n-1} =3> hA_{2n-1}
//   "D5A3" {}, "E7D6" {}, "E6D4" {}
Bigraph build_binding(const std::string& kind, const std::vector<long long>& params);

// The thirteen exceptional items, by catalog id
// (36..40 doubles, 41..46 triple-arrow, 51..52 full-house).
Bigraph build_exceptional(int id);

// Gluing assembler for an unambiguous description: shape name from the Kac
// tables plus one affine label per canonical shape position.
struct DescrSpec {
    std::string shape;
    std::vector<DynkinType> labels;
};
Bigraph assemble(const DescrSpec& d);

Bigraph build_family(const FamilyId& f);
long long family_vertex_count(const FamilyId& f);

// Catalog representative of the dual: parameter transform for self-dual
// families, nullopt otherwise (the list keeps one member per dual pair).
std::optional<FamilyId> dual_family(const FamilyId& f);

// Independent construction of the dual instance where one is known (an
// explicit dual family, a stated dual construction, or an unambiguous
// description); nullopt for the few families whose dual has an ambiguous
// description.
std::optional<Bigraph> build_dual_instance(const FamilyId& f);

struct KacQuadruple {
    std::string s_g;
    std::vector<std::string> descr_g;  // affine type names, canonical shape order
    std::string s_gstar;
    std::vector<std::string> descr_gstar;
    std::string to_string() const;
    friend bool operator==(const KacQuadruple&, const KacQuadruple&) = default;
};
KacQuadruple kac_quadruple(const Bigraph& g);

// (shape name, lexicographically minimal canonical labels) of S(G) alone.
std::pair<std::string, std::vector<std::string>> descr_of(const Bigraph& g);

// Every catalog instance with at most max_vertices vertices, one entry per
// dual pair for self-dual families, ordered by (id, params).
std::vector<std::pair<FamilyId, Bigraph>> enumerate_catalog(int max_vertices);

// All bipartite affine ADE types with at most max_vertices vertices.
std::vector<DynkinType> bipartite_affine_types(int max_vertices);

}  // namespace zlab

#endif
