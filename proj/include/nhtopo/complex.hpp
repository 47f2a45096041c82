#ifndef NHTOPO_COMPLEX_HPP
#define NHTOPO_COMPLEX_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nhtopo/errors.hpp"

namespace nhtopo {

/// Vertex labels are arbitrary whitespace-free strings ordered lexicographically.
using Vertex = std::string;

/// A simplex in external (label) form: a set of vertices, kept sorted and
/// duplicate-free. The empty vector is the empty simplex (dimension -1).
using Simplex = std::vector<Vertex>;

/// Internal face representation: one bit per ground-set vertex, bit i
/// corresponding to the i-th label of the (sorted) ground set.
using FaceMask = std::uint64_t;

/// Hard limit on ground-set size imposed by the 64-bit face masks.
inline constexpr int kMaxGroundSize = 64;

/// Sorts, deduplicates and drops masks contained in another mask.
std::vector<FaceMask> antichain_reduce(std::vector<FaceMask> masks);

/**
 * A finite simplicial complex stored as its ground set plus the antichain of
 * facets (maximal faces). Distinguishes the void complex (no faces at all)
 * from the complex {∅} whose only facet is the empty simplex; every non-void
 * complex implicitly contains the empty face. The ground set may be larger
 * than the support; all combinatorial predicates are computed over the
 * support, only Alexander duals read the ground.
 *
 * Immutable after construction; freely copyable and shareable.
 */
class SimplicialComplex {
public:
    SimplicialComplex() : void_(true) {}

    /// Complex generated by `faces` over the given ground set. An empty face
    /// list yields {∅}. Throws GroundViolation if a face leaves the ground.
    static SimplicialComplex make(std::vector<Vertex> ground,
                                  const std::vector<Simplex>& faces);

    /// Complex generated by `faces`, ground inferred as the union of the faces.
    static SimplicialComplex make(const std::vector<Simplex>& faces);

    /// The void complex ∅ (no faces, not even the empty one).
    static SimplicialComplex make_void(std::vector<Vertex> ground = {});

    /// The complex {∅}.
    static SimplicialComplex make_empty(std::vector<Vertex> ground = {});

    /// Low-level constructor from facet masks relative to `ground` (sorted,
    /// unique). Masks are antichain-reduced; used by the dual and census code.
    static SimplicialComplex from_facet_masks(std::vector<Vertex> ground,
                                              std::vector<FaceMask> facets,
                                              bool is_void = false);

    bool is_void() const { return void_; }
    const std::vector<Vertex>& ground() const { return ground_; }
    const std::vector<FaceMask>& facet_masks() const { return facets_; }

    /// Number of facets, m(K). m({∅}) = 1, m(void) = 0.
    int facet_count() const { return static_cast<int>(facets_.size()); }

    /// Max facet dimension; nullopt for the void complex, -1 for {∅}.
    std::optional<int> dim() const;

    FaceMask support_mask() const;
    std::vector<Vertex> support() const;
    int support_size() const;

    /// All facets share one dimension (vacuously true for void).
    bool is_pure() const;

    /// Face membership; the empty simplex is a face of every non-void complex.
    bool contains(const Simplex& s) const;
    bool contains_mask(FaceMask m) const;

    /// Facets in label form, sorted.
    std::vector<Simplex> facets() const;

    /// Translation between label and mask form (relative to this ground set).
    FaceMask mask_of(const Simplex& s) const;
    Simplex simplex_of(FaceMask m) const;

    /// Same complex re-grounded; new ground must contain the support.
    SimplicialComplex with_ground(std::vector<Vertex> ground) const;

    /// Re-grounded to exactly the support.
    SimplicialComplex restricted_to_support() const;

    /// All faces (downward closure of the facets), grouped by dimension
    /// starting at -1. Void yields an empty vector.
    std::vector<std::vector<FaceMask>> faces_by_dim() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<Vertex> ground_; // sorted, unique
    std::vector<FaceMask> facets_; // sorted antichain; empty iff void
    bool void_ = false;

    int index_of(const Vertex& v) const; // -1 if absent
};

/// Δ(V): the full simplex on V. full_simplex({}) = {∅}.
SimplicialComplex full_simplex(std::vector<Vertex> vertices);

/// ∂Δ(V): all |V| facets of size |V|-1. boundary_simplex of a single vertex
/// is {∅} = ∂Δ⁰. Throws InvalidArgument on an empty vertex set.
SimplicialComplex boundary_simplex(std::vector<Vertex> vertices);

/// K = Δ(support K)? {∅} counts as Δ(∅).
bool is_full_simplex(const SimplicialComplex& k);

/// K = ∂Δ(support K)? {∅} counts as ∂Δ⁰. The classifier resolves the
/// {∅} ambiguity in favour of the boundary reading.
bool is_boundary_of_simplex(const SimplicialComplex& k);

/// Join K∗L for complexes with disjoint supports. K∗{∅} = K, K∗void = void.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// Union K + L of the face sets.
SimplicialComplex complex_union(const SimplicialComplex& k, const SimplicialComplex& l);

/// The complex of faces lying in both K and L ({∅} at minimum when both are
/// non-void).
SimplicialComplex complex_intersection(const SimplicialComplex& k, const SimplicialComplex& l);

/// lk(σ,K) = {τ : τ∩σ = ∅, τ∗σ ∈ K}. Result grounded on its support.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& s);

/// st(σ,K) = σ ∗ lk(σ,K).
SimplicialComplex star(const SimplicialComplex& k, const Simplex& s);

/// K - v: faces avoiding the vertex v. Result grounded on its support.
SimplicialComplex deletion(const SimplicialComplex& k, const Vertex& v);

/// Nerve of K: one vertex per facet ("n0", "n1", ... in facet order); a set
/// of facets spans a simplex iff it has a common vertex. nerve({∅}) is a
/// single vertex.
SimplicialComplex nerve(const SimplicialComplex& k);

/// Elementary starring (τ,a)K: replaces st(τ,K) by a∗∂τ∗lk(τ,K) for a fresh
/// vertex a.
SimplicialComplex elementary_starring(const SimplicialComplex& k, const Simplex& tau,
                                      const Vertex& a);

/// Boundary of a pure complex: generated by the ridges lying in exactly one
/// facet. Void when every ridge is shared (a closed pseudomanifold).
SimplicialComplex pure_boundary(const SimplicialComplex& k);

/// Facet graph connectivity, edges between facets whose intersection is a
/// ridge of one of the two.
bool is_strongly_connected(const SimplicialComplex& k);

/// Δ_K + u∗K for a fresh vertex u.
SimplicialComplex vertex_minimal_extension(const SimplicialComplex& k, const Vertex& u);

/// ∂η∗Δ(V) + η∗K for a non-empty simplex η disjoint from V ⊇ support(K).
SimplicialComplex eta_extension(const Simplex& eta, std::vector<Vertex> big_ground,
                                const SimplicialComplex& k);

/// Relabeling-invariant normal form: the lexicographically least facet list
/// over all support relabelings (restricted to vertex-invariant classes).
/// Ground padding is ignored. Equal iff the complexes are isomorphic.
struct CanonicalForm {
    std::vector<std::vector<int>> facets; // sorted; {} entry is the empty face
    bool is_void = false;

    auto operator<=>(const CanonicalForm&) const = default;

    /// Compact printable key, e.g. "{0 1|2}".
    std::string key() const;

    /// The canonical complex itself, with vertices relabeled "v00", "v01", ...
    SimplicialComplex to_complex() const;
};

CanonicalForm canonical_form(const SimplicialComplex& k);
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// Facet-set equality on labels, ignoring ground padding and ground order.
bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b);

} // namespace nhtopo

#endif // NHTOPO_COMPLEX_HPP
