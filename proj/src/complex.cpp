#include "nhtopo/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace nhtopo {

namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Vertex> merge_grounds(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Remaps a facet mask from one sorted ground to a sorted superset ground.
FaceMask remap_mask(FaceMask m, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    FaceMask out = 0;
    for (int i = 0; i < static_cast<int>(from.size()); ++i) {
        if (m & (FaceMask{1} << i)) {
            auto it = std::lower_bound(to.begin(), to.end(), from[i]);
            out |= FaceMask{1} << (it - to.begin());
        }
    }
    return out;
}

int popcount(FaceMask m) { return std::popcount(m); }

} // namespace

std::vector<FaceMask> antichain_reduce(std::vector<FaceMask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<FaceMask> out;
    out.reserve(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < masks.size(); ++j) {
            if (i != j && (masks[i] & masks[j]) == masks[i] && masks[i] != masks[j]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(masks[i]);
    }
    return out;
}

SimplicialComplex SimplicialComplex::make(std::vector<Vertex> ground,
                                          const std::vector<Simplex>& faces) {
    SimplicialComplex k;
    k.void_ = false;
    k.ground_ = sorted_unique(std::move(ground));
    if (k.ground_.size() > static_cast<std::size_t>(kMaxGroundSize))
        throw ResourceCap("ground set exceeds " + std::to_string(kMaxGroundSize) + " vertices");
    std::vector<FaceMask> masks;
    masks.reserve(faces.size());
    for (const Simplex& f : faces) masks.push_back(k.mask_of(f));
    if (masks.empty()) masks.push_back(0); // complex generated by nothing is {∅}
    k.facets_ = antichain_reduce(std::move(masks));
    return k;
}

SimplicialComplex SimplicialComplex::make(const std::vector<Simplex>& faces) {
    std::vector<Vertex> ground;
    for (const Simplex& f : faces) ground.insert(ground.end(), f.begin(), f.end());
    return make(sorted_unique(std::move(ground)), faces);
}

SimplicialComplex SimplicialComplex::make_void(std::vector<Vertex> ground) {
    SimplicialComplex k;
    k.void_ = true;
    k.ground_ = sorted_unique(std::move(ground));
    return k;
}

SimplicialComplex SimplicialComplex::make_empty(std::vector<Vertex> ground) {
    SimplicialComplex k;
    k.void_ = false;
    k.ground_ = sorted_unique(std::move(ground));
    k.facets_ = {0};
    return k;
}

SimplicialComplex SimplicialComplex::from_facet_masks(std::vector<Vertex> ground,
                                                      std::vector<FaceMask> facets,
                                                      bool is_void) {
    SimplicialComplex k;
    k.ground_ = sorted_unique(std::move(ground));
    if (k.ground_.size() > static_cast<std::size_t>(kMaxGroundSize))
        throw ResourceCap("ground set exceeds " + std::to_string(kMaxGroundSize) + " vertices");
    if (is_void) {
        if (!facets.empty()) throw InvalidArgument("void complex cannot have facets");
        k.void_ = true;
        return k;
    }
    k.void_ = false;
    const FaceMask all = k.ground_.empty() ? 0 : (~FaceMask{0} >> (64 - k.ground_.size()));
    for (FaceMask m : facets)
        if ((m & ~all) != 0) throw GroundViolation("facet mask outside ground set");
    if (facets.empty()) facets.push_back(0);
    k.facets_ = antichain_reduce(std::move(facets));
    return k;
}

std::optional<int> SimplicialComplex::dim() const {
    if (void_) return std::nullopt;
    int d = -1;
    for (FaceMask m : facets_) d = std::max(d, popcount(m) - 1);
    return d;
}

FaceMask SimplicialComplex::support_mask() const {
    FaceMask s = 0;
    for (FaceMask m : facets_) s |= m;
    return s;
}

std::vector<Vertex> SimplicialComplex::support() const { return simplex_of(support_mask()); }

int SimplicialComplex::support_size() const { return popcount(support_mask()); }

bool SimplicialComplex::is_pure() const {
    if (void_ || facets_.empty()) return true;
    const int d = popcount(facets_.front());
    for (FaceMask m : facets_)
        if (popcount(m) != d) return false;
    return true;
}

bool SimplicialComplex::contains(const Simplex& s) const { return contains_mask(mask_of(s)); }

bool SimplicialComplex::contains_mask(FaceMask m) const {
    if (void_) return false;
    for (FaceMask f : facets_)
        if ((m & f) == m) return true;
    return false;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    out.reserve(facets_.size());
    for (FaceMask m : facets_) out.push_back(simplex_of(m));
    std::sort(out.begin(), out.end());
    return out;
}

int SimplicialComplex::index_of(const Vertex& v) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
    if (it == ground_.end() || *it != v) return -1;
    return static_cast<int>(it - ground_.begin());
}

FaceMask SimplicialComplex::mask_of(const Simplex& s) const {
    FaceMask m = 0;
    for (const Vertex& v : s) {
        const int i = index_of(v);
        if (i < 0) throw GroundViolation("vertex '" + v + "' is not in the ground set");
        m |= FaceMask{1} << i;
    }
    return m;
}

Simplex SimplicialComplex::simplex_of(FaceMask m) const {
    Simplex s;
    for (int i = 0; i < static_cast<int>(ground_.size()); ++i)
        if (m & (FaceMask{1} << i)) s.push_back(ground_[i]);
    return s;
}

SimplicialComplex SimplicialComplex::with_ground(std::vector<Vertex> ground) const {
    std::vector<Vertex> g = sorted_unique(std::move(ground));
    if (void_) return make_void(std::move(g));
    std::vector<FaceMask> masks;
    masks.reserve(facets_.size());
    for (FaceMask m : facets_) {
        const Simplex s = simplex_of(m);
        for (const Vertex& v : s)
            if (!std::binary_search(g.begin(), g.end(), v))
                throw GroundViolation("new ground drops support vertex '" + v + "'");
        masks.push_back(remap_mask(m, ground_, g));
    }
    return from_facet_masks(std::move(g), std::move(masks));
}

SimplicialComplex SimplicialComplex::restricted_to_support() const {
    if (void_) return make_void();
    return with_ground(support());
}

std::vector<std::vector<FaceMask>> SimplicialComplex::faces_by_dim() const {
    if (void_) return {};
    std::unordered_set<FaceMask> seen;
    std::vector<FaceMask> frontier(facets_.begin(), facets_.end());
    for (FaceMask m : frontier) seen.insert(m);
    while (!frontier.empty()) {
        std::vector<FaceMask> next;
        for (FaceMask m : frontier) {
            FaceMask rest = m;
            while (rest) {
                const FaceMask bit = rest & (~rest + 1);
                rest ^= bit;
                const FaceMask sub = m ^ bit;
                if (seen.insert(sub).second) next.push_back(sub);
            }
        }
        frontier = std::move(next);
    }
    int d = *dim();
    std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(d + 2));
    for (FaceMask m : seen) by_dim[static_cast<std::size_t>(popcount(m))].push_back(m);
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
    return by_dim;
}

SimplicialComplex full_simplex(std::vector<Vertex> vertices) {
    std::vector<Simplex> faces;
    Simplex top = vertices;
    std::sort(top.begin(), top.end());
    faces.push_back(top);
    return SimplicialComplex::make(std::move(vertices), faces);
}

SimplicialComplex boundary_simplex(std::vector<Vertex> vertices) {
    if (vertices.empty()) throw InvalidArgument("boundary_simplex of the empty vertex set");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<Simplex> faces;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Simplex f;
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (j != i) f.push_back(vertices[j]);
        faces.push_back(std::move(f));
    }
    return SimplicialComplex::make(std::move(vertices), faces);
}

bool is_full_simplex(const SimplicialComplex& k) {
    if (k.is_void()) throw VoidComplex("is_full_simplex of the void complex");
    return k.facet_count() == 1; // the single facet is the whole support
}

bool is_boundary_of_simplex(const SimplicialComplex& k) {
    if (k.is_void()) throw VoidComplex("is_boundary_of_simplex of the void complex");
    const FaceMask supp = k.support_mask();
    const int n = popcount(supp);
    if (n == 0) return true; // {∅} = ∂Δ⁰
    if (k.facet_count() != n) return false;
    for (FaceMask m : k.facet_masks())
        if (popcount(m) != n - 1) return false;
    return true; // n facets of size n-1 within an n-set are exactly ∂Δ(supp)
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    const std::vector<Vertex> ground = merge_grounds(k.ground(), l.ground());
    if (k.is_void() || l.is_void()) return SimplicialComplex::make_void(ground);
    const SimplicialComplex k2 = k.with_ground(ground);
    const SimplicialComplex l2 = l.with_ground(ground);
    if ((k2.support_mask() & l2.support_mask()) != 0)
        throw JoinOverlap("join of complexes with overlapping supports");
    std::vector<FaceMask> masks;
    masks.reserve(k2.facet_masks().size() * l2.facet_masks().size());
    for (FaceMask a : k2.facet_masks())
        for (FaceMask b : l2.facet_masks()) masks.push_back(a | b);
    return SimplicialComplex::from_facet_masks(ground, std::move(masks));
}

SimplicialComplex complex_union(const SimplicialComplex& k, const SimplicialComplex& l) {
    const std::vector<Vertex> ground = merge_grounds(k.ground(), l.ground());
    if (k.is_void() && l.is_void()) return SimplicialComplex::make_void(ground);
    if (k.is_void()) return l.with_ground(ground);
    if (l.is_void()) return k.with_ground(ground);
    const SimplicialComplex k2 = k.with_ground(ground);
    const SimplicialComplex l2 = l.with_ground(ground);
    std::vector<FaceMask> masks(k2.facet_masks());
    masks.insert(masks.end(), l2.facet_masks().begin(), l2.facet_masks().end());
    return SimplicialComplex::from_facet_masks(ground, std::move(masks));
}

SimplicialComplex complex_intersection(const SimplicialComplex& k, const SimplicialComplex& l) {
    const std::vector<Vertex> ground = merge_grounds(k.ground(), l.ground());
    if (k.is_void() || l.is_void()) return SimplicialComplex::make_void(ground);
    const SimplicialComplex k2 = k.with_ground(ground);
    const SimplicialComplex l2 = l.with_ground(ground);
    std::vector<FaceMask> masks;
    for (FaceMask a : k2.facet_masks())
        for (FaceMask b : l2.facet_masks()) masks.push_back(a & b);
    return SimplicialComplex::from_facet_masks(ground, std::move(masks));
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
    if (k.is_void()) throw VoidComplex("link in the void complex");
    const FaceMask sm = k.mask_of(s);
    if (!k.contains_mask(sm)) throw FaceNotPresent("link of a simplex not in the complex");
    std::vector<FaceMask> masks;
    for (FaceMask f : k.facet_masks())
        if ((f & sm) == sm) masks.push_back(f & ~sm);
    SimplicialComplex lk = SimplicialComplex::from_facet_masks(k.ground(), std::move(masks));
    return lk.restricted_to_support();
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& s) {
    if (k.is_void()) throw VoidComplex("star in the void complex");
    const FaceMask sm = k.mask_of(s);
    if (!k.contains_mask(sm)) throw FaceNotPresent("star of a simplex not in the complex");
    std::vector<FaceMask> masks;
    for (FaceMask f : k.facet_masks())
        if ((f & sm) == sm) masks.push_back(f);
    SimplicialComplex st = SimplicialComplex::from_facet_masks(k.ground(), std::move(masks));
    return st.restricted_to_support();
}

SimplicialComplex deletion(const SimplicialComplex& k, const Vertex& v) {
    if (k.is_void()) throw VoidComplex("deletion in the void complex");
    const FaceMask vm = k.mask_of(Simplex{v});
    if ((k.support_mask() & vm) == 0)
        throw FaceNotPresent("deletion of a vertex not in the support");
    std::vector<FaceMask> masks;
    for (FaceMask f : k.facet_masks()) masks.push_back(f & ~vm);
    SimplicialComplex del = SimplicialComplex::from_facet_masks(k.ground(), std::move(masks));
    return del.restricted_to_support();
}

SimplicialComplex nerve(const SimplicialComplex& k) {
    if (k.is_void()) throw VoidComplex("nerve of the void complex");
    const int m = k.facet_count();
    std::vector<Vertex> verts;
    verts.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) verts.push_back("n" + std::to_string(i));
    if (k.support_size() == 0) return full_simplex(verts); // {∅}: a single nerve vertex
    // Facets sharing the vertex v span a nerve simplex; these sets generate
    // the whole nerve.
    std::vector<FaceMask> nerve_faces;
    for (int b = 0; b < static_cast<int>(k.ground().size()); ++b) {
        const FaceMask vbit = FaceMask{1} << b;
        FaceMask face = 0;
        for (int i = 0; i < m; ++i)
            if (k.facet_masks()[static_cast<std::size_t>(i)] & vbit) face |= FaceMask{1} << i;
        if (face) nerve_faces.push_back(face);
    }
    // Facets that meet no other facet in a vertex still carry a nerve vertex.
    for (int i = 0; i < m; ++i) nerve_faces.push_back(FaceMask{1} << i);
    return SimplicialComplex::from_facet_masks(verts, std::move(nerve_faces));
}

SimplicialComplex elementary_starring(const SimplicialComplex& k, const Simplex& tau,
                                      const Vertex& a) {
    if (k.is_void()) throw VoidComplex("starring in the void complex");
    if (tau.empty()) throw InvalidArgument("starring simplex must be non-empty");
    const FaceMask tm = k.mask_of(tau);
    if (!k.contains_mask(tm)) throw InvalidArgument("starring simplex is not a face");
    const std::vector<Vertex> supp = k.support();
    if (std::binary_search(supp.begin(), supp.end(), a))
        throw InvalidArgument("starring vertex '" + a + "' already present");

    const SimplicialComplex lk = link(k, tau);
    const SimplicialComplex dt = boundary_simplex(tau);
    const SimplicialComplex cone = join(full_simplex({a}), join(dt, lk));

    // Faces of K surviving the removal of the open star: facets not
    // containing τ, plus every facet F ⊇ τ stripped one τ-vertex at a time.
    std::vector<Simplex> residue;
    for (FaceMask f : k.facet_masks()) {
        if ((f & tm) != tm) {
            residue.push_back(k.simplex_of(f));
        } else {
            for (const Vertex& v : tau) {
                Simplex cut = k.simplex_of(f);
                cut.erase(std::find(cut.begin(), cut.end(), v));
                residue.push_back(std::move(cut));
            }
        }
    }
    return complex_union(SimplicialComplex::make(supp, residue), cone).restricted_to_support();
}

SimplicialComplex pure_boundary(const SimplicialComplex& k) {
    if (k.is_void()) throw VoidComplex("boundary of the void complex");
    if (!k.is_pure()) throw NotPure("boundary requires a pure complex");
    std::vector<FaceMask> ridges;
    std::unordered_map<FaceMask, int> incidence;
    for (FaceMask f : k.facet_masks()) {
        if (f == 0) {
            // K = {∅}: the empty simplex has no proper face.
            continue;
        }
        FaceMask rest = f;
        while (rest) {
            const FaceMask bit = rest & (~rest + 1);
            rest ^= bit;
            ++incidence[f ^ bit];
        }
    }
    for (const auto& [ridge, count] : incidence)
        if (count == 1) ridges.push_back(ridge);
    if (ridges.empty()) return SimplicialComplex::make_void();
    SimplicialComplex b = SimplicialComplex::from_facet_masks(k.ground(), std::move(ridges));
    return b.restricted_to_support();
}

bool is_strongly_connected(const SimplicialComplex& k) {
    if (k.is_void()) throw VoidComplex("connectivity of the void complex");
    const auto& fs = k.facet_masks();
    const int m = static_cast<int>(fs.size());
    std::vector<int> comp(static_cast<std::size_t>(m), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < m; ++j) {
            if (comp[static_cast<std::size_t>(j)] >= 0) continue;
            const FaceMask inter = fs[static_cast<std::size_t>(i)] & fs[static_cast<std::size_t>(j)];
            const int ci = popcount(inter);
            if (ci == popcount(fs[static_cast<std::size_t>(i)]) - 1 ||
                ci == popcount(fs[static_cast<std::size_t>(j)]) - 1) {
                comp[static_cast<std::size_t>(j)] = 0;
                stack.push_back(j);
            }
        }
    }
    return std::none_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
}

SimplicialComplex vertex_minimal_extension(const SimplicialComplex& k, const Vertex& u) {
    if (k.is_void()) throw VoidComplex("extension of the void complex");
    const std::vector<Vertex> supp = k.support();
    if (std::binary_search(supp.begin(), supp.end(), u))
        throw InvalidArgument("extension vertex '" + u + "' already present");
    return complex_union(full_simplex(supp), join(full_simplex({u}), k));
}

SimplicialComplex eta_extension(const Simplex& eta, std::vector<Vertex> big_ground,
                                const SimplicialComplex& k) {
    if (eta.empty()) throw InvalidArgument("eta must be non-empty");
    std::sort(big_ground.begin(), big_ground.end());
    big_ground.erase(std::unique(big_ground.begin(), big_ground.end()), big_ground.end());
    for (const Vertex& v : eta)
        if (std::binary_search(big_ground.begin(), big_ground.end(), v))
            throw InvalidArgument("eta vertex '" + v + "' lies in the ground set");
    if (!k.is_void())
        for (const Vertex& v : k.support())
            if (!std::binary_search(big_ground.begin(), big_ground.end(), v))
                throw InvalidArgument("ground set must contain the support of K");
    const SimplicialComplex eta_cplx = full_simplex(eta);
    return complex_union(join(boundary_simplex(eta), full_simplex(big_ground)),
                         join(eta_cplx, k));
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    return canonical_form(a) == canonical_form(b);
}

bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) return a.is_void() == b.is_void();
    return a.facets() == b.facets();
}

} // namespace nhtopo
