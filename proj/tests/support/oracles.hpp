#ifndef NHTOPO_TESTS_ORACLES_HPP
#define NHTOPO_TESTS_ORACLES_HPP

// Definitional face-set oracles used to derive expected values independently
// of the facet-based implementation under test. Everything here works on
// explicit sets of label simplices and stays deliberately naive.

#include <algorithm>
#include <set>
#include <vector>

#include "nhtopo/complex.hpp"

namespace nhtopo::testing {

/// Every face of K (downward closure of the facets), as sorted label sets.
inline std::set<Simplex> all_faces(const SimplicialComplex& k) {
    std::set<Simplex> faces;
    if (k.is_void()) return faces;
    for (const Simplex& facet : k.facets()) {
        const std::size_t n = facet.size();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            Simplex f;
            for (std::size_t i = 0; i < n; ++i)
                if (bits & (std::uint64_t{1} << i)) f.push_back(facet[i]);
            faces.insert(f);
        }
    }
    return faces;
}

inline bool is_face(const std::set<Simplex>& faces, Simplex s) {
    std::sort(s.begin(), s.end());
    return faces.count(s) > 0;
}

/// lk(σ,K) straight off the definition: all faces τ with τ∩σ = ∅, τ∪σ ∈ K.
inline SimplicialComplex oracle_link(const SimplicialComplex& k, const Simplex& sigma) {
    const std::set<Simplex> faces = all_faces(k);
    std::vector<Simplex> result;
    for (const Simplex& tau : faces) {
        bool disjoint = true;
        for (const Vertex& v : tau)
            if (std::find(sigma.begin(), sigma.end(), v) != sigma.end()) disjoint = false;
        if (!disjoint) continue;
        Simplex united = tau;
        united.insert(united.end(), sigma.begin(), sigma.end());
        std::sort(united.begin(), united.end());
        if (faces.count(united)) result.push_back(tau);
    }
    return SimplicialComplex::make(result);
}

/// Minimal non-faces of K relative to V by scanning every subset of V.
inline std::vector<Simplex> oracle_minimal_nonfaces(const SimplicialComplex& k,
                                                    std::vector<Vertex> big_v) {
    std::sort(big_v.begin(), big_v.end());
    const std::set<Simplex> faces = all_faces(k);
    const std::size_t n = big_v.size();
    std::vector<Simplex> nonfaces;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        Simplex s;
        for (std::size_t i = 0; i < n; ++i)
            if (bits & (std::uint64_t{1} << i)) s.push_back(big_v[i]);
        if (!faces.count(s)) nonfaces.push_back(s);
    }
    std::vector<Simplex> minimal;
    for (const Simplex& s : nonfaces) {
        bool is_minimal = true;
        for (const Simplex& t : nonfaces)
            if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end()))
                is_minimal = false;
        if (is_minimal) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return minimal;
}

/// Nerve by scanning every subset of facets for a common vertex.
inline SimplicialComplex oracle_nerve(const SimplicialComplex& k) {
    const std::vector<Simplex> facets = k.facets();
    const std::size_t m = facets.size();
    std::vector<Vertex> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("n" + std::to_string(i));
    std::vector<Simplex> nerve_faces;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
        std::vector<const Simplex*> chosen;
        Simplex face;
        for (std::size_t i = 0; i < m; ++i)
            if (bits & (std::uint64_t{1} << i)) {
                chosen.push_back(&facets[i]);
                face.push_back(labels[i]);
            }
        Simplex inter = *chosen.front();
        for (const Simplex* f : chosen) {
            Simplex next;
            std::set_intersection(inter.begin(), inter.end(), f->begin(), f->end(),
                                  std::back_inserter(next));
            inter = std::move(next);
        }
        // Singleton facet sets always span a nerve vertex; larger subsets need
        // a common vertex.
        if (!inter.empty() || chosen.size() == 1) nerve_faces.push_back(face);
    }
    return SimplicialComplex::make(labels, nerve_faces);
}

} // namespace nhtopo::testing

#endif // NHTOPO_TESTS_ORACLES_HPP
