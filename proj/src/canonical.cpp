#include "nhtopo/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace nhtopo {

namespace {

constexpr long long kPermutationCap = 20'000'000;

// Product-of-permutations odometer over the vertex classes.
struct ClassOdometer {
    std::vector<std::vector<int>> classes; // members per class, each kept in a permutable order

    bool advance() {
        for (auto& cls : classes) {
            if (std::next_permutation(cls.begin(), cls.end())) return true;
        }
        return false;
    }
};

} // namespace

CanonicalForm canonical_form(const SimplicialComplex& k) {
    CanonicalForm out;
    if (k.is_void()) {
        out.is_void = true;
        return out;
    }
    const SimplicialComplex s = k.restricted_to_support();
    const int n = static_cast<int>(s.ground().size());
    const auto& facets = s.facet_masks();

    // Vertex invariant: the sorted multiset of facet sizes through the vertex.
    // An isomorphism can only map vertices with equal invariants.
    std::map<std::vector<int>, std::vector<int>> classes_by_invariant;
    for (int v = 0; v < n; ++v) {
        std::vector<int> inv;
        for (FaceMask f : facets)
            if (f & (FaceMask{1} << v)) inv.push_back(std::popcount(f));
        std::sort(inv.begin(), inv.end());
        classes_by_invariant[inv].push_back(v);
    }

    ClassOdometer odo;
    long long total = 1;
    for (auto& [inv, members] : classes_by_invariant) {
        for (std::size_t i = 2; i <= members.size() && total <= kPermutationCap; ++i)
            total *= static_cast<long long>(i);
        odo.classes.push_back(members);
    }
    if (total > kPermutationCap)
        throw ResourceCap("canonicalization cap exceeded (too many equivalent vertices)");

    // Canonical indices are handed out class block by class block; the class
    // order is itself invariant (classes are keyed by their invariant).
    std::vector<int> slot_of_class_start;
    {
        int offset = 0;
        for (const auto& cls : odo.classes) {
            slot_of_class_start.push_back(offset);
            offset += static_cast<int>(cls.size());
        }
    }

    std::vector<FaceMask> best;
    std::vector<int> perm(static_cast<std::size_t>(n), 0);
    std::vector<FaceMask> relabeled(facets.size());
    bool first = true;
    do {
        for (std::size_t c = 0; c < odo.classes.size(); ++c) {
            const auto& cls = odo.classes[c];
            for (std::size_t i = 0; i < cls.size(); ++i)
                perm[static_cast<std::size_t>(cls[i])] = slot_of_class_start[c] + static_cast<int>(i);
        }
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            FaceMask m = facets[fi];
            FaceMask img = 0;
            while (m) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                img |= FaceMask{1} << perm[static_cast<std::size_t>(v)];
            }
            relabeled[fi] = img;
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (first || relabeled < best) {
            best = relabeled;
            first = false;
        }
    } while (odo.advance());

    out.facets.reserve(best.size());
    for (FaceMask m : best) {
        std::vector<int> f;
        while (m) {
            f.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        out.facets.push_back(std::move(f));
    }
    return out;
}

std::string CanonicalForm::key() const {
    if (is_void) return "void";
    std::string s = "{";
    bool first_facet = true;
    for (const auto& f : facets) {
        if (!first_facet) s += '|';
        first_facet = false;
        bool first_v = true;
        for (int v : f) {
            if (!first_v) s += ' ';
            first_v = false;
            s += std::to_string(v);
        }
    }
    s += '}';
    return s;
}

SimplicialComplex CanonicalForm::to_complex() const {
    if (is_void) return SimplicialComplex::make_void();
    int n = 0;
    for (const auto& f : facets)
        for (int v : f) n = std::max(n, v + 1);
    std::vector<Vertex> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string lab = "v";
        if (i < 10) lab += '0';
        lab += std::to_string(i);
        labels.push_back(std::move(lab));
    }
    std::vector<Simplex> faces;
    faces.reserve(facets.size());
    for (const auto& f : facets) {
        Simplex s;
        for (int v : f) s.push_back(labels[static_cast<std::size_t>(v)]);
        faces.push_back(std::move(s));
    }
    return SimplicialComplex::make(labels, faces);
}

} // namespace nhtopo
