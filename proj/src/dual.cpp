#include "nhtopo/dual.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace nhtopo {

namespace {

constexpr int kSubsetScanCap = 22;

// Next subset of the same popcount (Gosper's hack).
FaceMask next_combination(FaceMask m) {
    const FaceMask c = m & -m;
    const FaceMask r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

std::vector<FaceMask> minimal_nonface_masks(const SimplicialComplex& k) {
    const int n = static_cast<int>(k.ground().size());
    if (n > kSubsetScanCap)
        throw ResourceCap("minimal non-face enumeration capped at " +
                          std::to_string(kSubsetScanCap) + " ground vertices");
    const int limit = std::min(n, *k.dim() + 2);
    const FaceMask full = n == 0 ? 0 : (~FaceMask{0} >> (64 - n));
    std::vector<FaceMask> out;
    for (int size = 1; size <= limit; ++size) {
        FaceMask m = (FaceMask{1} << size) - 1;
        while (m <= full) {
            if (!k.contains_mask(m)) {
                // Minimal iff every maximal proper subset is a face.
                bool minimal = true;
                FaceMask rest = m;
                while (rest && minimal) {
                    const FaceMask bit = rest & (~rest + 1);
                    rest ^= bit;
                    if (!k.contains_mask(m ^ bit)) minimal = false;
                }
                if (minimal) out.push_back(m);
            }
            if (m == full) break;
            const FaceMask next = next_combination(m);
            if (next <= m || next > full) break;
            m = next;
        }
    }
    return out;
}

} // namespace

std::vector<Simplex> minimal_nonfaces(const SimplicialComplex& k, std::vector<Vertex> big_v) {
    if (k.is_void()) throw VoidComplex("minimal non-faces of the void complex");
    const SimplicialComplex kv = k.with_ground(std::move(big_v));
    std::vector<Simplex> out;
    for (FaceMask m : minimal_nonface_masks(kv)) out.push_back(kv.simplex_of(m));
    std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k, std::vector<Vertex> big_v,
                                 DualMethod method) {
    if (k.is_void()) throw VoidComplex("Alexander dual of the void complex");
    const SimplicialComplex kv = k.with_ground(std::move(big_v));
    const int n = static_cast<int>(kv.ground().size());
    const FaceMask full = n == 0 ? 0 : (~FaceMask{0} >> (64 - n));

    std::vector<FaceMask> facets;
    if (method == DualMethod::MinimalNonfaces) {
        for (FaceMask m : minimal_nonface_masks(kv)) facets.push_back(full & ~m);
    } else {
        if (n > kSubsetScanCap)
            throw ResourceCap("subset scan capped at " + std::to_string(kSubsetScanCap) +
                              " ground vertices");
        std::vector<FaceMask> faces;
        for (FaceMask s = 0;; ++s) {
            if (!kv.contains_mask(full & ~s)) faces.push_back(s);
            if (s == full) break;
        }
        facets = antichain_reduce(std::move(faces));
    }
    if (facets.empty()) return SimplicialComplex::make_void(kv.ground());
    return SimplicialComplex::from_facet_masks(kv.ground(), std::move(facets));
}

SimplicialComplex dual_rel_simplex(const SimplicialComplex& k, const Simplex& tau) {
    if (k.is_void()) throw VoidComplex("dual of the void complex");
    std::vector<Vertex> ground = k.support();
    for (const Vertex& v : tau) {
        if (std::binary_search(ground.begin(), ground.end(), v))
            throw InvalidArgument("tau vertex '" + v + "' lies in the support");
    }
    ground.insert(ground.end(), tau.begin(), tau.end());
    return alexander_dual(k, std::move(ground));
}

SimplicialComplex dual_rel_simplex_via_formula(const SimplicialComplex& k, const Simplex& tau) {
    if (k.is_void()) throw VoidComplex("dual of the void complex");
    const std::vector<Vertex> supp = k.support();
    if (tau.empty()) return alexander_dual(k, supp);
    for (const Vertex& v : tau)
        if (std::binary_search(supp.begin(), supp.end(), v))
            throw InvalidArgument("tau vertex '" + v + "' lies in the support");
    const SimplicialComplex kstar = alexander_dual(k, supp); // void when K = Δ_K
    const SimplicialComplex shell = join(boundary_simplex(tau), full_simplex(supp));
    const SimplicialComplex cone = join(full_simplex(tau), kstar);
    return complex_union(shell, cone);
}

DualTrace iterate_duals(const SimplicialComplex& k, int max_steps) {
    if (k.is_void()) throw VoidComplex("iterated duals of the void complex");
    const int cap = max_steps > 0 ? max_steps : k.support_size() + 2;

    DualTrace trace;
    trace.steps.push_back(k);
    std::map<CanonicalForm, int> seen;
    seen.emplace(canonical_form(k), 0);

    for (;;) {
        const SimplicialComplex& cur = trace.steps.back();
        if (is_boundary_of_simplex(cur)) {
            trace.terminal = BoundarySimplexTerminal{*cur.dim()};
            return trace;
        }
        if (is_full_simplex(cur)) {
            trace.terminal = FullSimplexTerminal{*cur.dim()};
            return trace;
        }
        if (trace.dual_steps() >= cap) {
            trace.terminal = StepCapTerminal{cap};
            return trace;
        }
        SimplicialComplex next = alexander_dual(cur, cur.support());
        auto [it, inserted] = seen.emplace(canonical_form(next),
                                           static_cast<int>(trace.steps.size()));
        if (!inserted) {
            trace.terminal =
                CycleTerminal{it->second, static_cast<int>(trace.steps.size()) - it->second};
            return trace;
        }
        trace.steps.push_back(std::move(next));
    }
}

} // namespace nhtopo
