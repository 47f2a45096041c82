#include "nhtopo/census.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <unordered_set>

#include "nhtopo/classify.hpp"
#include "nhtopo/dual.hpp"

namespace nhtopo {

namespace {

Simplex fresh_tau(int count) {
    Simplex tau;
    tau.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) tau.push_back("t" + std::to_string(i));
    return tau;
}

std::vector<Vertex> numbered(int count) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::string lab = "v";
        if (i < 10) lab += '0';
        lab += std::to_string(i);
        out.push_back(std::move(lab));
    }
    return out;
}

// Dedup-and-append helper: entries are stored canonically, one per iso class,
// sorted by canonical form on take().
struct CanonicalCollector {
    std::map<CanonicalForm, CensusEntry> by_form;

    void add(const SimplicialComplex& k, CensusEntry::Kind kind, int d, int hd,
             std::string construction) {
        CanonicalForm form = canonical_form(k);
        if (by_form.count(form)) return;
        CensusEntry e;
        e.complex = form.to_complex();
        e.kind = kind;
        e.dim = d;
        e.homotopy_dim = hd;
        e.construction = std::move(construction);
        by_form.emplace(std::move(form), std::move(e));
    }

    std::vector<CensusEntry> take() {
        std::vector<CensusEntry> out;
        out.reserve(by_form.size());
        for (auto& [form, entry] : by_form) out.push_back(std::move(entry));
        return out;
    }
};

std::mutex census_mutex;

} // namespace

std::vector<CensusEntry> census_spheres(int d, int k) {
    if (k < 0 || d < 0 || k > d)
        throw InvalidArgument("census_spheres requires 0 ≤ k ≤ d");
    std::lock_guard<std::mutex> lock(census_mutex);

    static std::map<std::pair<int, int>, std::vector<CensusEntry>> memo;
    auto rec = [](auto&& self, int dd, int kk) -> const std::vector<CensusEntry>& {
        auto it = memo.find({dd, kk});
        if (it != memo.end()) return it->second;

        CanonicalCollector out;
        if (kk == dd) {
            out.add(boundary_simplex(numbered(dd + 2)), CensusEntry::Kind::Sphere, dd, kk,
                    "boundary of the " + std::to_string(dd + 1) + "-simplex");
        } else {
            const int h = dd - kk - 1;
            for (int j = h; j <= dd - 1; ++j) {
                for (const CensusEntry& base : self(self, j, h)) {
                    const Simplex tau = fresh_tau(dd - j);
                    SimplicialComplex lifted = dual_rel_simplex(base.complex, tau);
                    out.add(lifted, CensusEntry::Kind::Sphere, dd, kk,
                            "dual of sphere(d=" + std::to_string(j) + ",k=" + std::to_string(h) +
                                ") rel tau of " + std::to_string(dd - j) + " vertices");
                }
            }
        }
        return memo.emplace(std::make_pair(dd, kk), out.take()).first->second;
    };
    return rec(rec, d, k);
}

std::vector<CensusEntry> census_balls(int d) {
    if (d < 0) throw InvalidArgument("census_balls requires d ≥ 0");
    std::lock_guard<std::mutex> lock(census_mutex);

    static std::map<int, std::vector<CensusEntry>> memo;
    auto rec = [](auto&& self, int dd) -> const std::vector<CensusEntry>& {
        auto it = memo.find(dd);
        if (it != memo.end()) return it->second;

        CanonicalCollector out;
        out.add(full_simplex(numbered(dd + 1)), CensusEntry::Kind::Ball, dd, 0,
                "the " + std::to_string(dd) + "-simplex");
        for (int i = 0; i <= dd - 1; ++i) {
            for (const CensusEntry& base : self(self, i)) {
                // τ sized so that ∂τ∗Δ_{B̃} has dimension dd: d+2 vertices in
                // total, whether B̃ is the simplex (i+1 vertices) or not (i+2).
                const int tau_size = dd + 2 - base.complex.support_size();
                const Simplex tau = fresh_tau(tau_size);
                SimplicialComplex lifted = dual_rel_simplex(base.complex, tau);
                out.add(lifted, CensusEntry::Kind::Ball, dd, 0,
                        "dual of ball(d=" + std::to_string(i) + ") rel tau of " +
                            std::to_string(tau_size) + " vertices");
            }
        }
        return memo.emplace(dd, out.take()).first->second;
    };
    return rec(rec, d);
}

namespace {

// Depth-first generation of facet antichains over [n] in increasing mask
// order. The least facet of any complex can be relabeled to a prefix
// {0,...,s-1}, so the first mask is pinned to that shape; full isomorph
// rejection happens at collection time via canonical forms.
struct AntichainEnumerator {
    int n = 0;
    FaceMask all = 0;
    std::vector<FaceMask> current;
    std::unordered_set<std::string> seen;
    std::vector<SimplicialComplex> classes;

    void collect_if_covering() {
        FaceMask support = 0;
        for (FaceMask m : current) support |= m;
        if (support != all) return;
        SimplicialComplex k = SimplicialComplex::from_facet_masks(numbered(n), current);
        CanonicalForm form = canonical_form(k);
        if (seen.insert(form.key()).second) classes.push_back(form.to_complex());
    }

    void extend(FaceMask last) {
        collect_if_covering();
        for (FaceMask m = last + 1; m <= all; ++m) {
            bool comparable = false;
            for (FaceMask f : current)
                if ((f & m) == f || (f & m) == m) {
                    comparable = true;
                    break;
                }
            if (comparable) continue;
            current.push_back(m);
            extend(m);
            current.pop_back();
        }
    }

    void run() {
        if (n == 0) return;
        all = ~FaceMask{0} >> (64 - n);
        for (int s = 1; s <= n; ++s) {
            const FaceMask first = (FaceMask{1} << s) - 1;
            current = {first};
            extend(first);
        }
    }
};

} // namespace

BruteForceCensus brute_force_census(int n_max) {
    if (n_max < 0) throw InvalidArgument("n_max must be non-negative");
    if (n_max > 6) throw ResourceCap("brute-force census capped at 6 vertices");

    BruteForceCensus census;
    std::vector<SimplicialComplex> classes;
    classes.push_back(SimplicialComplex::make_empty()); // the only support-0 complex
    for (int n = 1; n <= n_max; ++n) {
        AntichainEnumerator gen;
        gen.n = n;
        gen.run();
        classes.insert(classes.end(), gen.classes.begin(), gen.classes.end());
    }

    census.classes_examined = static_cast<long long>(classes.size());
    for (const SimplicialComplex& k : classes) {
        const Classification c = classify(k);
        if (const auto* sphere = std::get_if<MinimalNHSphere>(&c.verdict)) {
            census.spheres[{sphere->dim, sphere->homotopy_dim}].push_back(k);
        } else if (const auto* ball = std::get_if<MinimalNHBall>(&c.verdict)) {
            census.balls[ball->dim].push_back(k);
        }
    }
    return census;
}

} // namespace nhtopo
