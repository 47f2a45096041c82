#include "nhtopo/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nhtopo {

namespace {

// Unwinds the homotopy dimension of steps[0] back from a boundary-of-simplex
// terminal along dim_h(K) = |V_K| - 3 - dim_h(K^*).
int unwind_homotopy_dim(const std::vector<SimplicialComplex>& steps) {
    int h = *steps.back().dim(); // ∂Δ(V) is its own homotopy dimension; {∅} gives -1
    for (auto it = std::next(steps.rbegin()); it != steps.rend(); ++it)
        h = it->support_size() - 3 - h;
    return h;
}

std::vector<Vertex> fresh_labels(const std::string& prefix, int count) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace

Classification classify(const SimplicialComplex& k) {
    if (k.is_void()) throw VoidComplex("classify of the void complex");
    Classification result;
    result.trace = iterate_duals(k);
    result.steps_to_terminal = result.trace.dual_steps();

    const int d = *k.dim();
    if (std::holds_alternative<BoundarySimplexTerminal>(result.trace.terminal)) {
        const int homotopy_dim = k.facet_count() - 2;
        // Cross-check against the Alexander-duality recursion along the trace.
        const int unwound = unwind_homotopy_dim(result.trace.steps);
        if (unwound != homotopy_dim)
            throw std::logic_error("homotopy dimension mismatch: m(K)-2=" +
                                   std::to_string(homotopy_dim) + " vs unwound " +
                                   std::to_string(unwound));
        if (d >= 0 && k.support_size() != d + 2)
            throw std::logic_error("minimal NH-sphere without d+2 vertices");
        result.verdict = MinimalNHSphere{d, homotopy_dim};
    } else if (std::holds_alternative<FullSimplexTerminal>(result.trace.terminal)) {
        if (k.support_size() > d + 2)
            throw std::logic_error("minimal NH-ball with more than d+2 vertices");
        result.verdict = MinimalNHBall{d};
    } else if (const auto* cycle = std::get_if<CycleTerminal>(&result.trace.terminal)) {
        result.verdict = NotMinimal{cycle->entry, cycle->period, false};
    } else {
        result.verdict = NotMinimal{std::nullopt, std::nullopt, true};
    }
    return result;
}

DecompositionReport verify_decomposition(const SimplicialComplex& s, const SimplicialComplex& b,
                                         const SimplicialComplex& l) {
    if (s.is_void() || b.is_void() || l.is_void())
        throw VoidComplex("decomposition parts must be non-void");
    DecompositionReport report;

    const std::vector<Simplex> s_facets = s.facets();
    auto top_generated = [&s_facets](const SimplicialComplex& part) {
        for (const Simplex& f : part.facets())
            if (!std::binary_search(s_facets.begin(), s_facets.end(), f)) return false;
        return true;
    };
    report.b_top_generated = top_generated(b);
    report.l_top_generated = top_generated(l);
    report.union_is_s = same_faces(complex_union(b, l), s);
    report.l_pure = l.is_pure();
    report.l_strongly_connected = is_strongly_connected(l);

    if (report.l_pure) {
        const SimplicialComplex boundary = pure_boundary(l);
        const SimplicialComplex meet = complex_intersection(b, l);
        if (!boundary.is_void() && boundary.support_size() == 0)
            report.used_empty_boundary_convention = true;
        report.boundary_matches = same_faces(meet, boundary);
    }
    return report;
}

BallEquivalenceReport vertex_minimal_ball_equivalences(const SimplicialComplex& b) {
    if (b.is_void()) throw VoidComplex("ball equivalences of the void complex");
    if (!b.is_pure()) throw NotPure("ball equivalences require a pure complex");
    BallEquivalenceReport report;
    const int d = *b.dim();
    const int n = b.support_size();

    report.vertex_minimal = n <= d + 2;

    // (2): search the join splittings ∂τ∗Δ^{d-t}, one candidate per dim τ = t.
    for (int t = 0; t <= d && !report.starring_form; ++t) {
        const SimplicialComplex model =
            join(boundary_simplex(fresh_labels("p", t + 1)),
                 full_simplex(fresh_labels("q", d - t + 1)));
        if (is_isomorphic(b, model)) {
            report.starring_form = true;
            report.starring_tau_dim = t;
        }
    }

    // (3): complete B by complementary facets of a candidate ∂Δ^{d+1}. The
    // candidate lives on support(B) when |V| = d+2 and needs one fresh vertex
    // when B is the full simplex; otherwise no candidate exists.
    std::vector<Vertex> sphere_vertices = b.support();
    bool have_candidate = false;
    if (n == d + 2) {
        have_candidate = true;
    } else if (n == d + 1) {
        Vertex w = "w*";
        while (std::binary_search(sphere_vertices.begin(), sphere_vertices.end(), w)) w += "*";
        sphere_vertices.push_back(std::move(w));
        have_candidate = true;
    }
    if (have_candidate) {
        const SimplicialComplex target = boundary_simplex(sphere_vertices);
        const std::vector<Simplex> b_facets = b.facets();
        std::vector<Simplex> l_faces;
        bool top = true;
        for (const Simplex& f : target.facets())
            if (!std::binary_search(b_facets.begin(), b_facets.end(), f)) l_faces.push_back(f);
        for (const Simplex& f : b_facets)
            if (!target.contains(f)) top = false;
        if (top && !l_faces.empty()) {
            const SimplicialComplex l = SimplicialComplex::make(l_faces);
            report.sphere_complement = same_faces(complex_union(b, l), target);
        }
    }
    return report;
}

} // namespace nhtopo
