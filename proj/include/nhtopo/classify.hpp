#ifndef NHTOPO_CLASSIFY_HPP
#define NHTOPO_CLASSIFY_HPP

#include <optional>
#include <variant>

#include "nhtopo/dual.hpp"

namespace nhtopo {

struct MinimalNHSphere {
    int dim;
    int homotopy_dim;
    bool operator==(const MinimalNHSphere&) const = default;
};
struct MinimalNHBall {
    int dim;
    bool operator==(const MinimalNHBall&) const = default;
};
struct NotMinimal {
    std::optional<int> cycle_entry;
    std::optional<int> cycle_period;
    bool step_capped = false;
    bool operator==(const NotMinimal&) const = default;
};

using Verdict = std::variant<MinimalNHSphere, MinimalNHBall, NotMinimal>;

struct Classification {
    Verdict verdict;
    DualTrace trace;
    int steps_to_terminal = 0;

    bool is_sphere() const { return std::holds_alternative<MinimalNHSphere>(verdict); }
    bool is_ball() const { return std::holds_alternative<MinimalNHBall>(verdict); }
    bool is_minimal() const { return !std::holds_alternative<NotMinimal>(verdict); }
};

/**
 * Decides whether K is a minimal NH-sphere, a minimal NH-ball, or neither,
 * by running its iterated Alexander duals to a terminal form. A boundary-of-
 * simplex terminal means a sphere of dimension dim(K) and homotopy dimension
 * m(K)-2; a full-simplex terminal means a ball of dimension dim(K); a cycle
 * or step cap means the complex is not minimal (nothing further is decided
 * about it). {∅} classifies as the (-1)-sphere.
 */
Classification classify(const SimplicialComplex& k);

/// Necessary-condition checks for a decomposition S = B + L. Does not certify
/// that L is a combinatorial ball or B an NH-ball.
struct DecompositionReport {
    bool b_top_generated = false;
    bool l_top_generated = false;
    bool union_is_s = false;
    bool l_pure = false;
    bool l_strongly_connected = false;
    bool boundary_matches = false; // B ∩ L = ∂L
    // Set when ∂L = {∅} (L a single vertex); the checker accepts the reading
    // where a disjoint B meets L in {∅}.
    bool used_empty_boundary_convention = false;

    bool all_passed() const {
        return b_top_generated && l_top_generated && union_is_s && l_pure &&
               l_strongly_connected && boundary_matches;
    }
};

DecompositionReport verify_decomposition(const SimplicialComplex& s, const SimplicialComplex& b,
                                         const SimplicialComplex& l);

/// The three equivalent descriptions of a vertex-minimal combinatorial
/// d-ball, checked independently on a pure complex: (1) at most d+2 vertices;
/// (2) isomorphic to ∂τ∗Δ^{d-dim τ} for some face τ (dim τ = 0 giving Δ^d
/// itself); (3) a complementary top-generated L closes B up to ∂Δ^{d+1}.
/// They agree exactly on combinatorial balls.
struct BallEquivalenceReport {
    bool vertex_minimal = false;
    bool starring_form = false;
    std::optional<int> starring_tau_dim; // witness dim(τ) when (2) holds
    bool sphere_complement = false;

    bool all_agree() const {
        return vertex_minimal == starring_form && starring_form == sphere_complement;
    }
};

BallEquivalenceReport vertex_minimal_ball_equivalences(const SimplicialComplex& b);

} // namespace nhtopo

#endif // NHTOPO_CLASSIFY_HPP
