#ifndef NHTOPO_DUAL_HPP
#define NHTOPO_DUAL_HPP

#include <variant>
#include <vector>

#include "nhtopo/complex.hpp"

namespace nhtopo {

/// How alexander_dual computes its facets. The subset scan walks all of Δ(V)
/// straight off the definition and is kept as the oracle for the minimal
/// non-face route.
enum class DualMethod { MinimalNonfaces, SubsetScan };

/// All inclusion-minimal subsets of V that are not faces of K (V ⊇ support).
/// Every returned set has size ≤ dim(K)+2; vertices of V outside the support
/// show up as singletons. Sorted by (size, labels).
std::vector<Simplex> minimal_nonfaces(const SimplicialComplex& k, std::vector<Vertex> big_v);

/// Alexander dual K^{*_V} relative to V ⊇ support(K): the faces of Δ(V) whose
/// complementary simplex is not in K. Facets are the complements of the
/// minimal non-faces. Result is grounded on V; void exactly when K = Δ(V).
SimplicialComplex alexander_dual(const SimplicialComplex& k, std::vector<Vertex> big_v,
                                 DualMethod method = DualMethod::MinimalNonfaces);

/// K^τ = K^{*_{V_K ∪ V_τ}} for a simplex τ disjoint from the support,
/// computed directly as an extended-ground dual. K^∅ = K^*.
SimplicialComplex dual_rel_simplex(const SimplicialComplex& k, const Simplex& tau);

/// The same complex computed along the ∂τ∗Δ_K + τ∗K^* route; must agree with
/// dual_rel_simplex on every input.
SimplicialComplex dual_rel_simplex_via_formula(const SimplicialComplex& k, const Simplex& tau);

struct FullSimplexTerminal {
    int dim;
    bool operator==(const FullSimplexTerminal&) const = default;
};
struct BoundarySimplexTerminal {
    int dim; // dimension of the terminal complex; -1 for {∅} = ∂Δ⁰
    bool operator==(const BoundarySimplexTerminal&) const = default;
};
struct CycleTerminal {
    int entry;  // index of the first repeated step
    int period; // distance from entry to the repeat
    bool operator==(const CycleTerminal&) const = default;
};
struct StepCapTerminal {
    int cap;
    bool operator==(const StepCapTerminal&) const = default;
};

using TraceTerminal =
    std::variant<FullSimplexTerminal, BoundarySimplexTerminal, CycleTerminal, StepCapTerminal>;

/// The sequence K = K^{*(0)}, K^{*(1)}, ... where each step is dualized
/// relative to its own support, with the reason iteration stopped.
struct DualTrace {
    std::vector<SimplicialComplex> steps;
    TraceTerminal terminal;

    int dual_steps() const { return static_cast<int>(steps.size()) - 1; }
};

/// Runs the iterated-dual sequence until it reaches a full simplex, the
/// boundary of a simplex ({∅} included, read as ∂Δ⁰), revisits a canonical
/// form, or exhausts max_steps. max_steps ≤ 0 selects the default
/// |support(K)| + 2, a safety net only: cycle detection already guarantees
/// termination.
DualTrace iterate_duals(const SimplicialComplex& k, int max_steps = 0);

} // namespace nhtopo

#endif // NHTOPO_DUAL_HPP
