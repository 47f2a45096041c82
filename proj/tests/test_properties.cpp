#include <doctest.h>

#include <random>

#include "nhtopo/census.hpp"
#include "nhtopo/classify.hpp"
#include "nhtopo/homology.hpp"
#include "support/random_complexes.hpp"

// Cross-module laws at moderate sample sizes; the acceptance binary runs the
// same statements at full scale.

using namespace nhtopo;
using nhtopo::testing::random_complex;
using nhtopo::testing::random_tau;

namespace {

std::vector<CensusEntry> census_through(int dmax) {
    std::vector<CensusEntry> all;
    for (int d = 0; d <= dmax; ++d) {
        for (int k = 0; k <= d; ++k) {
            const auto s = census_spheres(d, k);
            all.insert(all.end(), s.begin(), s.end());
        }
        const auto b = census_balls(d);
        all.insert(all.end(), b.begin(), b.end());
    }
    return all;
}

bool verdict_kind_matches(const Verdict& a, const Verdict& b) { return a.index() == b.index(); }

} // namespace

TEST_CASE("classification kind is closed under relative duals") {
    std::mt19937 rng(12001);
    for (const CensusEntry& e : census_through(2)) {
        const Classification base = classify(e.complex);
        for (int trial = 0; trial < 6; ++trial) {
            Simplex tau = random_tau(rng, 3, !is_full_simplex(e.complex));
            if (tau.empty() && is_full_simplex(e.complex)) tau = {"z0"};
            const Classification lifted = classify(dual_rel_simplex(e.complex, tau));
            CHECK(verdict_kind_matches(base.verdict, lifted.verdict));
        }
    }
}

TEST_CASE("links and deletions of census members stay minimal") {
    for (const CensusEntry& e : census_through(2)) {
        for (const auto& level : e.complex.faces_by_dim())
            for (FaceMask face : level)
                CHECK(classify(link(e.complex, e.complex.simplex_of(face))).is_minimal());
        for (const Vertex& v : e.complex.support())
            CHECK(classify(deletion(e.complex, v)).is_minimal());
    }
}

TEST_CASE("census spheres have sphere homology, balls are acyclic") {
    for (const CensusEntry& e : census_through(3)) {
        const HomologyProfile h = reduced_homology(e.complex, Coefficients::integers());
        CHECK(h.torsion.empty());
        for (const auto& [deg, b] : h.betti) {
            const int expected =
                (e.kind == CensusEntry::Kind::Sphere && deg == e.homotopy_dim) ? 1 : 0;
            CHECK(b == expected);
        }
    }
}

TEST_CASE("duality oracle over both fields on census members") {
    for (const CensusEntry& e : census_through(3)) {
        CHECK(check_alexander_duality(e.complex, e.complex.support(), Coefficients::rationals()));
        CHECK(check_alexander_duality(e.complex, e.complex.support(), Coefficients::prime(2)));
    }
}

TEST_CASE("homotopy dimension agrees with the m(K)-2 count on sphere verdicts") {
    std::mt19937 rng(12002);
    int spheres_seen = 0;
    for (int i = 0; i < 300; ++i) {
        const SimplicialComplex k = random_complex(rng, 6);
        const Classification c = classify(k); // classify cross-checks internally
        if (const auto* s = std::get_if<MinimalNHSphere>(&c.verdict)) {
            CHECK(s->homotopy_dim == k.facet_count() - 2);
            ++spheres_seen;
        }
    }
    CHECK(spheres_seen > 3);
}
