#include <doctest.h>

#include <set>

#include "nhtopo/census.hpp"
#include "nhtopo/classify.hpp"
#include "nhtopo/dual.hpp"

using namespace nhtopo;

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::set<std::string> keys_of(const std::vector<CensusEntry>& entries) {
    std::set<std::string> keys;
    for (const CensusEntry& e : entries) keys.insert(canonical_form(e.complex).key());
    return keys;
}

std::set<std::string> keys_of(const std::vector<SimplicialComplex>& complexes) {
    std::set<std::string> keys;
    for (const SimplicialComplex& k : complexes) keys.insert(canonical_form(k).key());
    return keys;
}

} // namespace

TEST_CASE("sphere census counts follow the binomial pattern") {
    for (int d = 0; d <= 4; ++d) {
        long long total = 0;
        for (int k = 0; k <= d; ++k) {
            const auto entries = census_spheres(d, k);
            CHECK(static_cast<long long>(entries.size()) == binomial(d, k));
            total += static_cast<long long>(entries.size());
        }
        CHECK(total == (1LL << d));
    }
    CHECK_THROWS_AS(census_spheres(2, 3), InvalidArgument);
    CHECK_THROWS_AS(census_spheres(-1, 0), InvalidArgument);
}

TEST_CASE("ball census counts double with the dimension") {
    for (int d = 0; d <= 4; ++d)
        CHECK(static_cast<long long>(census_balls(d).size()) == (1LL << d));
    CHECK_THROWS_AS(census_balls(-2), InvalidArgument);
}

TEST_CASE("small censuses match the known complexes") {
    const auto s10 = census_spheres(1, 0);
    REQUIRE(s10.size() == 1);
    CHECK(is_isomorphic(s10[0].complex, SimplicialComplex::make({{"a", "b"}, {"c"}})));

    for (int d = 0; d <= 3; ++d) {
        const auto sdd = census_spheres(d, d);
        REQUIRE(sdd.size() == 1);
        std::vector<Vertex> verts;
        for (int i = 0; i <= d + 1; ++i) verts.push_back("v" + std::to_string(i));
        CHECK(is_isomorphic(sdd[0].complex, boundary_simplex(verts)));
    }

    const auto b1 = census_balls(1);
    REQUIRE(b1.size() == 2);
    CHECK(keys_of(b1) ==
          keys_of({full_simplex({"a", "b"}), SimplicialComplex::make({{"a", "b"}, {"b", "c"}})}));

    CHECK(census_spheres(2, 1).size() == 2);
}

TEST_CASE("census entries are pairwise non-isomorphic and classify back") {
    for (int d = 0; d <= 4; ++d) {
        for (int k = 0; k <= d; ++k) {
            const auto entries = census_spheres(d, k);
            CHECK(keys_of(entries).size() == entries.size());
            for (const CensusEntry& e : entries) {
                const Classification c = classify(e.complex);
                CHECK(c.verdict == Verdict{MinimalNHSphere{d, k}});
                CHECK(c.steps_to_terminal < e.complex.support_size());
                CHECK(e.complex.support_size() == d + 2);
                CHECK(e.complex.facet_count() == k + 2);
            }
        }
        const auto balls = census_balls(d);
        CHECK(keys_of(balls).size() == balls.size());
        for (const CensusEntry& e : balls) {
            CHECK(classify(e.complex).verdict == Verdict{MinimalNHBall{d}});
            CHECK(e.complex.support_size() <= d + 2);
        }
    }
}

TEST_CASE("duals of distinct census spheres stay distinct") {
    for (int d = 1; d <= 4; ++d)
        for (int k = 0; k <= d; ++k) {
            const auto entries = census_spheres(d, k);
            std::set<std::string> dual_keys;
            for (const CensusEntry& e : entries)
                dual_keys.insert(
                    canonical_form(alexander_dual(e.complex, e.complex.support())).key());
            CHECK(dual_keys.size() == entries.size());
        }
}

TEST_CASE("nerve law and strong connectivity on census entries") {
    for (int d = 0; d <= 3; ++d) {
        for (int k = 0; k <= d; ++k)
            for (const CensusEntry& e : census_spheres(d, k)) {
                std::vector<Vertex> verts;
                for (int i = 0; i <= k + 1; ++i) verts.push_back("v" + std::to_string(i));
                CHECK(is_isomorphic(nerve(e.complex), boundary_simplex(verts)));
                if (k >= 1) CHECK(is_strongly_connected(e.complex));
            }
        for (const CensusEntry& e : census_balls(d))
            CHECK(is_full_simplex(nerve(e.complex)));
    }
}

TEST_CASE("brute force census at three vertices") {
    const BruteForceCensus bf = brute_force_census(3);
    // Spheres: ∂Δ¹, the edge-plus-point sphere, ∂Δ², and {∅}.
    CHECK(keys_of(bf.spheres.at({0, 0})) == keys_of({boundary_simplex({"a", "b"})}));
    CHECK(keys_of(bf.spheres.at({1, 0})) ==
          keys_of({SimplicialComplex::make({{"a", "b"}, {"c"}})}));
    CHECK(keys_of(bf.spheres.at({1, 1})) == keys_of({boundary_simplex({"a", "b", "c"})}));
    CHECK(keys_of(bf.spheres.at({-1, -1})) == keys_of({SimplicialComplex::make_empty()}));
    // Balls: Δ⁰, Δ¹, Δ², and the path.
    CHECK(keys_of(bf.balls.at(0)) == keys_of({full_simplex({"a"})}));
    CHECK(keys_of(bf.balls.at(1)) ==
          keys_of({full_simplex({"a", "b"}), SimplicialComplex::make({{"a", "b"}, {"b", "c"}})}));
    CHECK(keys_of(bf.balls.at(2)) == keys_of({full_simplex({"a", "b", "c"})}));
    CHECK(bf.spheres.size() == 4);
    CHECK(bf.balls.size() == 3);
    CHECK_THROWS_AS(brute_force_census(7), ResourceCap);
}

TEST_CASE("brute force and recursive census agree through four vertices") {
    const BruteForceCensus bf = brute_force_census(4);
    for (int d = 0; d <= 2; ++d) {
        for (int k = 0; k <= d; ++k) {
            const auto recursive = keys_of(census_spheres(d, k));
            const auto it = bf.spheres.find({d, k});
            if (recursive.empty()) {
                CHECK(it == bf.spheres.end());
            } else {
                REQUIRE(it != bf.spheres.end());
                CHECK(keys_of(it->second) == recursive);
            }
        }
        const auto it = bf.balls.find(d);
        REQUIRE(it != bf.balls.end());
        CHECK(keys_of(it->second) == keys_of(census_balls(d)));
    }
}
