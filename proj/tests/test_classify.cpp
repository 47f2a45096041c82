#include <doctest.h>

#include "nhtopo/classify.hpp"

using namespace nhtopo;

namespace {

SimplicialComplex cplx(const std::vector<Simplex>& faces) { return SimplicialComplex::make(faces); }

SimplicialComplex cycle_complex(int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i) {
        Vertex a = "c" + std::to_string(i);
        Vertex b = "c" + std::to_string((i + 1) % n);
        edges.push_back({a, b});
    }
    return SimplicialComplex::make(edges);
}

} // namespace

TEST_CASE("simplices are minimal NH-balls with no dual steps") {
    for (int d : {0, 1, 2, 3, 5}) {
        std::vector<Vertex> verts;
        for (int i = 0; i <= d; ++i) verts.push_back("v" + std::to_string(i));
        const Classification c = classify(full_simplex(verts));
        CHECK(c.verdict == Verdict{MinimalNHBall{d}});
        CHECK(c.steps_to_terminal == 0);
    }
}

TEST_CASE("boundaries of simplices are the homogeneous minimal NH-spheres") {
    for (int d : {0, 1, 2, 4}) {
        std::vector<Vertex> verts;
        for (int i = 0; i <= d + 1; ++i) verts.push_back("v" + std::to_string(i));
        const Classification c = classify(boundary_simplex(verts));
        CHECK(c.verdict == Verdict{MinimalNHSphere{d, d}});
        CHECK(c.steps_to_terminal == 0);
    }
}

TEST_CASE("classification fixtures") {
    CHECK(classify(cplx({{"a", "b"}, {"c"}})).verdict == Verdict{MinimalNHSphere{1, 0}});
    CHECK(classify(cplx({{"a", "b"}, {"b", "c"}})).verdict == Verdict{MinimalNHBall{1}});
    CHECK(classify(cplx({{"a", "b"}, {"c", "d"}})).verdict ==
          Verdict{NotMinimal{0, 2, false}});
    // {∅} is the (-1)-sphere.
    const Classification empty = classify(SimplicialComplex::make_empty());
    CHECK(empty.verdict == Verdict{MinimalNHSphere{-1, -1}});
    CHECK_THROWS_AS(classify(SimplicialComplex::make_void()), VoidComplex);
}

TEST_CASE("non-pure sphere fixtures of dimension 2") {
    const SimplicialComplex a = cplx({{"x", "a", "b"}, {"y", "a", "b"}, {"x", "y"}});
    CHECK(classify(a).verdict == Verdict{MinimalNHSphere{2, 1}});
    const SimplicialComplex b = cplx({{"a", "b", "c"}, {"x", "a"}, {"x", "b"}});
    CHECK(classify(b).verdict == Verdict{MinimalNHSphere{2, 1}});
    const SimplicialComplex c = cplx({{"a", "b", "c"}, {"x", "b"}});
    CHECK(classify(c).verdict == Verdict{MinimalNHBall{2}});
}

TEST_CASE("sphere traces shrink the support at every step") {
    const SimplicialComplex k = cplx({{"a", "b", "c"}, {"x", "a"}, {"x", "b"}});
    const Classification c = classify(k);
    REQUIRE(c.is_sphere());
    CHECK(c.steps_to_terminal < k.support_size());
    for (std::size_t i = 0; i + 1 < c.trace.steps.size(); ++i) {
        CHECK(c.trace.steps[i + 1].support_size() < c.trace.steps[i].support_size());
        CHECK(*c.trace.steps[i + 1].dim() < *c.trace.steps[i].dim());
    }
}

TEST_CASE("padding a non-minimal sphere never becomes minimal") {
    for (int n : {4, 5, 6}) {
        const SimplicialComplex circle = cycle_complex(n);
        const Classification c = classify(vertex_minimal_extension(circle, "u"));
        CHECK_FALSE(c.is_minimal());
    }
}

TEST_CASE("decomposition checks on the stock fixtures") {
    SUBCASE("edge plus point") {
        const DecompositionReport r = verify_decomposition(
            cplx({{"a", "b"}, {"c"}}), cplx({{"a", "b"}}), cplx({{"c"}}));
        CHECK(r.all_passed());
        CHECK(r.used_empty_boundary_convention);
    }
    SUBCASE("triangle boundary split") {
        const DecompositionReport r =
            verify_decomposition(boundary_simplex({"a", "b", "c"}),
                                 cplx({{"a", "b"}, {"a", "c"}}), cplx({{"b", "c"}}));
        CHECK(r.all_passed());
        CHECK_FALSE(r.used_empty_boundary_convention);
    }
    SUBCASE("union mismatch is detected") {
        const DecompositionReport r = verify_decomposition(
            boundary_simplex({"a", "b", "c"}), cplx({{"a", "b"}}), cplx({{"b", "c"}}));
        CHECK_FALSE(r.union_is_s);
        CHECK_FALSE(r.all_passed());
    }
    SUBCASE("non top-generated part is detected") {
        // {a} is a face of S but not a facet of it.
        const DecompositionReport r = verify_decomposition(
            boundary_simplex({"a", "b", "c"}), cplx({{"a"}}), cplx({{"b", "c"}}));
        CHECK_FALSE(r.b_top_generated);
    }
}

TEST_CASE("the three descriptions of a vertex-minimal ball") {
    SUBCASE("a path of two edges is a starred simplex") {
        const BallEquivalenceReport r =
            vertex_minimal_ball_equivalences(cplx({{"a", "b"}, {"b", "c"}}));
        CHECK(r.vertex_minimal);
        CHECK(r.starring_form);
        CHECK(r.starring_tau_dim == 1);
        CHECK(r.sphere_complement);
        CHECK(r.all_agree());
    }
    SUBCASE("the simplex itself") {
        const BallEquivalenceReport r = vertex_minimal_ball_equivalences(full_simplex({"a", "b", "c"}));
        CHECK(r.vertex_minimal);
        CHECK(r.starring_form);
        CHECK(r.starring_tau_dim == 0);
        CHECK(r.sphere_complement);
    }
    SUBCASE("two triangles sharing an edge") {
        const BallEquivalenceReport r =
            vertex_minimal_ball_equivalences(cplx({{"a", "c", "v"}, {"b", "c", "v"}}));
        CHECK(r.vertex_minimal);
        CHECK(r.starring_form);
        CHECK(r.starring_tau_dim == 1);
        CHECK(r.sphere_complement);
    }
    SUBCASE("a path of three edges fails all three") {
        const BallEquivalenceReport r =
            vertex_minimal_ball_equivalences(cplx({{"a", "b"}, {"b", "c"}, {"c", "d"}}));
        CHECK_FALSE(r.vertex_minimal);
        CHECK_FALSE(r.starring_form);
        CHECK_FALSE(r.sphere_complement);
        CHECK(r.all_agree());
    }
    SUBCASE("non-pure input is rejected") {
        CHECK_THROWS_AS(vertex_minimal_ball_equivalences(cplx({{"a", "b"}, {"c"}})), NotPure);
    }
}
