#ifndef NHTOPO_CENSUS_HPP
#define NHTOPO_CENSUS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nhtopo/complex.hpp"

namespace nhtopo {

struct CensusEntry {
    enum class Kind { Sphere, Ball };

    SimplicialComplex complex; // canonical labels
    Kind kind = Kind::Sphere;
    int dim = 0;
    int homotopy_dim = 0;     // spheres only
    std::string construction; // which base object and dual step produced it
};

/// All minimal NH-spheres of dimension d and homotopy dimension k, one per
/// isomorphism class, built by the recursive dual bijection: the base case
/// k = d is ∂Δ^{d+1}, and for k < d every entry is S̃^τ for a sphere S̃ of
/// dimension j and homotopy dimension d-k-1 (d-k-1 ≤ j ≤ d-1) and a fresh
/// simplex τ on d-j vertices. There are C(d,k) of them.
std::vector<CensusEntry> census_spheres(int d, int k);

/// All minimal NH-balls of dimension d up to isomorphism: Δ^d plus B̃^τ over
/// the balls B̃ of dimension i < d, with τ sized so the dual has dimension d
/// (d+2 minus the vertex count of B̃). There are 2^d of them.
std::vector<CensusEntry> census_balls(int d);

/// Isomorph-free brute force over every complex with support of size up to
/// n_max: each one is classified and the minimal NH-spheres and NH-balls are
/// binned by (d, k) and d respectively, as canonical complexes. The oracle
/// for the recursive census. n_max ≤ 6.
struct BruteForceCensus {
    std::map<std::pair<int, int>, std::vector<SimplicialComplex>> spheres; // (d, k)
    std::map<int, std::vector<SimplicialComplex>> balls;                   // d
    long long classes_examined = 0;
};

BruteForceCensus brute_force_census(int n_max);

} // namespace nhtopo

#endif // NHTOPO_CENSUS_HPP
