#ifndef NHTOPO_HOMOLOGY_HPP
#define NHTOPO_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nhtopo/complex.hpp"

namespace nhtopo {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> entries;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

/// Matrix of ∂_i from i-chains to (i-1)-chains of the augmented chain complex
/// (degree -1 is the empty face), faces ordered by mask, signs from the
/// sorted-vertex orientation. Valid for -1 ≤ i ≤ dim(K).
IntMatrix boundary_matrix(const SimplicialComplex& k, int degree);

/// Non-zero invariant factors d_1 | d_2 | ... of an integer matrix. Exact:
/// runs on checked 64-bit words and escalates to arbitrary precision when a
/// computation would overflow.
std::vector<BigInt> smith_normal_form(const IntMatrix& m);

struct Coefficients {
    enum class Kind { Integers, Rationals, Prime };
    Kind kind = Kind::Integers;
    std::int64_t p = 0; // for Kind::Prime

    static Coefficients integers() { return {Kind::Integers, 0}; }
    static Coefficients rationals() { return {Kind::Rationals, 0}; }
    static Coefficients prime(std::int64_t p) { return {Kind::Prime, p}; }
    bool operator==(const Coefficients&) const = default;
};

/// Reduced Betti numbers per degree (-1 ... dim) and, over the integers, the
/// invariant factors > 1 of each homology group.
struct HomologyProfile {
    std::map<int, int> betti;
    std::map<int, std::vector<BigInt>> torsion;
    Coefficients coeff;

    int betti_at(int degree) const {
        auto it = betti.find(degree);
        return it == betti.end() ? 0 : it->second;
    }
};

HomologyProfile reduced_homology(const SimplicialComplex& k, Coefficients coeff);

/// Verifies betti_i(K^{*_V}) = betti_{n-i-3}(K) for all i, with n = |V|, over
/// the given field (rationals or F_p). K = Δ(V) dualizes to the void complex
/// and passes vacuously.
bool check_alexander_duality(const SimplicialComplex& k, std::vector<Vertex> big_v,
                             Coefficients coeff);

} // namespace nhtopo

#endif // NHTOPO_HOMOLOGY_HPP
