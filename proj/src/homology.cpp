#include "nhtopo/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "nhtopo/dual.hpp"

namespace nhtopo {

namespace {

struct Overflow {};

// int64 with overflow detection; arithmetic escapes to the big-int path.
struct Checked64 {
    std::int64_t v = 0;

    Checked64() = default;
    Checked64(std::int64_t x) : v(x) {}

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
        return {r};
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
        return {r};
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
        return {r};
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (a.v == INT64_MIN && b.v == -1) throw Overflow{};
        return {a.v / b.v};
    }
    friend Checked64 operator%(Checked64 a, Checked64 b) {
        if (a.v == INT64_MIN && b.v == -1) throw Overflow{};
        return {a.v % b.v};
    }
    friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
    friend bool operator<(Checked64 a, Checked64 b) { return a.v < b.v; }
};

Checked64 abs_val(Checked64 a) {
    if (a.v == INT64_MIN) throw Overflow{};
    return {a.v < 0 ? -a.v : a.v};
}
BigInt abs_val(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

template <typename T>
struct Grid {
    int rows = 0, cols = 0;
    std::vector<T> a;
    T& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Diagonalizes by unimodular row/column operations; returns the non-zero
// diagonal entries, already in divisibility order.
template <typename T>
std::vector<T> snf_diagonal(Grid<T> m) {
    const T zero{0};
    std::vector<T> diag;
    int t = 0;
    while (t < m.rows && t < m.cols) {
        // Locate the non-zero entry of least magnitude in the submatrix.
        int pr = -1, pc = -1;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c)
                if (!(m.at(r, c) == zero) &&
                    (pr < 0 || abs_val(m.at(r, c)) < abs_val(m.at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

        bool dirty = false;
        for (int r = t + 1; r < m.rows; ++r) {
            if (m.at(r, t) == zero) continue;
            const T q = m.at(r, t) / m.at(t, t);
            for (int c = t; c < m.cols; ++c) m.at(r, c) = m.at(r, c) - q * m.at(t, c);
            if (!(m.at(r, t) == zero)) dirty = true; // remainder survives, pick again
        }
        for (int c = t + 1; c < m.cols; ++c) {
            if (m.at(t, c) == zero) continue;
            const T q = m.at(t, c) / m.at(t, t);
            for (int r = t; r < m.rows; ++r) m.at(r, c) = m.at(r, c) - q * m.at(r, t);
            if (!(m.at(t, c) == zero)) dirty = true;
        }
        if (dirty) continue;

        // Enforce d_t | everything below-right before advancing.
        bool divides_all = true;
        for (int r = t + 1; r < m.rows && divides_all; ++r)
            for (int c = t + 1; c < m.cols && divides_all; ++c)
                if (!(m.at(r, c) % m.at(t, t) == zero)) {
                    for (int cc = t; cc < m.cols; ++cc)
                        m.at(t, cc) = m.at(t, cc) + m.at(r, cc);
                    divides_all = false;
                }
        if (!divides_all) continue;

        diag.push_back(abs_val(m.at(t, t)));
        ++t;
    }
    return diag;
}

std::vector<BigInt> snf_bigint(const IntMatrix& m) {
    Grid<BigInt> g;
    g.rows = m.rows;
    g.cols = m.cols;
    g.a.assign(m.entries.begin(), m.entries.end());
    return snf_diagonal(std::move(g));
}

} // namespace

std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
    try {
        Grid<Checked64> g;
        g.rows = m.rows;
        g.cols = m.cols;
        g.a.reserve(m.entries.size());
        for (std::int64_t x : m.entries) g.a.push_back(Checked64{x});
        std::vector<Checked64> diag = snf_diagonal(std::move(g));
        std::vector<BigInt> out;
        out.reserve(diag.size());
        for (Checked64 d : diag) out.emplace_back(d.v);
        return out;
    } catch (const Overflow&) {
        return snf_bigint(m);
    }
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int degree) {
    if (k.is_void()) throw VoidComplex("boundary matrix of the void complex");
    const int d = *k.dim();
    if (degree < -1 || degree > d)
        throw InvalidArgument("boundary degree " + std::to_string(degree) + " out of range");
    const auto faces = k.faces_by_dim();
    const auto& domain = faces[static_cast<std::size_t>(degree + 1)];
    if (degree == -1) return IntMatrix(0, static_cast<int>(domain.size()));

    const auto& range = faces[static_cast<std::size_t>(degree)];
    std::unordered_map<FaceMask, int> row_of;
    for (int r = 0; r < static_cast<int>(range.size()); ++r)
        row_of.emplace(range[static_cast<std::size_t>(r)], r);

    IntMatrix m(static_cast<int>(range.size()), static_cast<int>(domain.size()));
    for (int c = 0; c < static_cast<int>(domain.size()); ++c) {
        FaceMask face = domain[static_cast<std::size_t>(c)];
        int j = 0;
        FaceMask rest = face;
        while (rest) {
            const FaceMask bit = rest & (~rest + 1);
            rest ^= bit;
            m.at(row_of.at(face ^ bit), c) = (j % 2 == 0) ? 1 : -1;
            ++j;
        }
    }
    return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& k, Coefficients coeff) {
    if (k.is_void()) throw VoidComplex("homology of the void complex");
    if (coeff.kind == Coefficients::Kind::Prime && coeff.p < 2)
        throw InvalidArgument("field characteristic must be a prime ≥ 2");
    const int d = *k.dim();
    const auto faces = k.faces_by_dim();

    // Invariant factors of each ∂_i; a single integer SNF serves every
    // coefficient choice (rank over F_p discards factors divisible by p).
    std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(d + 2));
    for (int i = 0; i <= d; ++i)
        factors[static_cast<std::size_t>(i + 1)] = smith_normal_form(boundary_matrix(k, i));

    auto rank_of = [&](int i) -> int {
        if (i < 0 || i > d) return 0;
        const auto& f = factors[static_cast<std::size_t>(i + 1)];
        if (coeff.kind != Coefficients::Kind::Prime) return static_cast<int>(f.size());
        int r = 0;
        for (const BigInt& x : f)
            if (x % coeff.p != 0) ++r;
        return r;
    };

    HomologyProfile profile;
    profile.coeff = coeff;
    for (int i = -1; i <= d; ++i) {
        const int chains = static_cast<int>(faces[static_cast<std::size_t>(i + 1)].size());
        profile.betti[i] = chains - rank_of(i) - rank_of(i + 1);
        if (coeff.kind == Coefficients::Kind::Integers && i < d) {
            std::vector<BigInt> tor;
            for (const BigInt& x : factors[static_cast<std::size_t>(i + 2)])
                if (x > 1) tor.push_back(x);
            if (!tor.empty()) profile.torsion[i] = std::move(tor);
        }
    }
    return profile;
}

bool check_alexander_duality(const SimplicialComplex& k, std::vector<Vertex> big_v,
                             Coefficients coeff) {
    if (coeff.kind == Coefficients::Kind::Integers)
        throw InvalidArgument("duality check needs field coefficients");
    if (k.is_void()) throw VoidComplex("duality check of the void complex");
    const SimplicialComplex kv = k.with_ground(std::move(big_v));
    const int n = static_cast<int>(kv.ground().size());
    if (is_full_simplex(kv) && kv.support_size() == n) return true; // dual is void

    const SimplicialComplex dual = alexander_dual(kv, kv.ground());
    const HomologyProfile dual_h = reduced_homology(dual, coeff);
    const HomologyProfile k_h = reduced_homology(kv, coeff);
    for (int i = -1; i <= n; ++i)
        if (dual_h.betti_at(i) != k_h.betti_at(n - i - 3)) return false;
    return true;
}

} // namespace nhtopo
