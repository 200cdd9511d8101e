#pragma once

#include "locsys/algebra.hpp"
#include "locsys/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace locsys::testing {

using Rng = std::mt19937_64;

inline long small_int(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Scalar random_scalar(Rng& rng, const Field& f) {
    if (f.is_rationals()) {
        Scalar s(small_int(rng, -5, 5), small_int(rng, 1, 3));
        s.canonicalize();
        return s;
    }
    return f.from_int(static_cast<long long>(rng() % f.characteristic()));
}

/// Random matrix whose entries are zero with probability `zero_percent`.
inline Mat random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols, unsigned zero_percent = 40) {
    Mat m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 100 >= zero_percent) m.set(r, c, random_scalar(rng, f));
    return m;
}

inline Vec random_vector(Rng& rng, const Field& f, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = random_scalar(rng, f);
    return v;
}

inline Subspace random_subspace(Rng& rng, const Field& f, std::size_t n, std::size_t gens) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < gens; ++i) vs.push_back(random_vector(rng, f, n));
    return Subspace::span(f, n, vs);
}

inline Mat random_invertible(Rng& rng, const Field& f, std::size_t n) {
    while (true) {
        Mat m = random_matrix(rng, f, n, n, 30);
        if (rank(m) == n) return m;
    }
}

/// Integer matrix of determinant +-1: a random permutation followed by
/// elementary row operations with small multipliers. Keeps the rebased
/// structure constants integral over Q.
inline Mat random_unimodular(Rng& rng, const Field& f, std::size_t n, std::size_t ops = 0) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vector(n, perm[i]));
    if (ops == 0) ops = 3 * n;
    for (std::size_t t = 0; t < ops && n > 1; ++t) {
        std::size_t i = rng() % n, j = rng() % (n - 1);
        if (j >= i) ++j;
        const Scalar c = f.from_int(small_int(rng, -2, 2));
        for (std::size_t k = 0; k < n; ++k) rows[i][k] = f.add(rows[i][k], f.mul(c, rows[j][k]));
    }
    return Mat::from_rows(f, n, rows);
}

/// Block upper triangular matrix algebra: full matrix blocks on the diagonal
/// (sizes 1..4) and a transitively closed set of full off-diagonal blocks,
/// optionally plus a null summand. The radical is the span of the
/// off-diagonal cells and of the null summand.
struct PatternAlgebra {
    Algebra algebra;
    Subspace radical;
    std::vector<std::size_t> blocks;
};

inline PatternAlgebra random_pattern(Rng& rng, const Field& f, std::size_t max_dim = 30) {
    while (true) {
        std::vector<std::size_t> blocks;
        const std::size_t count = 1 + rng() % 4;
        for (std::size_t b = 0; b < count; ++b) blocks.push_back(1 + rng() % 4);
        std::set<std::pair<std::size_t, std::size_t>> upper;
        for (std::size_t s = 0; s < count; ++s)
            for (std::size_t t = s + 1; t < count; ++t)
                if (rng() % 2) upper.insert({s, t});
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [s, t] : upper)
                for (auto [t2, u] : upper)
                    if (t == t2 && upper.insert({s, u}).second) changed = true;
        }
        std::vector<std::size_t> offset(count, 0);
        for (std::size_t b = 1; b < count; ++b) offset[b] = offset[b - 1] + blocks[b - 1];
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        std::vector<bool> strict;
        auto add_block = [&](std::size_t s, std::size_t t) {
            for (std::size_t i = 0; i < blocks[s]; ++i)
                for (std::size_t j = 0; j < blocks[t]; ++j) {
                    cells.emplace_back(offset[s] + i, offset[t] + j);
                    strict.push_back(s != t);
                }
        };
        for (std::size_t s = 0; s < count; ++s) add_block(s, s);
        for (auto [s, t] : upper) add_block(s, t);
        const std::size_t null_dim = rng() % 3 == 0 ? 1 + rng() % 2 : 0;
        const std::size_t dim = cells.size() + null_dim;
        if (dim > max_dim) continue;
        std::vector<StructureConstant> sc;
        for (std::size_t x = 0; x < cells.size(); ++x)
            for (std::size_t y = 0; y < cells.size(); ++y) {
                if (cells[x].second != cells[y].first) continue;
                for (std::size_t z = 0; z < cells.size(); ++z)
                    if (cells[z] == std::make_pair(cells[x].first, cells[y].second)) sc.push_back({x, y, z, Scalar(1)});
            }
        std::vector<Vec> rad;
        for (std::size_t x = 0; x < cells.size(); ++x)
            if (strict[x]) rad.push_back(unit_vector(dim, x));
        for (std::size_t x = cells.size(); x < dim; ++x) rad.push_back(unit_vector(dim, x));
        return {Algebra(f, dim, sc, "pattern"), Subspace::span(f, dim, rad), blocks};
    }
}

/// The same algebra and radical in the basis given by the rows of p.
inline PatternAlgebra rebased(const PatternAlgebra& pa, const Mat& p) {
    Mat inv = *inverse(p);
    const Field& f = pa.algebra.field();
    std::vector<Vec> rows;
    for (const Vec& v : pa.radical.basis()) rows.push_back((Mat::from_rows(f, v.size(), {v}) * inv).row_vectors()[0]);
    return {change_basis(pa.algebra, p, "rebased"), Subspace::span(f, pa.algebra.dim(), rows), pa.blocks};
}

/// Prime above the given dimension, cycling through a few sizes.
inline Field prime_field_above(std::size_t dim, std::size_t pick) {
    const std::uint64_t primes[] = {31, 101, 65521, 2147483647};
    for (std::size_t i = 0; i < 4; ++i) {
        std::uint64_t p = primes[(pick + i) % 4];
        if (p > dim) return Field::prime(p);
    }
    return Field::prime(2147483647);
}

} // namespace locsys::testing
