#pragma once

#include "lefschetz/matrix.hpp"
#include "lefschetz/subspace.hpp"

#include <random>
#include <vector>

namespace testing_support {

using lefschetz::Matrix;
using lefschetz::Rational;
using lefschetz::Vector;

inline Rational small_rational(std::mt19937& rng, int range = 3) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    return Rational(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range = 3) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = small_rational(rng, range);
            m(i, j).canonicalize();
        }
    return m;
}

// Rank at most `rank`, equal to it for generic draws.
inline Matrix random_rank_matrix(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t rank) {
    return random_matrix(rng, r, rank) * random_matrix(rng, rank, c);
}

// Random invertible matrix as a product of elementary row operations.
inline Matrix random_invertible(std::mt19937& rng, std::size_t n, int steps = 0) {
    Matrix m = Matrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    if (steps == 0) steps = static_cast<int>(3 * n);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        Rational k(coef(rng));
        for (std::size_t j = 0; j < n; ++j) m(a, j) += k * m(b, j);
    }
    return m;
}

// Nilpotent matrix in Jordan form with blocks of the given sizes (each
// block maps basis vector i+1 to i).
inline Matrix jordan_nilpotent(const std::vector<int>& blocks) {
    std::size_t n = 0;
    for (int b : blocks) n += static_cast<std::size_t>(b);
    Matrix m(n, n);
    std::size_t off = 0;
    for (int b : blocks) {
        for (int i = 0; i + 1 < b; ++i) m(off + i, off + i + 1) = 1;
        off += static_cast<std::size_t>(b);
    }
    return m;
}

inline std::vector<int> random_partition(std::mt19937& rng, int n) {
    std::vector<int> parts;
    while (n > 0) {
        std::uniform_int_distribution<int> d(1, n);
        int p = d(rng);
        parts.push_back(p);
        n -= p;
    }
    return parts;
}

// dim Gr_k of the weight filtration centered at c: a Jordan string of
// length l contributes one dimension to each of c-(l-1), c-(l-3), ..., c+(l-1).
inline std::vector<std::size_t> graded_dims_from_jordan(const std::vector<int>& blocks, int c) {
    std::vector<std::size_t> dims(static_cast<std::size_t>(2 * c + 1), 0);
    for (int l : blocks)
        for (int i = 0; i < l; ++i) dims[static_cast<std::size_t>(c - (l - 1) + 2 * i)] += 1;
    return dims;
}

inline long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace testing_support
