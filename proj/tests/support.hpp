#pragma once

// Shared test helpers: deterministic random lattice corpus and independent
// oracles the implementation is checked against.

#include <cstdint>
#include <random>
#include <vector>

#include "latframe/invariants.hpp"
#include "latframe/lattice.hpp"
#include "latframe/matrix.hpp"

namespace testsupport {

using latframe::Integer;
using latframe::IntMatrix;
using latframe::Lattice;
using latframe::RatMatrix;
using latframe::Rational;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Product of a few elementary row operations on the identity: always det +-1.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int ops = 12, int max_coeff = 3) {
    IntMatrix s = IntMatrix::identity(n);
    const int op_count = rand_int(rng, 1, ops);
    for (int op = 0; op < op_count; ++op) {
        const int kind = rand_int(rng, 0, 9);
        if (kind < 7 && n >= 2) {
            std::size_t i = static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(n) - 1));
            std::size_t j = static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(n) - 1));
            if (i == j) j = (j + 1) % n;
            int c = rand_int(rng, -max_coeff, max_coeff);
            if (c == 0) c = 1;
            for (std::size_t k = 0; k < n; ++k) s(i, k) += Integer(c) * s(j, k);
        } else if (kind < 9 && n >= 2) {
            std::size_t i = static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(n) - 1));
            std::size_t j = static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(n) - 1));
            if (i != j) {
                for (std::size_t k = 0; k < n; ++k) std::swap(s(i, k), s(j, k));
            }
        } else {
            std::size_t i = static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(n) - 1));
            for (std::size_t k = 0; k < n; ++k) s(i, k) = -s(i, k);
        }
    }
    return s;
}

inline RatMatrix random_rational_diagonal(Rng& rng, std::size_t n, int max_num = 5,
                                          int max_den = 6) {
    RatMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        int num = rand_int(rng, -max_num, max_num);
        if (num == 0) num = 1;
        const int den = rand_int(rng, 1, max_den);
        d(i, i) = latframe::make_rational(Integer(num), Integer(den));
    }
    return d;
}

// Random diagonal (denominators <= 6) times a random unimodular matrix.
inline Lattice random_lattice(Rng& rng, std::size_t d) {
    const std::size_t n = 2 * d;
    return Lattice(random_rational_diagonal(rng, n) * latframe::to_rational(random_unimodular(rng, n)));
}

// Corpus for the randomized properties: d cycles through 1, 2, 3.
inline std::vector<Lattice> lattice_corpus(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Lattice> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_lattice(rng, 1 + (i % 3)));
    }
    return out;
}

// Random d=1 lattice with 0 < covol < 1 (rejection sampled).
inline Lattice random_unit_covolume_d1(Rng& rng) {
    for (;;) {
        RatMatrix m(2, 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                m(i, j) = latframe::make_rational(Integer(rand_int(rng, -3, 3)),
                                                  Integer(rand_int(rng, 1, 4)));
            }
        }
        const Rational dm = latframe::det(m);
        if (dm != 0 && abs(dm) < 1) return Lattice(std::move(m));
    }
}

// ---------------------------------------------------------------------------
// Independent elementary-divisor oracle: d_k = gcd of all k x k minors,
// invariant factor s_k = d_k / d_{k-1}. No elimination involved, so it
// shares nothing with the Smith or skew normal form code paths.

inline void minor_gcd_rec(const IntMatrix& m, std::size_t k, std::vector<std::size_t>& rows,
                          std::vector<std::size_t>& cols, std::size_t next_row,
                          std::size_t next_col, bool picking_rows, Integer& acc) {
    if (picking_rows) {
        if (rows.size() == k) {
            minor_gcd_rec(m, k, rows, cols, 0, 0, false, acc);
            return;
        }
        for (std::size_t i = next_row; i < m.rows(); ++i) {
            rows.push_back(i);
            minor_gcd_rec(m, k, rows, cols, i + 1, 0, true, acc);
            rows.pop_back();
        }
        return;
    }
    if (cols.size() == k) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
        acc = gcd(acc, latframe::det(sub));
        return;
    }
    for (std::size_t j = next_col; j < m.cols(); ++j) {
        cols.push_back(j);
        minor_gcd_rec(m, k, rows, cols, 0, j + 1, false, acc);
        cols.pop_back();
    }
}

inline std::vector<Integer> minor_gcd_divisors(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<Integer> divisors;
    Integer prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer acc = 0;
        std::vector<std::size_t> rows, cols;
        minor_gcd_rec(m, k, rows, cols, 0, 0, true, acc);
        acc = abs(acc);
        if (acc == 0 || prev == 0) {
            divisors.push_back(0);
            prev = 0;
        } else {
            divisors.push_back(acc / prev);
            prev = acc;
        }
    }
    return divisors;
}

// ---------------------------------------------------------------------------

// Two invertible matrices generate the same Z-span of columns iff both
// change-of-basis matrices are integral.
inline bool same_column_span(const RatMatrix& a, const RatMatrix& b) {
    const RatMatrix ab = latframe::inverse(a) * b;
    const RatMatrix ba = latframe::inverse(b) * a;
    for (std::size_t i = 0; i < ab.rows(); ++i) {
        for (std::size_t j = 0; j < ab.cols(); ++j) {
            if (ab(i, j).get_den() != 1 || ba(i, j).get_den() != 1) return false;
        }
    }
    return true;
}

inline RatMatrix diagonal_lattice_generator(std::size_t d, int q) {
    RatMatrix m = RatMatrix::identity(2 * d);
    m(2 * d - 1, 2 * d - 1) = latframe::make_rational(1, Integer(q));
    return m;
}

} // namespace testsupport
