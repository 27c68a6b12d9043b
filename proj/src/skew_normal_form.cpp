#include "latframe/skew_normal_form.hpp"

#include "latframe/errors.hpp"

namespace latframe {

Integer order(const SkewMatrix& theta) {
    return lcm_of_denominators(theta.entries());
}

namespace {

// All operations below act congruently: the same elementary transformation
// is applied to the columns and to the rows of the working matrix, and to
// the columns of the accumulated transform, so a = r^t * n * r holds at
// every step. Congruence preserves skew-symmetry, so the diagonal stays 0.
struct Congruence {
    IntMatrix a;
    IntMatrix r;
    std::size_t n;

    explicit Congruence(const IntMatrix& input)
        : a(input), r(IntMatrix::identity(input.rows())), n(input.rows()) {}

    void swap_basis(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(r(k, i), r(k, j));
    }

    // basis[dst] += c * basis[src]
    void add_basis(std::size_t dst, std::size_t src, const Integer& c) {
        if (c == 0) return;
        for (std::size_t k = 0; k < n; ++k) a(k, dst) += c * a(k, src);
        for (std::size_t k = 0; k < n; ++k) a(dst, k) += c * a(src, k);
        for (std::size_t k = 0; k < n; ++k) r(k, dst) += c * r(k, src);
    }

    void negate_basis(std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) a(k, i) = -a(k, i);
        for (std::size_t k = 0; k < n; ++k) a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < n; ++k) r(k, i) = -r(k, i);
    }
};

// Smallest nonzero |a(i,j)| with t <= i < j, ties by (i, j).
struct PivotPick {
    bool found = false;
    std::size_t row = 0;
    std::size_t col = 0;
};

PivotPick find_pivot(const IntMatrix& a, std::size_t t) {
    PivotPick pick;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Integer v = abs(a(i, j));
            if (!pick.found || v < best_abs) {
                pick.found = true;
                pick.row = i;
                pick.col = j;
                best_abs = v;
            }
        }
    }
    return pick;
}

} // namespace

SkewNormalFormResult skew_normal_form(const IntMatrix& n_in) {
    if (!n_in.square()) {
        throw DimensionError("skew normal form of a non-square matrix");
    }
    const std::size_t size = n_in.rows();
    if (size % 2 != 0) {
        throw DimensionError("skew normal form needs even dimension");
    }
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (n_in(i, j) != -n_in(j, i)) {
                throw InvalidInput("matrix is not skew-symmetric");
            }
        }
    }
    if (det(n_in) == 0) {
        throw SingularMatrixError("alternating form is degenerate");
    }

    const std::size_t d = size / 2;
    Congruence c(n_in);

    for (std::size_t t = 0; t + 1 < size; t += 2) {
        while (true) {
            // (i) move the minimal entry to (t, t+1)
            PivotPick pick = find_pivot(c.a, t);
            if (!pick.found) {
                throw SelfCheckFailure("nondegenerate form ran out of pivots");
            }
            if (pick.row != t) c.swap_basis(t, pick.row);
            if (pick.col != t + 1) c.swap_basis(t + 1, pick.col);

            // (ii) reduce rows t and t+1 against the pivot. The two
            // transvections per column are independent because the pivot
            // pair sits on the zero diagonal.
            const Integer p = c.a(t, t + 1);
            bool clean = true;
            for (std::size_t k = t + 2; k < size; ++k) {
                if (c.a(t, k) != 0) {
                    Integer q = c.a(t, k) / p;
                    c.add_basis(k, t + 1, -q);
                    if (c.a(t, k) != 0) clean = false;
                }
                if (c.a(t + 1, k) != 0) {
                    Integer q = c.a(t + 1, k) / p;
                    c.add_basis(k, t, q);
                    if (c.a(t + 1, k) != 0) clean = false;
                }
            }
            if (!clean) continue;  // leftovers are smaller than p; re-pick

            // (iii) p must divide the trailing block, or the offending row
            // is pulled into row t and the pivot hunt restarts
            bool divisible = true;
            for (std::size_t i = t + 2; i < size && divisible; ++i) {
                for (std::size_t j = i + 1; j < size && divisible; ++j) {
                    if (c.a(i, j) % p != 0) {
                        c.add_basis(t, i, 1);
                        divisible = false;
                    }
                }
            }
            if (divisible) break;  // (iv) recurse on the trailing block
        }
    }

    // (vi) pivots positive; the sign flip is absorbed into the transform
    for (std::size_t t = 0; t + 1 < size; t += 2) {
        if (c.a(t, t + 1) < 0) c.negate_basis(t + 1);
    }

    // (v) interleaved pair layout -> [[0,B],[-B,0]] block layout
    SkewNormalFormResult res;
    res.h.reserve(d);
    for (std::size_t i = 0; i < d; ++i) res.h.push_back(c.a(2 * i, 2 * i + 1));
    IntMatrix transform(size, size);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t row = 0; row < size; ++row) {
            transform(row, k) = c.r(row, 2 * k);
            transform(row, d + k) = c.r(row, 2 * k + 1);
        }
    }
    res.transform = transform;

    if (!verify_skew_normal_form(n_in, res)) {
        throw SelfCheckFailure("skew normal form failed its own verification");
    }
    return res;
}

bool verify_skew_normal_form(const IntMatrix& n, const SkewNormalFormResult& res) {
    if (!n.square() || n.rows() % 2 != 0) return false;
    const std::size_t size = n.rows();
    const std::size_t d = size / 2;
    if (res.h.size() != d) return false;
    if (res.transform.rows() != size || res.transform.cols() != size) return false;

    for (std::size_t i = 0; i < d; ++i) {
        if (res.h[i] <= 0) return false;
        if (i + 1 < d && res.h[i + 1] % res.h[i] != 0) return false;
    }
    if (!is_unimodular(res.transform)) return false;

    const IntMatrix got = res.transform.transpose() * n * res.transform;
    IntMatrix want(size, size);
    for (std::size_t i = 0; i < d; ++i) {
        want(i, d + i) = res.h[i];
        want(d + i, i) = -res.h[i];
    }
    return got == want;
}

} // namespace latframe
