#include "latframe/smith.hpp"

namespace latframe {

namespace {

struct PivotPick {
    bool found = false;
    std::size_t row = 0;
    std::size_t col = 0;
};

// smallest nonzero |entry| in the active block, ties by (row, col)
PivotPick find_pivot(const IntMatrix& s, std::size_t t) {
    PivotPick pick;
    Integer best_abs;
    for (std::size_t i = t; i < s.rows(); ++i) {
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Integer a = abs(s(i, j));
            if (!pick.found || a < best_abs) {
                pick.found = true;
                pick.row = i;
                pick.col = j;
                best_abs = a;
            }
        }
    }
    return pick;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += c * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += c * m(i, src);
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& n) {
    if (!n.square()) {
        throw DimensionError("smith normal form of a non-square matrix");
    }
    const std::size_t size = n.rows();
    SmithNormalForm f{IntMatrix::identity(size), n, IntMatrix::identity(size)};
    IntMatrix& s = f.s;
    IntMatrix& u = f.u;
    IntMatrix& v = f.v;

    for (std::size_t t = 0; t < size; ++t) {
        if (!find_pivot(s, t).found) break;  // active block is zero; trailing diagonal stays 0

        while (true) {
            const PivotPick pick = find_pivot(s, t);
            swap_rows(s, t, pick.row);
            swap_rows(u, t, pick.row);
            swap_cols(s, t, pick.col);
            swap_cols(v, t, pick.col);

            // clear column t and row t modulo the pivot (truncated quotients,
            // so survivors are strictly smaller than the pivot)
            bool clean = true;
            for (std::size_t i = t + 1; i < size; ++i) {
                if (s(i, t) == 0) continue;
                Integer q = s(i, t) / s(t, t);
                add_row(s, i, t, -q);
                add_row(u, i, t, -q);
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < size; ++j) {
                if (s(t, j) == 0) continue;
                Integer q = s(t, j) / s(t, t);
                add_col(s, j, t, -q);
                add_col(v, j, t, -q);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // a remainder beats the pivot; re-pick

            // pivot must divide the whole trailing block; if not, pull the
            // offending row up and reduce again
            bool divisible = true;
            for (std::size_t i = t + 1; i < size && divisible; ++i) {
                for (std::size_t j = t + 1; j < size && divisible; ++j) {
                    if (s(i, j) % s(t, t) != 0) {
                        add_row(s, t, i, 1);
                        add_row(u, t, i, 1);
                        divisible = false;
                    }
                }
            }
            if (divisible) break;
        }

        if (s(t, t) < 0) {
            for (std::size_t j = 0; j < size; ++j) {
                s(t, j) = -s(t, j);
                u(t, j) = -u(t, j);
            }
        }
    }
    return f;
}

std::vector<Integer> elementary_divisors(const IntMatrix& n) {
    SmithNormalForm f = smith_normal_form(n);
    std::vector<Integer> d;
    d.reserve(n.rows());
    for (std::size_t i = 0; i < n.rows(); ++i) d.push_back(f.s(i, i));
    return d;
}

} // namespace latframe
