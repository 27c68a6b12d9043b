#include "latframe/matrix.hpp"

namespace latframe {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            if (q.get_den() != 1) {
                throw InvalidInput("matrix entry " + to_string(q) + " is not an integer");
            }
            out(i, j) = q.get_num();
        }
    }
    return out;
}

RatMatrix scale(const RatMatrix& m, const Rational& c) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = c * m(i, j);
    return out;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
    if (m.cols() != v.size()) {
        throw DimensionError("matrix-vector product: dimensions disagree");
    }
    RatVector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

Integer det(const IntMatrix& a) {
    if (!a.square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = a.rows();
    IntMatrix w = a;
    Integer prev = 1;
    int sign = 1;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (w(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == k) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact by the Bareiss identity: the quotient is a minor of a
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    Integer result = w(n - 1, n - 1);
    if (sign < 0) result = -result;
    return result;
}

Rational det(const RatMatrix& a) {
    if (!a.square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = a.rows();
    IntMatrix cleared(n, n);
    Integer denominator_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            row_lcm = lcm(row_lcm, a(i, j).get_den());
        }
        for (std::size_t j = 0; j < n; ++j) {
            // row_lcm / den is exact, so the entry stays integral
            cleared(i, j) = a(i, j).get_num() * (row_lcm / a(i, j).get_den());
        }
        denominator_product *= row_lcm;
    }
    return make_rational(det(cleared), denominator_product);
}

bool is_unimodular(const IntMatrix& r) {
    if (!r.square()) {
        throw DimensionError("unimodularity of a non-square matrix");
    }
    const Integer d = det(r);
    return d == 1 || d == -1;
}

Integer lcm_of_denominators(const RatMatrix& a) {
    Integer m = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = lcm(m, a(i, j).get_den());
    return m;
}

RatMatrix inverse(const RatMatrix& a) {
    if (!a.square()) {
        throw DimensionError("inverse of a non-square matrix");
    }
    const std::size_t n = a.rows();
    RatMatrix w = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w(pivot, k) == 0) ++pivot;
        if (pivot == n) {
            throw SingularMatrixError("matrix is singular");
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(k, j), w(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        const Rational p = w(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            w(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w(i, k) == 0) continue;
            const Rational f = w(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

} // namespace latframe
