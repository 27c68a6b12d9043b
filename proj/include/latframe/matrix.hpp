#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "latframe/errors.hpp"
#include "latframe/exact.hpp"

namespace latframe {

// Dense exact matrix, row-major. Dimensions are fixed at construction and
// must be at least 1x1.
template <typename T>
class Mat {
public:
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) {
            throw DimensionError("matrix dimensions must be at least 1x1");
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    bool operator==(const Mat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Mat& other) const { return !(*this == other); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& rhs) const {
        if (cols_ != rhs.rows_) {
            throw DimensionError("matrix product: inner dimensions disagree");
        }
        Mat out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
        return out;
    }

    Mat operator-() const {
        Mat out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
        return out;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using IntMatrix = Mat<Integer>;
using RatMatrix = Mat<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

RatMatrix to_rational(const IntMatrix& m);

// Throws InvalidInput if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

RatMatrix scale(const RatMatrix& m, const Rational& c);

RatVector operator*(const RatMatrix& m, const RatVector& v);

// Exact determinant. The rational overload clears denominators row by row
// and divides the integer result back out; the integer overload is
// fraction-free Bareiss elimination, so every intermediate value is an
// exact integer (a minor of the input, in fact).
Integer det(const IntMatrix& a);
Rational det(const RatMatrix& a);

// det in {+1, -1}.
bool is_unimodular(const IntMatrix& r);

// Least positive r such that r*A is integral; the lcm of the entry
// denominators in lowest terms.
Integer lcm_of_denominators(const RatMatrix& a);

// Gauss-Jordan inverse; throws SingularMatrixError.
RatMatrix inverse(const RatMatrix& a);

} // namespace latframe
