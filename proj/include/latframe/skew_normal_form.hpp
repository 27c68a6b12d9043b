#pragma once

#include <vector>

#include "latframe/lattice.hpp"
#include "latframe/matrix.hpp"

namespace latframe {

// Congruence normal form of an integral alternating matrix N:
//   transform^t * N * transform == [[0, B], [-B, 0]],  B = diag(h[0..d-1]),
// with transform unimodular, every h[i] positive and h[i] | h[i+1].
// The order r of the rational form N/r is filled in by the caller.
struct SkewNormalFormResult {
    Integer r;
    std::vector<Integer> h;
    IntMatrix transform;

    SkewNormalFormResult() : r(0), transform(1, 1) {}
};

// Least positive integer r such that r * theta is integral.
Integer order(const SkewMatrix& theta);

// Reduces a nondegenerate skew-symmetric integer matrix to the block normal
// form above by explicit congruent row/column operations. Deterministic:
// each pivot is the nonzero entry of minimal absolute value above the
// diagonal, ties broken lexicographically by (row, col).
//
// Distinct errors: non-skew input, odd dimension, singular input.
SkewNormalFormResult skew_normal_form(const IntMatrix& n);

// True iff |det transform| == 1, the h chain is positive and divisible in
// order, and transform^t * n * transform equals the target block matrix
// entry for entry. Any shape mismatch is reported as false.
bool verify_skew_normal_form(const IntMatrix& n, const SkewNormalFormResult& res);

} // namespace latframe
