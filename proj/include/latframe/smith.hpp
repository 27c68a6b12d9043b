#pragma once

#include "latframe/matrix.hpp"

namespace latframe {

// S = U * N * V with U, V unimodular and S diagonal, entries nonnegative,
// d1 | d2 | ... with zero diagonal entries last.
struct SmithNormalForm {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
};

// Deterministic pivot rule: the nonzero entry of smallest absolute value in
// the active block, ties broken by lowest (row, col) lexicographically.
SmithNormalForm smith_normal_form(const IntMatrix& n);

// Diagonal of the Smith form; convenience for cross-checks.
std::vector<Integer> elementary_divisors(const IntMatrix& n);

} // namespace latframe
