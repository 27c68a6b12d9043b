#pragma once

#include <cstddef>

#include "latframe/matrix.hpp"

namespace latframe {

// Nondegenerate skew-symmetric rational matrix of even size. Validated at
// construction: transpose(m) == -m exactly and det(m) != 0.
class SkewMatrix {
public:
    explicit SkewMatrix(RatMatrix m);

    const RatMatrix& entries() const { return m_; }
    std::size_t half_dim() const { return m_.rows() / 2; }

private:
    RatMatrix m_;
};

// A full-rank lattice generator * Z^{2d}. The generator must be an
// invertible 2d x 2d rational matrix; invertibility is checked eagerly.
//
// declared_nonrational lets a caller assert that the lattice this matrix
// stands in for is non-rational: the exact-arithmetic invariants of the
// congruence theory are then skipped and reported as not applicable, and
// the frame criterion treats the non-integrality defect (d-1)/n as zero.
class Lattice {
public:
    explicit Lattice(RatMatrix generator, bool declared_nonrational = false);

    std::size_t d() const { return d_; }
    const RatMatrix& generator() const { return generator_; }
    bool declared_nonrational() const { return declared_nonrational_; }

    // |det M|, cached at construction.
    const Rational& covolume() const { return covol_; }

private:
    RatMatrix generator_;
    std::size_t d_;
    bool declared_nonrational_;
    Rational covol_;
};

// The 2d x 2d matrix J with top-right block I_d and bottom-left block -I_d.
IntMatrix standard_symplectic(std::size_t d);

// theta = M^t J M for the lattice's generator M.
SkewMatrix associated_skew_matrix(const Lattice& lattice);

Rational covolume(const Lattice& lattice);

// <z, J w> for vectors of equal even length.
Rational symplectic_pairing(const RatVector& z, const RatVector& w);

} // namespace latframe
