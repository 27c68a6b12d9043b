#include "latframe/lattice.hpp"

namespace latframe {

SkewMatrix::SkewMatrix(RatMatrix m) : m_(std::move(m)) {
    if (!m_.square() || m_.rows() % 2 != 0) {
        throw DimensionError("skew-symmetric form must be square of even dimension");
    }
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (m_(i, j) != -m_(j, i)) {
                throw InvalidInput("matrix is not skew-symmetric");
            }
        }
    }
    if (det(m_) == 0) {
        throw SingularMatrixError("skew-symmetric form is degenerate");
    }
}

Lattice::Lattice(RatMatrix generator, bool declared_nonrational)
    : generator_(std::move(generator)),
      d_(0),
      declared_nonrational_(declared_nonrational),
      covol_(0) {
    if (!generator_.square()) {
        throw DimensionError("lattice generator must be square, got " +
                             std::to_string(generator_.rows()) + "x" +
                             std::to_string(generator_.cols()));
    }
    if (generator_.rows() % 2 != 0) {
        throw DimensionError("lattice generator must have even dimension 2d");
    }
    d_ = generator_.rows() / 2;
    Rational determinant = det(generator_);
    if (determinant == 0) {
        throw SingularMatrixError("lattice generator is singular");
    }
    covol_ = abs(determinant);
}

IntMatrix standard_symplectic(std::size_t d) {
    if (d == 0) {
        throw DimensionError("standard symplectic matrix needs d >= 1");
    }
    IntMatrix j(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        j(i, d + i) = 1;
        j(d + i, i) = -1;
    }
    return j;
}

SkewMatrix associated_skew_matrix(const Lattice& lattice) {
    const RatMatrix& m = lattice.generator();
    const RatMatrix j = to_rational(standard_symplectic(lattice.d()));
    return SkewMatrix(m.transpose() * j * m);
}

Rational covolume(const Lattice& lattice) {
    return lattice.covolume();
}

Rational symplectic_pairing(const RatVector& z, const RatVector& w) {
    if (z.size() != w.size()) {
        throw DimensionError("symplectic pairing: vector lengths disagree");
    }
    if (z.size() == 0 || z.size() % 2 != 0) {
        throw DimensionError("symplectic pairing: vectors must have even length 2d");
    }
    const std::size_t d = z.size() / 2;
    Rational omega(0);
    for (std::size_t i = 0; i < d; ++i) {
        omega += z[i] * w[d + i] - z[d + i] * w[i];
    }
    return omega;
}

} // namespace latframe
