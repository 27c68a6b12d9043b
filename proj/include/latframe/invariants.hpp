#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latframe/lattice.hpp"
#include "latframe/matrix.hpp"
#include "latframe/skew_normal_form.hpp"

namespace latframe {

// The full invariant set of a lattice. For a rational lattice every field
// is populated; for a lattice declared non-rational only d, covol and
// rc_upper_bound (= 0) are meaningful and the optional fields stay empty,
// which reports render as "infinite" / not applicable.
struct LatticeInvariants {
    std::size_t d = 0;
    bool rational = true;
    Rational covol;

    std::optional<Integer> r;                    // order of theta
    std::vector<Integer> h;                      // invariant factors of r*theta
    std::vector<Integer> r_i;                    // r / gcd(h_i, r)
    std::optional<Integer> n_gamma;              // r_1 * ... * r_d; empty == infinite
    std::optional<Integer> index;                // n_gamma^2
    std::optional<Rational> covol_from_factors;  // h_1*...*h_d / r^d
    std::vector<Integer> quotient;               // cyclic orders, each r_i twice
    std::optional<RatMatrix> omega_subgroup_generator;  // columns generate the pairing-integral subgroup
    std::optional<IntMatrix> snf_transform;      // the congruence transform R
    std::optional<Integer> homogeneity_degree;   // == n_gamma
    Rational rc_upper_bound;                     // (d-1)/n_gamma, 0 when non-rational

    LatticeInvariants() : covol(0), rc_upper_bound(0) {}
};

// Runs the whole chain: theta, order, skew normal form, r_i, n_gamma,
// index, subgroup generator. Internally cross-checks the normal form and
// the covolume factorization and throws SelfCheckFailure if either fails.
LatticeInvariants compute_invariants(const Lattice& lattice);

// Generator matrix G = M * R * diag(r_1..r_d, r_1..r_d) whose columns
// generate the subgroup of lattice vectors pairing integrally with all of
// the lattice. Not applicable to lattices declared non-rational.
RatMatrix omega_subgroup_basis(const Lattice& lattice);

// True iff the lattice vector M*k pairs integrally with every generator,
// i.e. with all of the lattice. k is given in lattice coordinates.
bool subgroup_membership(const Lattice& lattice, const IntVector& k);

} // namespace latframe
