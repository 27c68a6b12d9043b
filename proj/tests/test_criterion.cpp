#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latframe/criterion.hpp"
#include "latframe/errors.hpp"
#include "support.hpp"

using namespace latframe;
using testsupport::Rng;

namespace {

LatticeInvariants invariants_of(const Lattice& l) { return compute_invariants(l); }

Lattice scaled_symplectic_lattice(std::size_t d, int p, int q) {
    // generator diag(1,...,1, p/q,...,p/q) gives theta = (p/q) J
    RatMatrix m = RatMatrix::identity(2 * d);
    for (std::size_t i = d; i < 2 * d; ++i) m(i, i) = make_rational(p, q);
    return Lattice(m);
}

} // namespace

TEST_CASE("frame status rendering") {
    CHECK(to_string(FrameStatus::guaranteed) == "GUARANTEED");
    CHECK(to_string(FrameStatus::impossible) == "IMPOSSIBLE");
    CHECK(to_string(FrameStatus::undecided) == "UNDECIDED");
}

TEST_CASE("decision on pinned lattices") {
    SUBCASE("Z^2 sits on the boundary: impossible") {
        const FrameDecision dec =
            schwartz_frame_criterion(invariants_of(Lattice(RatMatrix::identity(2))));
        CHECK(dec.status == FrameStatus::impossible);
        CHECK(dec.threshold == 1);
        CHECK(dec.margin == 0);
        CHECK(dec.window_bound_k == 2);
    }
    SUBCASE("diag(1,1,1,1/3): guaranteed, q > d") {
        const FrameDecision dec = schwartz_frame_criterion(
            invariants_of(Lattice(testsupport::diagonal_lattice_generator(2, 3))));
        CHECK(dec.status == FrameStatus::guaranteed);
        CHECK(to_string(dec.threshold) == "2/3");
        CHECK(to_string(dec.margin) == "1/3");
        CHECK(dec.window_bound_k == 1);
    }
    SUBCASE("diag(1,...,1,1/2) at d=3: undecided, q <= d") {
        const LatticeInvariants inv =
            invariants_of(Lattice(testsupport::diagonal_lattice_generator(3, 2)));
        CHECK(*inv.r == 2);
        CHECK(inv.h == std::vector<Integer>{1, 2, 2});
        CHECK(*inv.n_gamma == 2);
        CHECK(to_string(inv.covol) == "1/2");
        const FrameDecision dec = schwartz_frame_criterion(inv);
        CHECK(dec.status == FrameStatus::undecided);
        CHECK(dec.window_bound_k == 2);
    }
    SUBCASE("covolume above 1 is impossible") {
        RatMatrix m = RatMatrix::identity(2);
        m(0, 0) = 3;
        const FrameDecision dec = schwartz_frame_criterion(invariants_of(Lattice(m)));
        CHECK(dec.status == FrameStatus::impossible);
    }
    SUBCASE("covol equal to a threshold below 1 stays undecided") {
        LatticeInvariants inv;
        inv.d = 2;
        inv.rational = true;
        inv.rc_upper_bound = parse_rational("1/3");  // n = 3
        inv.covol = parse_rational("2/3");           // == threshold
        const FrameDecision dec = schwartz_frame_criterion(inv);
        CHECK(dec.status == FrameStatus::undecided);
        CHECK(dec.margin == 0);
    }
    SUBCASE("non-rational lattice: threshold is 1") {
        RatMatrix m = RatMatrix::identity(2);
        m(1, 1) = parse_rational("1/2");
        const FrameDecision dec =
            schwartz_frame_criterion(compute_invariants(Lattice(m, true)));
        CHECK(dec.status == FrameStatus::guaranteed);
        CHECK(dec.threshold == 1);
        CHECK(dec.window_bound_k == 1);
    }
}

TEST_CASE("multiwindow bound") {
    SUBCASE("covol 1/2 at d=1 needs one window") {
        RatMatrix m = RatMatrix::identity(2);
        m(1, 1) = parse_rational("1/2");
        CHECK(multiwindow_bound(invariants_of(Lattice(m))) == 1);
    }
    SUBCASE("integer lattices need d+1 windows") {
        for (std::size_t d = 1; d <= 4; ++d) {
            const LatticeInvariants inv = invariants_of(Lattice(RatMatrix::identity(2 * d)));
            CHECK(*inv.n_gamma == 1);
            CHECK(multiwindow_bound(inv) == Integer(d) + 1);
        }
    }
    SUBCASE("d=3, q=2: floor lands exactly on 1") {
        const LatticeInvariants inv =
            invariants_of(Lattice(testsupport::diagonal_lattice_generator(3, 2)));
        // covol + (d-1)/n = 1/2 + 2/2 = 3/2
        CHECK(multiwindow_bound(inv) == 2);
        CHECK(coarse_window_bound(inv) == 3);
    }
}

TEST_CASE("invariant factor criterion") {
    CHECK(invariant_factor_criterion(
        invariants_of(Lattice(testsupport::diagonal_lattice_generator(2, 3)))));
    CHECK_FALSE(invariant_factor_criterion(invariants_of(Lattice(RatMatrix::identity(2)))));

    RatMatrix half = RatMatrix::identity(2);
    half(1, 1) = parse_rational("1/2");
    CHECK(invariant_factor_criterion(invariants_of(Lattice(half))));

    CHECK_THROWS_AS(
        invariant_factor_criterion(compute_invariants(Lattice(RatMatrix::identity(2), true))),
        NotApplicableError);
}

TEST_CASE("small covolume guarantee") {
    LatticeInvariants inv;
    inv.d = 2;
    inv.covol = parse_rational("1/3");
    CHECK(small_covolume_guarantee(inv));
    inv.covol = parse_rational("1/2");
    CHECK_FALSE(small_covolume_guarantee(inv));
    inv.d = 1;
    inv.covol = parse_rational("99/100");
    CHECK(small_covolume_guarantee(inv));
}

TEST_CASE("criterion equivalence on random rational lattices") {
    Rng rng(112233);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 1 + (trial % 3);
        const LatticeInvariants inv = invariants_of(testsupport::random_lattice(rng, d));
        const FrameDecision dec = schwartz_frame_criterion(inv);
        CHECK(invariant_factor_criterion(inv) == (dec.status == FrameStatus::guaranteed));
        CHECK((dec.window_bound_k == 1) == (dec.status == FrameStatus::guaranteed));
        CHECK(dec.window_bound_k <= dec.window_bound_coarse);

        // covol * n is a positive integer, hence covol >= 1/n
        const Rational scaled = inv.covol * Rational(*inv.n_gamma);
        CHECK(scaled.get_den() == 1);
        CHECK(scaled >= 1);
        if (small_covolume_guarantee(inv)) {
            CHECK(dec.status == FrameStatus::guaranteed);
        }
    }
}

TEST_CASE("window bound is monotone in the covolume") {
    LatticeInvariants inv;
    inv.d = 3;
    inv.rational = true;
    inv.rc_upper_bound = parse_rational("2/5");  // (d-1)/n with n = 5
    Integer last_k = 0;
    for (int step = 1; step <= 40; ++step) {
        inv.covol = make_rational(step, 8);
        const Integer k = multiwindow_bound(inv);
        CHECK(k >= last_k);
        last_k = k;
        const FrameDecision dec = schwartz_frame_criterion(inv);
        CHECK((k == 1) == (inv.covol < dec.threshold));
    }
}

TEST_CASE("every rational d=1 lattice below covolume 1 is guaranteed") {
    Rng rng(6060842);
    for (int trial = 0; trial < 50; ++trial) {
        const Lattice l = testsupport::random_unit_covolume_d1(rng);
        const LatticeInvariants inv = invariants_of(l);
        CHECK(inv.rc_upper_bound == 0);
        CHECK(schwartz_frame_criterion(inv).status == FrameStatus::guaranteed);
    }
}

TEST_CASE("scaled symplectic family is always guaranteed") {
    // theta = (p/q) J with p < q coprime: order q, all invariant factors p
    const std::pair<int, int> pq[] = {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 5}, {4, 5}, {5, 6}};
    for (std::size_t d = 1; d <= 3; ++d) {
        for (const auto& [p, q] : pq) {
            const LatticeInvariants inv = invariants_of(scaled_symplectic_lattice(d, p, q));
            CHECK(*inv.r == q);
            CHECK(inv.h == std::vector<Integer>(d, Integer(p)));
            CHECK(invariant_factor_criterion(inv));
            CHECK(schwartz_frame_criterion(inv).status == FrameStatus::guaranteed);
        }
    }
}
