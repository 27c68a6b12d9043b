#include "latframe/criterion.hpp"

#include "latframe/errors.hpp"

namespace latframe {

std::string to_string(FrameStatus status) {
    switch (status) {
        case FrameStatus::guaranteed: return "GUARANTEED";
        case FrameStatus::impossible: return "IMPOSSIBLE";
        case FrameStatus::undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

FrameDecision schwartz_frame_criterion(const LatticeInvariants& inv) {
    FrameDecision decision;
    decision.threshold = Rational(1) - inv.rc_upper_bound;
    decision.margin = decision.threshold - inv.covol;
    if (inv.covol < decision.threshold) {
        decision.status = FrameStatus::guaranteed;
    } else if (inv.covol >= 1) {
        decision.status = FrameStatus::impossible;
    } else {
        decision.status = FrameStatus::undecided;
    }
    decision.window_bound_k = multiwindow_bound(inv);
    decision.window_bound_coarse = coarse_window_bound(inv);
    return decision;
}

Integer multiwindow_bound(const LatticeInvariants& inv) {
    // rc_upper_bound carries (d-1)/n_gamma, already 0 for non-rational input
    return floor_rational(inv.covol + inv.rc_upper_bound) + 1;
}

Integer coarse_window_bound(const LatticeInvariants& inv) {
    return floor_rational(inv.covol) + Integer(inv.d);
}

bool invariant_factor_criterion(const LatticeInvariants& inv) {
    if (!inv.rational) {
        throw NotApplicableError(
            "invariant-factor criterion is not applicable to a lattice declared non-rational");
    }
    const Integer& r = *inv.r;
    Integer lhs = 1;
    Integer gcd_product = 1;
    for (const Integer& hi : inv.h) {
        lhs *= hi;
        gcd_product *= gcd(r, hi);
    }
    const Integer rhs =
        pow_integer(r, static_cast<unsigned long>(inv.d)) - Integer(inv.d - 1) * gcd_product;
    return lhs < rhs;
}

bool small_covolume_guarantee(const LatticeInvariants& inv) {
    return inv.covol < make_rational(1, Integer(inv.d));
}

} // namespace latframe
