#pragma once

#include <string>

#include "latframe/invariants.hpp"

namespace latframe {

// GUARANTEED: covol < 1 - (d-1)/n, so a single Schwartz window suffices.
// IMPOSSIBLE:  covol >= 1, excluded by the Balian-Low necessity.
// UNDECIDED:   everything in between; the criterion is only sufficient.
enum class FrameStatus { guaranteed, impossible, undecided };

std::string to_string(FrameStatus status);

struct FrameDecision {
    FrameStatus status = FrameStatus::undecided;
    Rational threshold;            // 1 - (d-1)/n_gamma
    Rational margin;               // threshold - covol
    Integer window_bound_k;        // floor(covol + (d-1)/n_gamma) + 1
    Integer window_bound_coarse;   // floor(covol) + d

    FrameDecision() : threshold(0), margin(0), window_bound_k(0), window_bound_coarse(0) {}
};

FrameDecision schwartz_frame_criterion(const LatticeInvariants& inv);

// Number of Schwartz windows guaranteed to suffice for a multi-window
// frame. Floors are taken on exact rationals.
Integer multiwindow_bound(const LatticeInvariants& inv);

Integer coarse_window_bound(const LatticeInvariants& inv);

// The invariant-factor form of the single-window criterion:
//   h_1*...*h_d < r^d - (d-1) * gcd(r,h_1)*...*gcd(r,h_d).
// Equivalent to status == GUARANTEED for rational lattices.
bool invariant_factor_criterion(const LatticeInvariants& inv);

// covol < 1/d. Implies GUARANTEED for rational lattices; kept as a
// cross-check, the decision surface is schwartz_frame_criterion.
bool small_covolume_guarantee(const LatticeInvariants& inv);

} // namespace latframe
