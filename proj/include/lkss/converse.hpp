#pragma once

#include <cstdint>
#include <string>

#include "lkss/access.hpp"
#include "lkss/rational.hpp"

namespace lkss {

/// Outcome of an exhaustive search over feasible leakage profiles.
struct GridMinResult {
    Rational min_value;
    GridFunction argmin;
    uint64_t profiles_searched;
};

/// Minimizes gradient_objective over every non-decreasing phi on the integer
/// interval [z, tau+1] with values on the 1/grid_den grid in [0,1], pinned to
/// phi(z) = alpha and phi(tau) = phi(tau+1) = 1. Exhaustive, so any scheme's
/// profile restricted to that window is in the search space; alpha must lie
/// on the grid. z = 0 is allowed (the file-size variant of the bound).
GridMinResult min_gradient_objective(int z, int tau, const Rational& alpha, int grid_den);

/// Structural facts about the concave envelope used by the lower-bound
/// argument, checked exactly on one profile.
struct EnvelopeReport {
    bool majorant;        // envelope >= phi everywhere
    bool endpoints_tight; // equality at both ends
    bool linear_off_contact;  // where envelope > phi, its slope does not change
    bool clip_dominates;      // on contact points, phi's clipped gradient drop
                              // is at least the envelope's
    std::string detail;       // first violation, empty when all hold
    bool ok() const { return majorant && endpoints_tight && linear_off_contact && clip_dominates; }
};

EnvelopeReport envelope_properties(const GridFunction& phi);

/// Certificate that exhaustive search cannot beat the closed-form share-size
/// bound: the private-regime branch (pins at alpha) must reach at least
/// (1-alpha)/(tau-z), and the z = 0 branch at least 1/tau.
struct Theorem1Certificate {
    GridMinResult private_branch;
    Rational private_bound;
    GridMinResult size_branch;
    Rational size_bound;
    bool ok;
};

Theorem1Certificate certify_theorem1_bound(int z, int tau, const Rational& alpha, int grid_den);
bool verify_theorem1_bound(int z, int tau, const Rational& alpha, int grid_den);

}  // namespace lkss
