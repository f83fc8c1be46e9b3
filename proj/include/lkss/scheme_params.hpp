#pragma once

#include "lkss/field.hpp"
#include "lkss/rational.hpp"

namespace lkss {

/// Parameters of an (alpha, z)-private storage scheme on T servers:
/// any tau servers recover the file, any z servers learn at most an
/// alpha fraction of its entropy.
struct SchemeParams {
    int servers;     // T
    int tau;         // reconstruction threshold
    int z;           // privacy threshold, 1 <= z <= tau - 1
    Rational alpha;  // tolerated leakage fraction, in [0, 1]
    PrimeField field;

    SchemeParams(int servers_, int tau_, int z_, Rational alpha_, PrimeField field_)
        : servers(servers_), tau(tau_), z(z_), alpha(alpha_), field(field_) {
        if (servers < 1)
            throw InvalidParamsError("need at least one server, got T=" + std::to_string(servers));
        if (tau < 1 || tau > servers)
            throw InvalidParamsError("tau must satisfy 1 <= tau <= T, got tau=" +
                                     std::to_string(tau) + ", T=" + std::to_string(servers));
        if (z < 1 || z > tau - 1)
            throw InvalidParamsError("z must satisfy 1 <= z <= tau-1, got z=" + std::to_string(z) +
                                     ", tau=" + std::to_string(tau));
        if (alpha < Rational(0) || alpha > Rational(1))
            throw InvalidParamsError("alpha must lie in [0,1], got " + alpha.str());
        if (field.modulus() < static_cast<uint64_t>(servers) + 1)
            throw InvalidParamsError("need q >= T+1 for T distinct nonzero evaluation points");
    }

    /// True when alpha >= z/tau: a single ramp code already meets the leakage
    /// budget and no dedicated randomness is needed.
    bool ramp_only() const { return alpha >= Rational(z, tau); }
};

}  // namespace lkss
