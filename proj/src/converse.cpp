#include "lkss/converse.hpp"

namespace lkss {

namespace {

uint64_t monotone_sequence_count(int levels, int positions) {
    // C(levels - 1 + positions, positions), saturating well above the guard.
    uint64_t c = 1;
    for (int i = 1; i <= positions; ++i) {
        c = c * static_cast<uint64_t>(levels - 1 + i) / static_cast<uint64_t>(i);
        if (c > (1ull << 40)) return c;
    }
    return c;
}

}  // namespace

GridMinResult min_gradient_objective(int z, int tau, const Rational& alpha, int grid_den) {
    if (z < 0 || tau < z + 1) throw InvalidParamsError("need 0 <= z <= tau-1");
    if (grid_den < 1 || grid_den > 24) throw InvalidParamsError("grid denominator must be in 1..24");
    if (alpha < Rational(0) || alpha > Rational(1))
        throw InvalidParamsError("need alpha in [0,1]");
    Rational a0 = alpha * Rational(grid_den);
    if (!a0.is_integer())
        throw InvalidParamsError("alpha = " + alpha.str() + " does not lie on the 1/" +
                                 std::to_string(grid_den) + " grid");
    const int k_lo = static_cast<int>(a0.num());

    const int free_points = tau - 1 - z;  // interior positions z+1 .. tau-1
    if (free_points > 8)
        throw InvalidParamsError("search window too wide: tau - z - 1 must be at most 8");
    if (monotone_sequence_count(grid_den - k_lo + 1, free_points) > 5000000ull)
        throw InvalidParamsError("grid search would exceed the 5e6 profile budget");

    // phi on [z, tau+1]: pinned alpha at z, pinned 1 at tau and tau+1,
    // free grid values k/grid_den in between, non-decreasing.
    std::vector<Rational> values(static_cast<size_t>(tau + 1 - z + 1), Rational(1));
    values[0] = alpha;

    GridMinResult best{Rational(0), GridFunction(z, values), 0};
    bool have_best = false;

    std::vector<int> ks(static_cast<size_t>(free_points), 0);
    auto recurse = [&](auto&& self, int pos, int lo) -> void {
        if (pos == free_points) {
            GridFunction phi(z, values);
            Rational obj = gradient_objective(phi, z, tau);
            ++best.profiles_searched;
            if (!have_best || obj < best.min_value) {
                best.min_value = obj;
                best.argmin = phi;
                have_best = true;
            }
            return;
        }
        for (int k = lo; k <= grid_den; ++k) {
            values[static_cast<size_t>(pos) + 1] = Rational(k, grid_den);
            self(self, pos + 1, k);
        }
    };
    recurse(recurse, 0, k_lo);
    return best;
}

EnvelopeReport envelope_properties(const GridFunction& phi) {
    GridFunction env = concave_envelope(phi);
    EnvelopeReport rep{true, true, true, true, ""};
    auto fail = [&rep](bool& flag, const std::string& what) {
        flag = false;
        if (rep.detail.empty()) rep.detail = what;
    };

    for (int i = phi.lo(); i <= phi.hi(); ++i) {
        if (env.at(i) < phi.at(i))
            fail(rep.majorant, "envelope below the profile at i=" + std::to_string(i));
    }
    if (env.at(phi.lo()) != phi.at(phi.lo()) || env.at(phi.hi()) != phi.at(phi.hi()))
        fail(rep.endpoints_tight, "envelope not tight at an endpoint");

    for (int i = phi.lo() + 1; i <= phi.hi() - 1; ++i) {
        Rational left = env.at(i) - env.at(i - 1);
        Rational right = env.at(i + 1) - env.at(i);
        if (env.at(i) != phi.at(i)) {
            if (left != right)
                fail(rep.linear_off_contact,
                     "envelope kinks off the contact set at i=" + std::to_string(i));
        } else {
            Rational phi_drop = pos_part((phi.at(i) - phi.at(i - 1)) - (phi.at(i + 1) - phi.at(i)));
            if (phi_drop < left - right)
                fail(rep.clip_dominates,
                     "clipped gradient drop below the envelope's at i=" + std::to_string(i));
        }
    }
    return rep;
}

Theorem1Certificate certify_theorem1_bound(int z, int tau, const Rational& alpha, int grid_den) {
    if (z < 1) throw InvalidParamsError("need z >= 1");
    GridMinResult priv = min_gradient_objective(z, tau, alpha, grid_den);
    Rational priv_bound = (Rational(1) - alpha) / Rational(tau - z);
    GridMinResult size = min_gradient_objective(0, tau, Rational(0), grid_den);
    Rational size_bound(1, tau);
    bool ok = priv.min_value >= priv_bound && size.min_value >= size_bound;
    return {std::move(priv), priv_bound, std::move(size), size_bound, ok};
}

bool verify_theorem1_bound(int z, int tau, const Rational& alpha, int grid_den) {
    return certify_theorem1_bound(z, tau, alpha, grid_den).ok;
}

}  // namespace lkss
