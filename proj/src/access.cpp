#include "lkss/access.hpp"

#include <sstream>

namespace lkss {

AccessFunction::AccessFunction(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidParamsError("access function needs at least g(0)");
    if (!values_[0].is_zero())
        throw InvalidParamsError("access function must have g(0) = 0, got " + values_[0].str());
    for (size_t t = 0; t < values_.size(); ++t) {
        if (values_[t] < Rational(0) || values_[t] > Rational(1))
            throw InvalidParamsError("access function value out of [0,1] at t=" + std::to_string(t));
        if (t > 0 && values_[t] < values_[t - 1])
            throw InvalidParamsError("access function decreases at t=" + std::to_string(t));
    }
}

const Rational& AccessFunction::at(int t) const {
    if (t < 0 || t > servers())
        throw InvalidParamsError("access function evaluated outside [0, T] at t=" + std::to_string(t));
    return values_[static_cast<size_t>(t)];
}

AccessFunction linear_ramp_g(int tau, int L, int T) {
    if (L < 1 || L > tau || tau > T)
        throw InvalidParamsError("ramp profile needs 1 <= L <= tau <= T");
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(T) + 1);
    for (int t = 0; t <= T; ++t) {
        if (t <= tau - L) {
            v.emplace_back(0);
        } else if (t >= tau) {
            v.emplace_back(1);
        } else {
            v.emplace_back(t - tau + L, L);
        }
    }
    return AccessFunction(std::move(v));
}

AccessFunction optimal_g(const SchemeParams& params) {
    if (params.ramp_only())
        throw InvalidParamsError("alpha >= z/tau: plain ramp profile is already optimal");
    const int tau = params.tau, z = params.z, T = params.servers;
    const Rational& a = params.alpha;
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(T) + 1);
    for (int t = 0; t <= T; ++t) {
        if (t <= z) {
            v.push_back(a / Rational(z) * Rational(t));
        } else if (t >= tau) {
            v.emplace_back(1);
        } else {
            v.push_back((Rational(1) - a) / Rational(tau - z) * Rational(t - z) + a);
        }
    }
    return AccessFunction(std::move(v));
}

std::pair<AccessFunction, AccessFunction> decompose(const AccessFunction& g,
                                                    const SchemeParams& params) {
    const int tau = params.tau, z = params.z, T = params.servers;
    if (g.servers() != T) throw InvalidParamsError("profile size does not match T");
    std::vector<Rational> v1, v2;
    v1.reserve(static_cast<size_t>(T) + 1);
    v2.reserve(static_cast<size_t>(T) + 1);
    for (int t = 0; t <= T; ++t) {
        Rational g1 = params.alpha / Rational(z) * Rational(std::min(t, tau));
        v1.push_back(g1);
        v2.push_back(g.at(t) - g1);
    }
    return {AccessFunction(std::move(v1)), AccessFunction(std::move(v2))};
}

Rational max_gradient(const AccessFunction& g) {
    Rational best(0);
    for (int t = 0; t + 1 <= g.servers(); ++t) {
        best = rmax(best, g.at(t + 1) - g.at(t));
    }
    return best;
}

std::string to_csv(const AccessFunction& g) {
    std::ostringstream out;
    out << "t,numerator,denominator\n";
    for (int t = 0; t <= g.servers(); ++t) {
        out << t << "," << g.at(t).num() << "," << g.at(t).den() << "\n";
    }
    return out.str();
}

GridFunction::GridFunction(int lo, std::vector<Rational> values)
    : lo_(lo), values_(std::move(values)) {
    if (values_.empty()) throw InvalidParamsError("grid function needs at least one point");
}

const Rational& GridFunction::at(int i) const {
    if (i < lo_ || i > hi())
        throw InvalidParamsError("grid function evaluated outside [" + std::to_string(lo_) + ", " +
                                 std::to_string(hi()) + "] at i=" + std::to_string(i));
    return values_[static_cast<size_t>(i - lo_)];
}

GridFunction concave_envelope(const GridFunction& phi) {
    const int lo = phi.lo(), hi = phi.hi();
    const int n = hi - lo + 1;
    if (n == 1) return phi;

    // Upper hull, left to right. A kept point may not lie on or below the
    // chord of its neighbours; cross >= 0 means (mid) is at or below the
    // (prev, next) segment, so it gets dropped.
    std::vector<int> hull;  // offsets into the grid
    for (int i = 0; i < n; ++i) {
        const Rational& yi = phi.at(lo + i);
        while (hull.size() >= 2) {
            int a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            Rational cross = Rational(b - a) * (yi - phi.at(lo + a)) -
                             Rational(i - a) * (phi.at(lo + b) - phi.at(lo + a));
            if (cross >= Rational(0)) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(i);
    }

    std::vector<Rational> out(static_cast<size_t>(n), Rational(0));
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        int a = hull[s], b = hull[s + 1];
        const Rational& ya = phi.at(lo + a);
        Rational slope = (phi.at(lo + b) - ya) / Rational(b - a);
        for (int i = a; i <= b; ++i) out[static_cast<size_t>(i)] = ya + slope * Rational(i - a);
    }
    return GridFunction(lo, std::move(out));
}

Rational gradient_objective(const GridFunction& phi, int z, int tau) {
    if (phi.lo() > z || phi.hi() < tau + 1)
        throw InvalidParamsError("gradient objective needs phi on [z, tau+1]");
    Rational total(0);
    for (int i = z + 1; i <= tau; ++i) {
        total += pos_part((phi.at(i) - phi.at(i - 1)) - (phi.at(i + 1) - phi.at(i)));
    }
    return total;
}

}  // namespace lkss
