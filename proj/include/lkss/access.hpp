#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lkss/rational.hpp"
#include "lkss/scheme_params.hpp"

namespace lkss {

/// Leakage profile of a uniform scheme: g(t) is the fraction of the file's
/// entropy that any t servers jointly learn. Indexed t = 0..T, with g(0) = 0,
/// non-decreasing, values in [0, 1].
class AccessFunction {
public:
    explicit AccessFunction(std::vector<Rational> values);

    int servers() const { return static_cast<int>(values_.size()) - 1; }
    const Rational& at(int t) const;
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const AccessFunction& a, const AccessFunction& b) {
        return a.values_ == b.values_;
    }
    friend bool operator!=(const AccessFunction& a, const AccessFunction& b) { return !(a == b); }

private:
    std::vector<Rational> values_;
};

/// Profile of a (tau, L, T) ramp code: zero up to tau-L servers, then climbs
/// by 1/L per extra server until full recovery at tau.
AccessFunction linear_ramp_g(int tau, int L, int T);

/// Least-leakage profile meeting g(z) <= alpha with recovery at tau, for the
/// regime alpha < z/tau: slope alpha/z up to z, then (1-alpha)/(tau-z).
/// Errors when alpha >= z/tau (use linear_ramp_g(tau, tau, T) there).
AccessFunction optimal_g(const SchemeParams& params);

/// Splits optimal_g into the two realizable ramp profiles it is built from:
/// g1(t) = (alpha/z) * min(t, tau) and g2 = g - g1. Both are valid access
/// functions; their gradients size the two block types.
std::pair<AccessFunction, AccessFunction> decompose(const AccessFunction& g,
                                                    const SchemeParams& params);

/// Largest single-step increment max_t g(t+1) - g(t).
Rational max_gradient(const AccessFunction& g);

/// CSV with header "t,numerator,denominator", one row per t = 0..T.
std::string to_csv(const AccessFunction& g);

/// Rational-valued function on a contiguous integer interval [lo, hi].
class GridFunction {
public:
    GridFunction(int lo, std::vector<Rational> values);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }
    const Rational& at(int i) const;
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const GridFunction& a, const GridFunction& b) {
        return a.lo_ == b.lo_ && a.values_ == b.values_;
    }

private:
    int lo_;
    std::vector<Rational> values_;
};

/// Pointwise-least concave function dominating phi on its grid: the upper
/// convex hull of the points (i, phi(i)), evaluated back on the grid.
/// Exact, idempotent, and equal to phi at both endpoints.
GridFunction concave_envelope(const GridFunction& phi);

/// sum_{i=z+1}^{tau} [ (phi(i)-phi(i-1)) - (phi(i+1)-phi(i)) ]^+
/// for phi defined on [z, tau+1]. The quantity every feasible leakage profile
/// must spend in per-server share size.
Rational gradient_objective(const GridFunction& phi, int z, int tau);

}  // namespace lkss
