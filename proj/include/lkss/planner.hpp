#pragma once

#include <string>
#include <vector>

#include "lkss/leaky.hpp"
#include "lkss/rational.hpp"
#include "lkss/scheme_params.hpp"

namespace lkss {

/// Optimal per-server share size: max((1-alpha)/(tau-z), 1/tau), as a
/// fraction of H(F). Pure arithmetic.
Rational lambda_ratio(int tau, int z, const Rational& alpha);

/// Optimal randomness per file symbol: [z - tau*alpha]^+ / (tau - z).
Rational rho_ratio(int tau, int z, const Rational& alpha);

/// Closed-form resource plan for one parameter point, together with the
/// concrete superblock layout that realizes it exactly.
struct SchemePlan {
    enum class Case { RampOnly, Composed };

    SchemeParams params;
    Case scheme_case;
    Rational lambda;      // per-server share size / H(F)
    Rational lambda_sum;  // total share size / H(F) = T * lambda
    Rational rho;         // randomness / H(F)
    SuperblockLayout layout;
};

SchemePlan plan(const SchemeParams& params);

struct SweepRow {
    int z;
    Rational alpha;
    Rational lambda;
    Rational rho;
};

/// One row per (z, alpha) pair, z ascending then alpha ascending.
std::vector<SweepRow> sweep(int servers, int tau, int z_lo, int z_hi,
                            std::span<const Rational> alphas);

/// Convenience grid alpha = k/alpha_den for k = 0..alpha_den.
std::vector<SweepRow> sweep_grid(int servers, int tau, int z_lo, int z_hi, int alpha_den);

/// CSV with header "z,alpha_num,alpha_den,lambda_num,lambda_den,rho_num,rho_den".
std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace lkss
