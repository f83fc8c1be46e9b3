#include "lkss/planner.hpp"

#include <sstream>

namespace lkss {

namespace {

void check_thresholds(int tau, int z, const Rational& alpha) {
    if (tau < 2 || z < 1 || z > tau - 1)
        throw InvalidParamsError("need 1 <= z <= tau-1");
    if (alpha < Rational(0) || alpha > Rational(1))
        throw InvalidParamsError("need alpha in [0,1]");
}

}  // namespace

Rational lambda_ratio(int tau, int z, const Rational& alpha) {
    check_thresholds(tau, z, alpha);
    return rmax((Rational(1) - alpha) / Rational(tau - z), Rational(1, tau));
}

Rational rho_ratio(int tau, int z, const Rational& alpha) {
    check_thresholds(tau, z, alpha);
    return pos_part(Rational(z) - Rational(tau) * alpha) / Rational(tau - z);
}

SchemePlan plan(const SchemeParams& params) {
    Rational l = lambda_ratio(params.tau, params.z, params.alpha);
    return SchemePlan{params,
                      params.ramp_only() ? SchemePlan::Case::RampOnly : SchemePlan::Case::Composed,
                      l,
                      Rational(params.servers) * l,
                      rho_ratio(params.tau, params.z, params.alpha),
                      layout(params)};
}

std::vector<SweepRow> sweep(int servers, int tau, int z_lo, int z_hi,
                            std::span<const Rational> alphas) {
    if (tau < 2 || tau > servers) throw InvalidParamsError("need 2 <= tau <= T");
    if (z_lo < 1 || z_hi > tau - 1 || z_lo > z_hi)
        throw InvalidParamsError("need 1 <= z_lo <= z_hi <= tau-1");
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(z_hi - z_lo + 1) * alphas.size());
    for (int z = z_lo; z <= z_hi; ++z) {
        for (const Rational& a : alphas) {
            rows.push_back({z, a, lambda_ratio(tau, z, a), rho_ratio(tau, z, a)});
        }
    }
    return rows;
}

std::vector<SweepRow> sweep_grid(int servers, int tau, int z_lo, int z_hi, int alpha_den) {
    if (alpha_den < 1) throw InvalidParamsError("alpha grid denominator must be positive");
    std::vector<Rational> alphas;
    alphas.reserve(static_cast<size_t>(alpha_den) + 1);
    for (int k = 0; k <= alpha_den; ++k) alphas.emplace_back(k, alpha_den);
    return sweep(servers, tau, z_lo, z_hi, alphas);
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::ostringstream out;
    out << "z,alpha_num,alpha_den,lambda_num,lambda_den,rho_num,rho_den\n";
    for (const auto& r : rows) {
        out << r.z << "," << r.alpha.num() << "," << r.alpha.den() << "," << r.lambda.num() << ","
            << r.lambda.den() << "," << r.rho.num() << "," << r.rho.den() << "\n";
    }
    return out.str();
}

}  // namespace lkss
