#include "lkss/ramp.hpp"

#include <set>

namespace lkss {

namespace {

std::vector<FieldElement> default_points(int servers, const PrimeField& field) {
    std::vector<FieldElement> pts;
    pts.reserve(static_cast<size_t>(servers));
    for (int t = 1; t <= servers; ++t) pts.push_back(field.element(static_cast<uint64_t>(t)));
    return pts;
}

void validate(const RampParams& p) {
    if (p.secret_len < 1 || p.secret_len > p.tau || p.tau > p.servers)
        throw InvalidParamsError("ramp code needs 1 <= L <= tau <= T");
    if (p.field.modulus() < static_cast<uint64_t>(p.servers) + 1)
        throw InvalidParamsError("need q >= T+1 for distinct nonzero evaluation points");
    if (p.eval_points.size() != static_cast<size_t>(p.servers))
        throw InvalidParamsError("need exactly one evaluation point per server");
    std::set<uint64_t> seen;
    for (const auto& x : p.eval_points) {
        if (x.modulus() != p.field.modulus())
            throw FieldMismatchError("evaluation point from a different field");
        if (x.is_zero())
            throw InvalidParamsError("evaluation points must be nonzero");
        if (!seen.insert(x.value()).second)
            throw InvalidParamsError("evaluation points must be distinct");
    }
}

}  // namespace

RampParams::RampParams(int tau_, int secret_len_, int servers_, const PrimeField& field_)
    : tau(tau_), secret_len(secret_len_), servers(servers_), field(field_),
      eval_points(default_points(servers_, field_)) {
    validate(*this);
}

RampParams::RampParams(int tau_, int secret_len_, int servers_, const PrimeField& field_,
                       std::vector<FieldElement> points)
    : tau(tau_), secret_len(secret_len_), servers(servers_), field(field_),
      eval_points(std::move(points)) {
    validate(*this);
}

BlockShares split_block(std::span<const FieldElement> secret,
                        std::span<const FieldElement> randomness, const RampParams& params) {
    if (secret.size() != static_cast<size_t>(params.secret_len))
        throw InvalidParamsError("secret must have exactly L symbols");
    if (randomness.size() != static_cast<size_t>(params.randomness_len()))
        throw InvalidParamsError("randomness must have exactly tau - L symbols");

    std::vector<FieldElement> coeffs;
    coeffs.reserve(static_cast<size_t>(params.tau));
    for (const auto& s : secret) coeffs.push_back(s);
    for (const auto& r : randomness) coeffs.push_back(r);
    for (const auto& c : coeffs) {
        if (c.modulus() != params.field.modulus())
            throw FieldMismatchError("block symbol from a different field");
    }

    BlockShares shares;
    shares.reserve(params.eval_points.size());
    for (const auto& x : params.eval_points) shares.push_back(eval_poly(coeffs, x));
    return shares;
}

std::vector<FieldElement> reconstruct_block(
    std::span<const std::pair<FieldElement, FieldElement>> shares, const RampParams& params) {
    const size_t tau = static_cast<size_t>(params.tau);
    std::vector<std::pair<FieldElement, FieldElement>> used;
    used.reserve(tau);
    std::set<uint64_t> seen;
    for (const auto& [x, y] : shares) {
        if (x.modulus() != params.field.modulus() || y.modulus() != params.field.modulus())
            throw FieldMismatchError("share from a different field");
        if (!seen.insert(x.value()).second)
            throw InvalidParamsError("duplicate evaluation point in shares");
        used.emplace_back(x, y);
        if (used.size() == tau) break;
    }
    if (used.size() < tau)
        throw InsufficientSharesError("need " + std::to_string(tau) + " shares, got " +
                                      std::to_string(used.size()));

    // Expand the Lagrange basis polynomials and accumulate their coefficients,
    // weighted by the share values. O(tau^2), exact.
    const PrimeField& f = params.field;
    std::vector<FieldElement> coeffs(tau, f.zero());

    // full(x) = prod_j (x - x_j), computed once; the basis denominator for i
    // is prod_{j != i} (x_i - x_j).
    std::vector<FieldElement> full(tau + 1, f.zero());
    full[0] = f.one();
    size_t deg = 0;
    for (const auto& [xj, yj] : used) {
        (void)yj;
        for (size_t k = deg + 2; k-- > 1;) full[k] = full[k - 1] - xj * full[k];
        full[0] = -xj * full[0];
        ++deg;
    }

    for (const auto& [xi, yi] : used) {
        // numerator_i(x) = full(x) / (x - x_i) by synthetic division
        std::vector<FieldElement> numer(tau, f.zero());
        FieldElement carry = full[tau];
        for (size_t k = tau; k-- > 0;) {
            numer[k] = carry;
            carry = full[k] + xi * carry;
        }
        FieldElement denom = f.one();
        for (const auto& [xj, yj2] : used) {
            (void)yj2;
            if (xj.value() != xi.value()) denom *= xi - xj;
        }
        FieldElement w = yi / denom;
        for (size_t k = 0; k < tau; ++k) coeffs[k] += w * numer[k];
    }

    coeffs.resize(static_cast<size_t>(params.secret_len), f.zero());
    return coeffs;
}

std::pair<Matrix, Matrix> encoding_matrices(const RampParams& params) {
    const size_t T = static_cast<size_t>(params.servers);
    const size_t L = static_cast<size_t>(params.secret_len);
    const size_t R = static_cast<size_t>(params.randomness_len());
    Matrix A(params.field, T, L);
    Matrix B(params.field, T, R);
    for (size_t t = 0; t < T; ++t) {
        uint64_t x = params.eval_points[t].value();
        uint64_t p = 1 % params.field.modulus();
        for (size_t c = 0; c < L; ++c) {
            A.set_raw(t, c, p);
            p = mul_mod(p, x, params.field.modulus());
        }
        for (size_t c = 0; c < R; ++c) {
            B.set_raw(t, c, p);
            p = mul_mod(p, x, params.field.modulus());
        }
    }
    return {std::move(A), std::move(B)};
}

}  // namespace lkss
