#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lkss/field.hpp"
#include "lkss/matrix.hpp"

namespace lkss {

/// A (tau, L, T) packed ramp code over GF(q): a degree < tau polynomial whose
/// L low coefficients carry the secret and whose tau-L high coefficients are
/// random. Any tau shares rebuild the polynomial; any tau-L shares are
/// independent of the secret.
struct RampParams {
    int tau;          // shares needed to reconstruct
    int secret_len;   // L, packed secret symbols per block
    int servers;      // T
    PrimeField field;
    std::vector<FieldElement> eval_points;  // one distinct nonzero point per server

    /// Default evaluation points 1..T.
    RampParams(int tau_, int secret_len_, int servers_, const PrimeField& field_);
    RampParams(int tau_, int secret_len_, int servers_, const PrimeField& field_,
               std::vector<FieldElement> points);

    int randomness_len() const { return tau - secret_len; }
};

/// One share per server, indexed 0..T-1 (server t holds shares[t-1]).
using BlockShares = std::vector<FieldElement>;

/// secret.size() == L, randomness.size() == tau - L. Pure.
BlockShares split_block(std::span<const FieldElement> secret,
                        std::span<const FieldElement> randomness, const RampParams& params);

/// Rebuilds the L secret symbols from at least tau (point, value) shares.
/// Extra shares beyond the first tau distinct points are ignored.
std::vector<FieldElement> reconstruct_block(
    std::span<const std::pair<FieldElement, FieldElement>> shares, const RampParams& params);

/// Generator matrices of the linear map shares = A * secret + B * randomness:
/// A is T x L (Vandermonde columns x^0..x^(L-1)), B is T x (tau-L)
/// (columns x^L..x^(tau-1)).
std::pair<Matrix, Matrix> encoding_matrices(const RampParams& params);

}  // namespace lkss
