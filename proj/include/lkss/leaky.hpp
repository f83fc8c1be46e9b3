#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lkss/matrix.hpp"
#include "lkss/ramp.hpp"
#include "lkss/random.hpp"
#include "lkss/scheme_params.hpp"

namespace lkss {

/// How one superblock of n' file symbols is cut into ramp blocks.
///
/// When alpha >= z/tau a single (tau, tau, T) ramp code meets the leakage
/// budget. Otherwise the superblock is split in two: a fraction alpha*tau/z
/// of the symbols goes through (tau, tau, T) blocks (leaks fast, costs no
/// randomness), the rest through (tau, tau-z, T) blocks that are fully
/// private up to z servers at the price of z random symbols per block.
/// n' is the smallest size making both parts whole numbers of blocks.
struct SuperblockLayout {
    int n_prime;                  // file symbols per superblock
    int n1;                       // symbols carried by (tau, tau, T) blocks
    int n2;                       // symbols carried by (tau, tau-z, T) blocks
    int blocks1;                  // n1 / tau
    int blocks2;                  // n2 / (tau - z)
    int rand_per_superblock;      // z * blocks2
    int share_symbols_per_server; // blocks1 + blocks2
};

/// Layout is pure threshold arithmetic; the field never enters it.
SuperblockLayout layout(int tau, int z, const Rational& alpha);
SuperblockLayout layout(const SchemeParams& params);

/// One server's complete share of a file.
struct ShareBundle {
    std::array<uint8_t, 16> scheme_id;  // ties bundles of one encode together
    int server_index;                   // 1-based
    SchemeParams params;
    uint64_t original_length;           // bytes of the file before padding
    std::vector<FieldElement> payload;  // superblock-major, blocks1 then blocks2
};

/// Splits file_symbols (length a multiple of layout.n_prime) into T bundles,
/// drawing exactly rand_per_superblock symbols per superblock from
/// `randomness`. Pure given the stream contents.
std::vector<ShareBundle> encode(std::span<const FieldElement> file_symbols,
                                const SchemeParams& params,
                                const std::array<uint8_t, 16>& scheme_id,
                                uint64_t original_length, SymbolStream& randomness);

/// Rebuilds the padded file symbols from any >= tau consistent bundles.
std::vector<FieldElement> decode(std::span<const ShareBundle> bundles);

/// The composed scheme on one superblock as a single linear map
/// shares = A * F + B * R, rows grouped server-major: server t owns rows
/// [(t-1) * rows_per_server, t * rows_per_server).
struct GlobalMatrices {
    Matrix A;  // (T * rows_per_server) x n'
    Matrix B;  // (T * rows_per_server) x rand_per_superblock
    int rows_per_server;
};

GlobalMatrices global_encoding_matrices(const SchemeParams& params);

}  // namespace lkss
