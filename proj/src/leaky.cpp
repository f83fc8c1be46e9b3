#include "lkss/leaky.hpp"

#include <algorithm>
#include <set>

namespace lkss {

SuperblockLayout layout(int tau, int z, const Rational& alpha) {
    if (tau < 2 || z < 1 || z > tau - 1)
        throw InvalidParamsError("layout needs 1 <= z <= tau-1");
    if (alpha < Rational(0) || alpha > Rational(1))
        throw InvalidParamsError("layout needs alpha in [0,1]");

    SuperblockLayout out{};
    if (alpha >= Rational(z, tau)) {
        // Single-ramp regime: one (tau, tau, T) block per superblock.
        out.n_prime = tau;
        out.n1 = tau;
        out.n2 = 0;
        out.blocks1 = 1;
        out.blocks2 = 0;
        out.rand_per_superblock = 0;
        out.share_symbols_per_server = 1;
        return out;
    }

    // Smallest n' > 0 with n1 = (alpha/z) * tau * n' an integer multiple of
    // tau and n2 = n' - n1 a multiple of tau - z. n' = tau*(tau-z)*den(...)
    // always works, so the scan below terminates.
    const Rational frac = alpha / Rational(z) * Rational(tau);  // n1 / n'
    const long long bound = static_cast<long long>(tau) * (tau - z) * frac.den();
    for (long long np = 1; np <= bound; ++np) {
        Rational n1r = frac * Rational(np);
        if (!n1r.is_integer()) continue;
        long long n1 = n1r.num();
        if (n1 % tau != 0) continue;
        long long n2 = np - n1;
        if (n2 % (tau - z) != 0) continue;
        out.n_prime = static_cast<int>(np);
        out.n1 = static_cast<int>(n1);
        out.n2 = static_cast<int>(n2);
        out.blocks1 = static_cast<int>(n1 / tau);
        out.blocks2 = static_cast<int>(n2 / (tau - z));
        out.rand_per_superblock = z * out.blocks2;
        out.share_symbols_per_server = out.blocks1 + out.blocks2;
        return out;
    }
    throw Error("layout search failed to terminate");  // unreachable
}

SuperblockLayout layout(const SchemeParams& params) {
    return layout(params.tau, params.z, params.alpha);
}

std::vector<ShareBundle> encode(std::span<const FieldElement> file_symbols,
                                const SchemeParams& params,
                                const std::array<uint8_t, 16>& scheme_id,
                                uint64_t original_length, SymbolStream& randomness) {
    const SuperblockLayout lay = layout(params);
    if (file_symbols.size() % static_cast<size_t>(lay.n_prime) != 0)
        throw InvalidParamsError("file symbol count must be a multiple of n' = " +
                                 std::to_string(lay.n_prime));
    for (const auto& s : file_symbols) {
        if (s.modulus() != params.field.modulus())
            throw FieldMismatchError("file symbol from a different field");
    }

    const size_t superblocks = file_symbols.size() / static_cast<size_t>(lay.n_prime);
    const int T = params.servers;

    std::vector<ShareBundle> bundles;
    bundles.reserve(static_cast<size_t>(T));
    for (int t = 1; t <= T; ++t) {
        ShareBundle b{scheme_id, t, params, original_length, {}};
        b.payload.reserve(superblocks * static_cast<size_t>(lay.share_symbols_per_server));
        bundles.push_back(std::move(b));
    }

    const RampParams full_ramp(params.tau, params.tau, T, params.field);
    const RampParams private_ramp =
        lay.blocks2 > 0 ? RampParams(params.tau, params.tau - params.z, T, params.field)
                        : full_ramp;

    std::vector<FieldElement> rand_buf;
    for (size_t sb = 0; sb < superblocks; ++sb) {
        std::span<const FieldElement> chunk =
            file_symbols.subspan(sb * static_cast<size_t>(lay.n_prime),
                                 static_cast<size_t>(lay.n_prime));
        for (int j = 0; j < lay.blocks1; ++j) {
            BlockShares shares = split_block(
                chunk.subspan(static_cast<size_t>(j) * params.tau, static_cast<size_t>(params.tau)),
                {}, full_ramp);
            for (int t = 0; t < T; ++t) bundles[static_cast<size_t>(t)].payload.push_back(shares[static_cast<size_t>(t)]);
        }
        const int L2 = params.tau - params.z;
        for (int k = 0; k < lay.blocks2; ++k) {
            rand_buf.clear();
            for (int m = 0; m < params.z; ++m) rand_buf.push_back(randomness.next());
            BlockShares shares = split_block(
                chunk.subspan(static_cast<size_t>(lay.n1) + static_cast<size_t>(k) * L2,
                              static_cast<size_t>(L2)),
                rand_buf, private_ramp);
            for (int t = 0; t < T; ++t) bundles[static_cast<size_t>(t)].payload.push_back(shares[static_cast<size_t>(t)]);
        }
    }
    return bundles;
}

namespace {

/// Rows that rebuild block coefficients c[0..L-1] from the tau share values
/// of the servers in `subset`: first L rows of the inverse of the subset's
/// tau x tau Vandermonde matrix, kept as raw residues for the block loop.
std::vector<std::vector<uint64_t>> reconstruction_rows(const RampParams& ramp,
                                                       std::span<const int> subset) {
    const uint64_t q = ramp.field.modulus();
    const size_t tau = static_cast<size_t>(ramp.tau);
    Matrix V(ramp.field, tau, tau);
    for (size_t i = 0; i < tau; ++i) {
        uint64_t x = ramp.eval_points[static_cast<size_t>(subset[i] - 1)].value();
        uint64_t p = 1 % q;
        for (size_t c = 0; c < tau; ++c) {
            V.set_raw(i, c, p);
            p = mul_mod(p, x, q);
        }
    }
    Matrix W = V.inverse();
    std::vector<std::vector<uint64_t>> rows(static_cast<size_t>(ramp.secret_len));
    for (size_t r = 0; r < rows.size(); ++r) {
        rows[r].resize(tau);
        for (size_t c = 0; c < tau; ++c) rows[r][c] = W.raw(r, c);
    }
    return rows;
}

}  // namespace

std::vector<FieldElement> decode(std::span<const ShareBundle> bundles) {
    if (bundles.empty()) throw InsufficientSharesError("no share bundles given");
    const SchemeParams& params = bundles[0].params;
    const int tau = params.tau;
    if (bundles.size() < static_cast<size_t>(tau))
        throw InsufficientSharesError("need " + std::to_string(tau) + " bundles, got " +
                                      std::to_string(bundles.size()));

    const SuperblockLayout lay = layout(params);
    std::set<int> seen;
    for (const auto& b : bundles) {
        if (b.scheme_id != bundles[0].scheme_id)
            throw ShareFormatError("bundles come from different encodings");
        if (b.params.servers != params.servers || b.params.tau != params.tau ||
            b.params.z != params.z || b.params.alpha != params.alpha ||
            b.params.field != params.field)
            throw ShareFormatError("bundles disagree on scheme parameters");
        if (b.original_length != bundles[0].original_length)
            throw ShareFormatError("bundles disagree on original length");
        if (b.server_index < 1 || b.server_index > params.servers)
            throw ShareFormatError("server index out of range");
        if (!seen.insert(b.server_index).second)
            throw ShareFormatError("duplicate server index " + std::to_string(b.server_index));
        if (b.payload.size() != bundles[0].payload.size())
            throw ShareFormatError("bundles disagree on payload length");
    }
    if (bundles[0].payload.size() % static_cast<size_t>(lay.share_symbols_per_server) != 0)
        throw ShareFormatError("payload length is not a whole number of superblocks");

    // Use the tau lowest server indices; sort for a deterministic choice.
    std::vector<const ShareBundle*> use;
    use.reserve(bundles.size());
    for (const auto& b : bundles) use.push_back(&b);
    std::sort(use.begin(), use.end(), [](const ShareBundle* a, const ShareBundle* b) {
        return a->server_index < b->server_index;
    });
    use.resize(static_cast<size_t>(tau));
    std::vector<int> subset;
    subset.reserve(use.size());
    for (const auto* b : use) subset.push_back(b->server_index);

    const size_t superblocks =
        bundles[0].payload.size() / static_cast<size_t>(lay.share_symbols_per_server);
    const uint64_t q = params.field.modulus();

    const RampParams full_ramp(tau, tau, params.servers, params.field);
    auto rows1 = reconstruction_rows(full_ramp, subset);
    std::vector<std::vector<uint64_t>> rows2;
    if (lay.blocks2 > 0) {
        const RampParams private_ramp(tau, tau - params.z, params.servers, params.field);
        rows2 = reconstruction_rows(private_ramp, subset);
    }

    // With q below 2^29 and tau <= 64 the dot products fit in uint64 without
    // intermediate reduction.
    const bool lazy = q < (1ull << 29) && tau <= 64;

    std::vector<uint64_t> y(static_cast<size_t>(tau));
    std::vector<FieldElement> out;
    out.reserve(superblocks * static_cast<size_t>(lay.n_prime));
    for (size_t sb = 0; sb < superblocks; ++sb) {
        const size_t base = sb * static_cast<size_t>(lay.share_symbols_per_server);
        for (int j = 0; j < lay.blocks1 + lay.blocks2; ++j) {
            const auto& rows = j < lay.blocks1 ? rows1 : rows2;
            for (size_t i = 0; i < static_cast<size_t>(tau); ++i)
                y[i] = use[i]->payload[base + static_cast<size_t>(j)].value();
            for (const auto& row : rows) {
                uint64_t acc = 0;
                if (lazy) {
                    for (size_t i = 0; i < static_cast<size_t>(tau); ++i) acc += row[i] * y[i];
                    acc %= q;
                } else {
                    for (size_t i = 0; i < static_cast<size_t>(tau); ++i)
                        acc = add_mod(acc, mul_mod(row[i], y[i], q), q);
                }
                out.push_back(params.field.element(acc));
            }
        }
    }
    return out;
}

GlobalMatrices global_encoding_matrices(const SchemeParams& params) {
    const SuperblockLayout lay = layout(params);
    const int T = params.servers;
    const int tau = params.tau, z = params.z;
    const size_t rows = static_cast<size_t>(T) * static_cast<size_t>(lay.share_symbols_per_server);
    Matrix A(params.field, rows, static_cast<size_t>(lay.n_prime));
    Matrix B(params.field, rows, static_cast<size_t>(lay.rand_per_superblock));
    const uint64_t q = params.field.modulus();

    for (int t = 0; t < T; ++t) {
        const uint64_t x = static_cast<uint64_t>(t) + 1;
        const size_t row0 = static_cast<size_t>(t) * static_cast<size_t>(lay.share_symbols_per_server);
        for (int j = 0; j < lay.blocks1; ++j) {
            uint64_t p = 1 % q;
            for (int c = 0; c < tau; ++c) {
                A.set_raw(row0 + static_cast<size_t>(j), static_cast<size_t>(j) * tau + static_cast<size_t>(c), p);
                p = mul_mod(p, x, q);
            }
        }
        const int L2 = tau - z;
        for (int k = 0; k < lay.blocks2; ++k) {
            const size_t row = row0 + static_cast<size_t>(lay.blocks1 + k);
            uint64_t p = 1 % q;
            for (int c = 0; c < L2; ++c) {
                A.set_raw(row, static_cast<size_t>(lay.n1) + static_cast<size_t>(k) * L2 + static_cast<size_t>(c), p);
                p = mul_mod(p, x, q);
            }
            for (int c = 0; c < z; ++c) {
                B.set_raw(row, static_cast<size_t>(k) * z + static_cast<size_t>(c), p);
                p = mul_mod(p, x, q);
            }
        }
    }
    return {std::move(A), std::move(B), lay.share_symbols_per_server};
}

}  // namespace lkss
