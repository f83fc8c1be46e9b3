#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lkss/leaky.hpp"

namespace lkss {

/// On-disk share header, 69 bytes, all integers little-endian:
///   "LKSS" | version u8 | q u64 | T u16 | tau u16 | z u16 |
///   alpha_num u64 | alpha_den u64 | scheme_id 16B | server_index u16 |
///   original_length u64 | superblock_count u64
/// Payload follows as one u32 per symbol, so share files require q < 2^32.
struct ShareFileHeader {
    static constexpr size_t kSize = 69;
    static constexpr uint8_t kVersion = 1;

    uint64_t q;
    uint16_t servers;
    uint16_t tau;
    uint16_t z;
    uint64_t alpha_num;
    uint64_t alpha_den;
    std::array<uint8_t, 16> scheme_id;
    uint16_t server_index;
    uint64_t original_length;
    uint64_t superblock_count;
};

std::array<uint8_t, ShareFileHeader::kSize> serialize_header(const ShareFileHeader& h);
ShareFileHeader parse_header(std::span<const uint8_t> bytes);  // throws ShareFormatError

std::vector<uint8_t> serialize_share(const ShareBundle& bundle);
ShareBundle parse_share(std::span<const uint8_t> bytes);

void write_share_file(const std::filesystem::path& path, const ShareBundle& bundle);
ShareBundle read_share_file(const std::filesystem::path& path);

/// Injective byte <-> symbol mapping for GF(q):
///   q >= 257: fixed-size chunks of floor(floor(log2 q) / 8) bytes per symbol
///             (2 bytes per symbol for the default q = 65537);
///   q <  257: d symbols per byte, base-q digits, d minimal with q^d >= 256.
/// bytes_per_symbol returns 0 in the small-q regime and symbols_per_byte
/// returns 0 in the large-q one.
int bytes_per_symbol(uint64_t q);
int symbols_per_byte(uint64_t q);

std::vector<FieldElement> bytes_to_symbols(std::span<const uint8_t> bytes, const PrimeField& field);

/// Inverse expansion; emits every full group, so the result may end in
/// padding bytes. Callers truncate to the original length.
std::vector<uint8_t> symbols_to_bytes(std::span<const FieldElement> symbols,
                                      const PrimeField& field);

/// bytes -> symbols -> zero-pad to a whole number of superblocks -> encode.
std::vector<ShareBundle> split_bytes(std::span<const uint8_t> bytes, const SchemeParams& params,
                                     const std::array<uint8_t, 16>& scheme_id,
                                     SymbolStream& randomness);

/// decode -> bytes -> truncate to the recorded original length.
std::vector<uint8_t> recover_bytes(std::span<const ShareBundle> bundles);

}  // namespace lkss
