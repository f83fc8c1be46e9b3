#include "lkss/share_io.hpp"

#include <cstring>
#include <fstream>

namespace lkss {

namespace {

constexpr char kMagic[4] = {'L', 'K', 'S', 'S'};

void put_u16(uint8_t* p, uint16_t v) {
    p[0] = static_cast<uint8_t>(v);
    p[1] = static_cast<uint8_t>(v >> 8);
}

void put_u32(uint8_t* p, uint32_t v) {
    for (int i = 0; i < 4; ++i) p[i] = static_cast<uint8_t>(v >> (8 * i));
}

void put_u64(uint8_t* p, uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<uint8_t>(v >> (8 * i));
}

uint16_t get_u16(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | (static_cast<uint16_t>(p[1]) << 8));
}

uint32_t get_u32(const uint8_t* p) {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(p[i]) << (8 * i);
    return v;
}

uint64_t get_u64(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
    return v;
}

}  // namespace

std::array<uint8_t, ShareFileHeader::kSize> serialize_header(const ShareFileHeader& h) {
    std::array<uint8_t, ShareFileHeader::kSize> out{};
    std::memcpy(out.data(), kMagic, 4);
    out[4] = ShareFileHeader::kVersion;
    put_u64(out.data() + 5, h.q);
    put_u16(out.data() + 13, h.servers);
    put_u16(out.data() + 15, h.tau);
    put_u16(out.data() + 17, h.z);
    put_u64(out.data() + 19, h.alpha_num);
    put_u64(out.data() + 27, h.alpha_den);
    std::memcpy(out.data() + 35, h.scheme_id.data(), 16);
    put_u16(out.data() + 51, h.server_index);
    put_u64(out.data() + 53, h.original_length);
    put_u64(out.data() + 61, h.superblock_count);
    return out;
}

ShareFileHeader parse_header(std::span<const uint8_t> bytes) {
    if (bytes.size() < ShareFileHeader::kSize)
        throw ShareFormatError("share file shorter than its header");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw ShareFormatError("bad magic, not a share file");
    if (bytes[4] != ShareFileHeader::kVersion)
        throw ShareFormatError("unsupported share format version " + std::to_string(bytes[4]));
    ShareFileHeader h{};
    h.q = get_u64(bytes.data() + 5);
    h.servers = get_u16(bytes.data() + 13);
    h.tau = get_u16(bytes.data() + 15);
    h.z = get_u16(bytes.data() + 17);
    h.alpha_num = get_u64(bytes.data() + 19);
    h.alpha_den = get_u64(bytes.data() + 27);
    std::memcpy(h.scheme_id.data(), bytes.data() + 35, 16);
    h.server_index = get_u16(bytes.data() + 51);
    h.original_length = get_u64(bytes.data() + 53);
    h.superblock_count = get_u64(bytes.data() + 61);
    return h;
}

std::vector<uint8_t> serialize_share(const ShareBundle& bundle) {
    const SchemeParams& p = bundle.params;
    if (p.field.modulus() >= (1ull << 32))
        throw ShareFormatError("share files store u32 symbols; need q < 2^32");
    if (p.alpha.num() < 0)
        throw ShareFormatError("alpha must be non-negative");
    const SuperblockLayout lay = layout(p);
    if (bundle.payload.size() % static_cast<size_t>(lay.share_symbols_per_server) != 0)
        throw ShareFormatError("payload is not a whole number of superblocks");

    ShareFileHeader h{};
    h.q = p.field.modulus();
    h.servers = static_cast<uint16_t>(p.servers);
    h.tau = static_cast<uint16_t>(p.tau);
    h.z = static_cast<uint16_t>(p.z);
    h.alpha_num = static_cast<uint64_t>(p.alpha.num());
    h.alpha_den = static_cast<uint64_t>(p.alpha.den());
    h.scheme_id = bundle.scheme_id;
    h.server_index = static_cast<uint16_t>(bundle.server_index);
    h.original_length = bundle.original_length;
    h.superblock_count =
        bundle.payload.size() / static_cast<size_t>(lay.share_symbols_per_server);

    std::vector<uint8_t> out(ShareFileHeader::kSize + 4 * bundle.payload.size());
    auto header = serialize_header(h);
    std::memcpy(out.data(), header.data(), header.size());
    for (size_t i = 0; i < bundle.payload.size(); ++i) {
        if (bundle.payload[i].modulus() != p.field.modulus())
            throw FieldMismatchError("payload symbol from a different field");
        put_u32(out.data() + ShareFileHeader::kSize + 4 * i,
                static_cast<uint32_t>(bundle.payload[i].value()));
    }
    return out;
}

ShareBundle parse_share(std::span<const uint8_t> bytes) {
    ShareFileHeader h = parse_header(bytes);
    if (h.q >= (1ull << 32)) throw ShareFormatError("header modulus does not fit u32 symbols");
    if (h.alpha_den == 0 || h.alpha_num > h.alpha_den)
        throw ShareFormatError("header alpha is not a fraction in [0,1]");

    PrimeField field(h.q);  // throws InvalidParamsError on a composite modulus
    SchemeParams params(h.servers, h.tau, h.z,
                        Rational(static_cast<long long>(h.alpha_num),
                                 static_cast<long long>(h.alpha_den)),
                        field);
    const SuperblockLayout lay = layout(params);

    const size_t expected_symbols =
        static_cast<size_t>(h.superblock_count) * static_cast<size_t>(lay.share_symbols_per_server);
    if (bytes.size() != ShareFileHeader::kSize + 4 * expected_symbols)
        throw ShareFormatError("share payload length does not match the header");
    if (h.server_index < 1 || h.server_index > h.servers)
        throw ShareFormatError("server index out of range");

    ShareBundle b{h.scheme_id, h.server_index, params, h.original_length, {}};
    b.payload.reserve(expected_symbols);
    for (size_t i = 0; i < expected_symbols; ++i) {
        uint32_t v = get_u32(bytes.data() + ShareFileHeader::kSize + 4 * i);
        if (v >= h.q) throw ShareFormatError("payload symbol out of field range");
        b.payload.push_back(field.element(v));
    }
    return b;
}

void write_share_file(const std::filesystem::path& path, const ShareBundle& bundle) {
    std::vector<uint8_t> bytes = serialize_share(bundle);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("short write to " + path.string());
}

ShareBundle read_share_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_share(bytes);
}

int bytes_per_symbol(uint64_t q) {
    if (q < 257) return 0;
    int bits = 0;
    while ((q >> (bits + 1)) != 0) ++bits;  // bits = floor(log2 q)
    return bits / 8;
}

int symbols_per_byte(uint64_t q) {
    if (q >= 257) return 0;
    if (q < 2) throw InvalidParamsError("modulus too small");
    int d = 0;
    uint64_t pow = 1;
    while (pow < 256) {
        pow *= q;
        ++d;
    }
    return d;
}

std::vector<FieldElement> bytes_to_symbols(std::span<const uint8_t> bytes,
                                           const PrimeField& field) {
    const uint64_t q = field.modulus();
    std::vector<FieldElement> out;
    if (const int b = bytes_per_symbol(q); b > 0) {
        out.reserve((bytes.size() + static_cast<size_t>(b) - 1) / static_cast<size_t>(b));
        for (size_t i = 0; i < bytes.size(); i += static_cast<size_t>(b)) {
            uint64_t v = 0;
            for (int j = 0; j < b && i + static_cast<size_t>(j) < bytes.size(); ++j)
                v |= static_cast<uint64_t>(bytes[i + static_cast<size_t>(j)]) << (8 * j);
            out.push_back(field.element(v));  // v < 2^(8b) <= q
        }
    } else {
        const int d = symbols_per_byte(q);
        out.reserve(bytes.size() * static_cast<size_t>(d));
        for (uint8_t byte : bytes) {
            uint64_t v = byte;
            for (int j = 0; j < d; ++j) {
                out.push_back(field.element(v % q));
                v /= q;
            }
        }
    }
    return out;
}

std::vector<uint8_t> symbols_to_bytes(std::span<const FieldElement> symbols,
                                      const PrimeField& field) {
    const uint64_t q = field.modulus();
    std::vector<uint8_t> out;
    if (const int b = bytes_per_symbol(q); b > 0) {
        out.reserve(symbols.size() * static_cast<size_t>(b));
        for (const auto& s : symbols) {
            uint64_t v = s.value();
            for (int j = 0; j < b; ++j) {
                out.push_back(static_cast<uint8_t>(v));
                v >>= 8;
            }
            if (v != 0) throw ShareFormatError("symbol value does not decode to bytes");
        }
    } else {
        const int d = symbols_per_byte(q);
        out.reserve(symbols.size() / static_cast<size_t>(d));
        // Trailing symbols short of a full group are superblock padding.
        for (size_t i = 0; i + static_cast<size_t>(d) <= symbols.size();
             i += static_cast<size_t>(d)) {
            uint64_t v = 0;
            uint64_t pow = 1;
            for (int j = 0; j < d; ++j) {
                v += symbols[i + static_cast<size_t>(j)].value() * pow;
                pow *= q;
            }
            if (v > 255) throw ShareFormatError("symbol group does not decode to a byte");
            out.push_back(static_cast<uint8_t>(v));
        }
    }
    return out;
}

std::vector<ShareBundle> split_bytes(std::span<const uint8_t> bytes, const SchemeParams& params,
                                     const std::array<uint8_t, 16>& scheme_id,
                                     SymbolStream& randomness) {
    if (params.field.modulus() >= (1ull << 32))
        throw InvalidParamsError("share files store u32 symbols; need q < 2^32");
    std::vector<FieldElement> symbols = bytes_to_symbols(bytes, params.field);
    const SuperblockLayout lay = layout(params);
    while (symbols.size() % static_cast<size_t>(lay.n_prime) != 0)
        symbols.push_back(params.field.zero());
    return encode(symbols, params, scheme_id, bytes.size(), randomness);
}

std::vector<uint8_t> recover_bytes(std::span<const ShareBundle> bundles) {
    std::vector<FieldElement> symbols = decode(bundles);
    const ShareBundle& first = bundles[0];
    std::vector<uint8_t> bytes = symbols_to_bytes(symbols, first.params.field);
    if (bytes.size() < first.original_length)
        throw ShareFormatError("decoded stream shorter than the recorded length");
    bytes.resize(first.original_length);
    return bytes;
}

}  // namespace lkss
