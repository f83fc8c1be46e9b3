#include <doctest.h>

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "lkss/share_io.hpp"

using lkss::FieldElement;
using lkss::PrimeField;
using lkss::Rational;
using lkss::SchemeParams;
using lkss::ShareBundle;
using lkss::ShareFileHeader;

namespace {

std::array<uint8_t, 16> test_id(uint8_t tag) {
    std::array<uint8_t, 16> id{};
    id.fill(tag);
    return id;
}

std::vector<uint8_t> random_bytes(size_t n, uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::vector<uint8_t> out(n);
    for (auto& b : out) b = static_cast<uint8_t>(eng());
    return out;
}

}  // namespace

TEST_CASE("header serialization, golden bytes") {
    ShareFileHeader h{};
    h.q = 65537;
    h.servers = 4;
    h.tau = 3;
    h.z = 2;
    h.alpha_num = 1;
    h.alpha_den = 4;
    h.scheme_id = test_id(0xAB);
    h.server_index = 3;
    h.original_length = 1000;
    h.superblock_count = 2;

    auto bytes = lkss::serialize_header(h);
    REQUIRE(bytes.size() == 69);
    CHECK(bytes[0] == 'L');
    CHECK(bytes[1] == 'K');
    CHECK(bytes[2] == 'S');
    CHECK(bytes[3] == 'S');
    CHECK(bytes[4] == 1);                          // version
    CHECK(bytes[5] == 0x01);                       // q = 0x10001 little-endian
    CHECK(bytes[6] == 0x00);
    CHECK(bytes[7] == 0x01);
    for (size_t i = 8; i < 13; ++i) CHECK(bytes[i] == 0x00);
    CHECK(bytes[13] == 4);                         // T
    CHECK(bytes[15] == 3);                         // tau
    CHECK(bytes[17] == 2);                         // z
    CHECK(bytes[19] == 1);                         // alpha numerator
    CHECK(bytes[27] == 4);                         // alpha denominator
    for (size_t i = 35; i < 51; ++i) CHECK(bytes[i] == 0xAB);
    CHECK(bytes[51] == 3);                         // server index
    CHECK(bytes[53] == 0xE8);                      // 1000 = 0x3E8
    CHECK(bytes[54] == 0x03);
    CHECK(bytes[61] == 2);                         // superblock count

    ShareFileHeader back = lkss::parse_header(bytes);
    CHECK(back.q == h.q);
    CHECK(back.servers == h.servers);
    CHECK(back.tau == h.tau);
    CHECK(back.z == h.z);
    CHECK(back.alpha_num == h.alpha_num);
    CHECK(back.alpha_den == h.alpha_den);
    CHECK(back.scheme_id == h.scheme_id);
    CHECK(back.server_index == h.server_index);
    CHECK(back.original_length == h.original_length);
    CHECK(back.superblock_count == h.superblock_count);
}

TEST_CASE("share round-trips through bytes") {
    SchemeParams params(4, 3, 2, Rational(1, 4), PrimeField(11));
    auto file = lkss::bytes_to_symbols(random_bytes(8, 1), params.field);
    file.resize(8, params.field.zero());  // one superblock of n' = 8
    lkss::EngineStream rnd(params.field, 5);
    auto bundles = lkss::encode(file, params, test_id(1), 8, rnd);

    for (const auto& b : bundles) {
        auto bytes = lkss::serialize_share(b);
        CHECK(bytes.size() == 69 + 4 * b.payload.size());
        ShareBundle back = lkss::parse_share(bytes);
        CHECK(back.scheme_id == b.scheme_id);
        CHECK(back.server_index == b.server_index);
        CHECK(back.original_length == b.original_length);
        CHECK(back.payload == b.payload);
        CHECK(back.params.alpha == b.params.alpha);
        CHECK(back.params.field == b.params.field);
    }
}

TEST_CASE("parse_share rejects corrupted input") {
    SchemeParams params(3, 2, 1, Rational(0), PrimeField(7));
    lkss::EngineStream rnd(params.field, 9);
    auto file = std::vector<FieldElement>{params.field.element(3)};  // n' = 1
    auto bundles = lkss::encode(file, params, test_id(2), 1, rnd);
    auto good = lkss::serialize_share(bundles[0]);

    SUBCASE("bad magic") {
        auto bad = good;
        bad[0] = 'X';
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::ShareFormatError);
    }
    SUBCASE("bad version") {
        auto bad = good;
        bad[4] = 9;
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::ShareFormatError);
    }
    SUBCASE("truncated header") {
        std::vector<uint8_t> bad(good.begin(), good.begin() + 20);
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::ShareFormatError);
    }
    SUBCASE("payload length off by one symbol") {
        auto bad = good;
        bad.resize(bad.size() + 4, 0);
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::ShareFormatError);
    }
    SUBCASE("payload symbol out of field range") {
        auto bad = good;
        bad[69] = 7;  // low byte of the first u32 symbol, q = 7
        bad[70] = bad[71] = bad[72] = 0;
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::ShareFormatError);
    }
    SUBCASE("composite modulus in the header") {
        auto bad = good;
        bad[5] = 9;  // q = 9
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::InvalidParamsError);
    }
    SUBCASE("alpha fields not a fraction in [0,1]") {
        auto bad = good;
        bad[27] = 0;  // denominator 0
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::ShareFormatError);
        bad = good;
        bad[19] = 2;  // alpha = 2/1
        bad[27] = 1;
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::ShareFormatError);
    }
    SUBCASE("server index out of range") {
        auto bad = good;
        bad[51] = 9;
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::ShareFormatError);
        bad[51] = 0;
        CHECK_THROWS_AS(lkss::parse_share(bad), lkss::ShareFormatError);
    }
}

TEST_CASE("share files require q below 2^32") {
    SchemeParams params(3, 2, 1, Rational(0), PrimeField(4294967311ull));
    ShareBundle b{test_id(3), 1, params, 0, {}};
    CHECK_THROWS_AS(lkss::serialize_share(b), lkss::ShareFormatError);
    lkss::FixedStream rnd({});
    std::vector<uint8_t> data{1, 2, 3};
    CHECK_THROWS_AS(lkss::split_bytes(data, params, test_id(3), rnd), lkss::InvalidParamsError);
}

TEST_CASE("byte codec, frozen group sizes") {
    CHECK(lkss::bytes_per_symbol(65537) == 2);
    CHECK(lkss::bytes_per_symbol(257) == 1);
    CHECK(lkss::bytes_per_symbol(2147483647) == 3);
    CHECK(lkss::bytes_per_symbol(251) == 0);
    CHECK(lkss::symbols_per_byte(65537) == 0);
    CHECK(lkss::symbols_per_byte(251) == 2);
    CHECK(lkss::symbols_per_byte(13) == 3);
    CHECK(lkss::symbols_per_byte(11) == 3);
    CHECK(lkss::symbols_per_byte(7) == 3);
    CHECK(lkss::symbols_per_byte(5) == 4);
    CHECK(lkss::symbols_per_byte(2) == 8);
}

TEST_CASE("byte codec, frozen digit expansion") {
    PrimeField f11(11);
    // 200 = 2 + 7*11 + 1*121, little-endian digits
    std::vector<uint8_t> one{200};
    auto symbols = lkss::bytes_to_symbols(one, f11);
    REQUIRE(symbols.size() == 3);
    CHECK(symbols[0].value() == 2);
    CHECK(symbols[1].value() == 7);
    CHECK(symbols[2].value() == 1);
    CHECK(lkss::symbols_to_bytes(symbols, f11) == one);

    PrimeField f(65537);
    std::vector<uint8_t> two{0x34, 0x12};
    auto wide = lkss::bytes_to_symbols(two, f);
    REQUIRE(wide.size() == 1);
    CHECK(wide[0].value() == 0x1234);
}

TEST_CASE("byte codec round-trips at every length") {
    for (uint64_t q : {5ull, 7ull, 11ull, 13ull, 251ull, 257ull, 65537ull}) {
        PrimeField field(q);
        for (size_t n : {size_t{0}, size_t{1}, size_t{2}, size_t{3}, size_t{17}, size_t{256}}) {
            auto bytes = random_bytes(n, 100 * q + n);
            auto symbols = lkss::bytes_to_symbols(bytes, field);
            auto back = lkss::symbols_to_bytes(symbols, field);
            REQUIRE(back.size() >= n);
            back.resize(n);
            CHECK(back == bytes);
        }
    }
}

TEST_CASE("symbols_to_bytes flags undecodable symbols") {
    PrimeField f(65537);
    std::vector<FieldElement> sym{f.element(65536)};  // needs 17 bits
    CHECK_THROWS_AS(lkss::symbols_to_bytes(sym, f), lkss::ShareFormatError);
    PrimeField f11(11);
    // 10 + 10*11 + 10*121 = 1330 > 255
    std::vector<FieldElement> grp{f11.element(10), f11.element(10), f11.element(10)};
    CHECK_THROWS_AS(lkss::symbols_to_bytes(grp, f11), lkss::ShareFormatError);
}

TEST_CASE("split_bytes and recover_bytes through real files") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "lkss_test_io";
    fs::create_directories(dir);

    SUBCASE("text file, small prime field") {
        SchemeParams params(4, 3, 2, Rational(1, 4), PrimeField(11));
        std::string text = "hello, storage world";
        std::vector<uint8_t> data(text.begin(), text.end());
        lkss::EngineStream rnd(params.field, 21);
        auto bundles = lkss::split_bytes(data, params, test_id(4), rnd);
        REQUIRE(bundles.size() == 4);
        CHECK(bundles[0].original_length == data.size());

        std::vector<fs::path> paths;
        for (const auto& b : bundles) {
            fs::path p = dir / ("share_" + std::to_string(b.server_index) + ".lkss");
            lkss::write_share_file(p, b);
            paths.push_back(p);
        }
        std::vector<ShareBundle> picked{lkss::read_share_file(paths[3]),
                                        lkss::read_share_file(paths[0]),
                                        lkss::read_share_file(paths[2])};
        auto back = lkss::recover_bytes(picked);
        CHECK(back == data);
    }

    SUBCASE("empty file") {
        SchemeParams params(3, 2, 1, Rational(1, 2), PrimeField(5));
        lkss::EngineStream rnd(params.field, 22);
        auto bundles = lkss::split_bytes({}, params, test_id(5), rnd);
        for (const auto& b : bundles) CHECK(b.payload.empty());
        fs::path p = dir / "empty_share.lkss";
        lkss::write_share_file(p, bundles[0]);
        std::vector<ShareBundle> picked{lkss::read_share_file(p), bundles[1]};
        CHECK(lkss::recover_bytes(picked).empty());
    }

    SUBCASE("16 bytes fill exactly one superblock at q = 65537") {
        SchemeParams params(4, 3, 2, Rational(1, 4), PrimeField(65537));
        auto data = random_bytes(16, 23);
        lkss::EngineStream rnd(params.field, 23);
        auto bundles = lkss::split_bytes(data, params, test_id(6), rnd);
        for (const auto& b : bundles) CHECK(b.payload.size() == 6);  // one superblock
        std::vector<ShareBundle> picked{bundles[0], bundles[1], bundles[2]};
        CHECK(lkss::recover_bytes(picked) == data);
    }

    SUBCASE("tampered payload byte is caught on read") {
        SchemeParams params(4, 3, 2, Rational(1, 4), PrimeField(11));
        auto data = random_bytes(5, 24);
        lkss::EngineStream rnd(params.field, 24);
        auto bundles = lkss::split_bytes(data, params, test_id(7), rnd);
        fs::path p = dir / "tampered.lkss";
        lkss::write_share_file(p, bundles[0]);
        auto raw = lkss::serialize_share(bundles[0]);
        raw[69] = 200;  // symbol residue >= 11
        raw[70] = raw[71] = raw[72] = 0;
        CHECK_THROWS_AS(lkss::parse_share(raw), lkss::ShareFormatError);
    }

    fs::remove_all(dir);
}
