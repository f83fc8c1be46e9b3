#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>

#include "lkss/leaky.hpp"
#include "lkss/oracle.hpp"
#include "lkss/ramp.hpp"

using lkss::FieldElement;
using lkss::PrimeField;
using lkss::RampParams;
using lkss::Rational;

namespace {

const double kLog2_5 = std::log2(5.0);

lkss::EnumEncoder ramp_encoder(const RampParams& params) {
    return [params](std::span<const FieldElement> f, std::span<const FieldElement> r) {
        lkss::BlockShares shares = lkss::split_block(f, r, params);
        std::vector<std::vector<FieldElement>> out;
        out.reserve(shares.size());
        for (const auto& s : shares) out.push_back({s});
        return out;
    };
}

void for_each_subset(int n, const std::function<void(const std::vector<int>&)>& fn) {
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int t = 1; t <= n; ++t)
            if (mask & (1u << (t - 1))) subset.push_back(t);
        fn(subset);
    }
}

}  // namespace

TEST_CASE("enumeration oracle on a (2,2,3) ramp over GF(5)") {
    PrimeField f(5);
    RampParams p(2, 2, 3, f);
    auto enc = ramp_encoder(p);

    // One share of a 2-packed block reveals exactly one symbol's worth.
    std::vector<int> one{1};
    CHECK(lkss::enum_leakage(enc, 2, 0, f, one) == doctest::Approx(kLog2_5).epsilon(1e-12));
    std::vector<int> two{1, 2};
    CHECK(lkss::enum_leakage(enc, 2, 0, f, two) == doctest::Approx(2 * kLog2_5).epsilon(1e-12));
    std::vector<int> all{1, 2, 3};
    CHECK(lkss::enum_leakage(enc, 2, 0, f, all) == doctest::Approx(2 * kLog2_5).epsilon(1e-12));
}

TEST_CASE("enumeration oracle on a (3,1,4) ramp over GF(5)") {
    PrimeField f(5);
    RampParams p(3, 1, 4, f);
    auto enc = ramp_encoder(p);

    // Two random coefficients hide the secret from any 2 servers.
    std::vector<int> one{2};
    CHECK(lkss::enum_leakage(enc, 1, 2, f, one) == doctest::Approx(0.0).epsilon(1e-12));
    std::vector<int> two{1, 3};
    CHECK(lkss::enum_leakage(enc, 1, 2, f, two) == doctest::Approx(0.0).epsilon(1e-12));
    std::vector<int> three{1, 2, 4};
    CHECK(lkss::enum_leakage(enc, 1, 2, f, three) == doctest::Approx(kLog2_5).epsilon(1e-12));
    std::vector<int> four{1, 2, 3, 4};
    CHECK(lkss::enum_leakage(enc, 1, 2, f, four) == doctest::Approx(kLog2_5).epsilon(1e-12));
}

TEST_CASE("enumeration and rank oracles agree on ramp blocks") {
    PrimeField f(5);
    for (auto [tau, L, T] : {std::tuple{2, 2, 3}, std::tuple{3, 1, 4}, std::tuple{3, 2, 4}}) {
        RampParams p(tau, L, T, f);
        auto enc = ramp_encoder(p);
        auto [A, B] = lkss::encoding_matrices(p);
        for_each_subset(T, [&](const std::vector<int>& subset) {
            double bits = lkss::enum_leakage(enc, L, tau - L, f, subset);
            Rational ratio = lkss::rank_leakage(A, B, 1, subset);
            double rank_bits = ratio.to_double() * L * kLog2_5;
            CHECK(std::abs(bits - rank_bits) < 1e-9);
        });
    }
}

TEST_CASE("enumeration and rank oracles agree on a composed scheme") {
    PrimeField f(5);
    lkss::SchemeParams params(3, 2, 1, Rational(1, 4), f);
    lkss::SuperblockLayout lay = lkss::layout(params);
    REQUIRE(lay.n_prime == 4);
    REQUIRE(lay.rand_per_superblock == 2);

    std::array<uint8_t, 16> id{};
    auto enc = [&params, &id](std::span<const FieldElement> file,
                              std::span<const FieldElement> rnd) {
        lkss::FixedStream stream(std::vector<FieldElement>(rnd.begin(), rnd.end()));
        auto bundles = lkss::encode(file, params, id, 0, stream);
        std::vector<std::vector<FieldElement>> out;
        out.reserve(bundles.size());
        for (auto& b : bundles) out.push_back(std::move(b.payload));
        return out;
    };

    lkss::GlobalMatrices gm = lkss::global_encoding_matrices(params);
    for_each_subset(3, [&](const std::vector<int>& subset) {
        double bits = lkss::enum_leakage(enc, lay.n_prime, lay.rand_per_superblock, f, subset);
        Rational ratio = lkss::rank_leakage(gm.A, gm.B, gm.rows_per_server, subset);
        CHECK(std::abs(bits - ratio.to_double() * lay.n_prime * kLog2_5) < 1e-9);
    });

    // frozen: a single server learns exactly alpha = 1/4 of the file
    std::vector<int> one{1};
    CHECK(lkss::enum_leakage(enc, 4, 2, f, one) == doctest::Approx(kLog2_5).epsilon(1e-9));
}

TEST_CASE("enumeration oracle refuses oversized state spaces") {
    PrimeField f(65537);
    RampParams p(2, 2, 3, f);
    auto enc = ramp_encoder(p);
    std::vector<int> one{1};
    CHECK_THROWS_AS(lkss::enum_leakage(enc, 2, 0, f, one), lkss::StateSpaceError);
}

TEST_CASE("oracle input validation") {
    PrimeField f(5);
    RampParams p(2, 1, 3, f);
    auto enc = ramp_encoder(p);
    std::vector<int> dup{1, 1};
    CHECK_THROWS_AS(lkss::enum_leakage(enc, 1, 1, f, dup), lkss::InvalidParamsError);
    std::vector<int> empty;
    CHECK_THROWS_AS(lkss::enum_leakage(enc, 1, 1, f, empty), lkss::InvalidParamsError);
    std::vector<int> high{9};
    CHECK_THROWS_AS(lkss::enum_leakage(enc, 1, 1, f, high), lkss::InvalidParamsError);

    auto [A, B] = lkss::encoding_matrices(p);
    CHECK_THROWS_AS(lkss::rank_leakage(A, B, 1, dup), lkss::InvalidParamsError);
    CHECK_THROWS_AS(lkss::rank_leakage(A, B, 1, high), lkss::InvalidParamsError);
    CHECK_THROWS_AS(lkss::rank_leakage(A, B, 2, std::vector<int>{1}), lkss::InvalidParamsError);
}

TEST_CASE("check_scheme audits the worked example") {
    lkss::SchemeParams params(4, 3, 2, Rational(1, 4), PrimeField(11));
    lkss::LeakageReport rep = lkss::check_scheme(params);
    CHECK(rep.passed);
    CHECK(rep.symmetric);
    CHECK(rep.subsets.size() == 15);
    REQUIRE(rep.measured_g.has_value());
    CHECK(rep.measured_g->values() ==
          std::vector<Rational>{{0}, {1, 8}, {1, 4}, {1}, {1}});
    CHECK(rep.measured_g == rep.planned_g);
    // every server stores 6 of the 8 superblock symbols' worth of entropy
    for (const auto& h : rep.server_entropy_ratios) CHECK(h == Rational(3, 4));
    CHECK(rep.sum_entropy_ratio == Rational(3));
    CHECK(rep.randomness_ratio == Rational(5, 4));
}

TEST_CASE("check_scheme in the ramp-only regime") {
    lkss::SchemeParams params(3, 2, 1, Rational(1, 2), PrimeField(5));
    lkss::LeakageReport rep = lkss::check_scheme(params);
    CHECK(rep.passed);
    REQUIRE(rep.measured_g.has_value());
    CHECK(rep.measured_g->values() == std::vector<Rational>{{0}, {1, 2}, {1}, {1}});
    CHECK(rep.randomness_ratio == Rational(0));
}

TEST_CASE("check_scheme caps the subset explosion") {
    CHECK_THROWS_AS(lkss::check_scheme(lkss::SchemeParams(13, 7, 6, Rational(0), PrimeField(65537))),
                    lkss::InvalidParamsError);
}

TEST_CASE("report CSV shape") {
    lkss::SchemeParams params(3, 2, 1, Rational(1, 2), PrimeField(5));
    lkss::LeakageReport rep = lkss::check_scheme(params);
    std::string csv = lkss::report_csv(rep);
    CHECK(csv.rfind("subset_bitmask,size,leak_num,leak_den,recoverable\n", 0) == 0);
    // 2^3 - 1 subsets plus header plus trailing newline
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
    CHECK(csv.find("7,3,1,1,1\n") != std::string::npos);  // full set recovers
}
