#include <doctest.h>

#include <random>

#include "lkss/oracle.hpp"
#include "lkss/ramp.hpp"

using lkss::BlockShares;
using lkss::FieldElement;
using lkss::PrimeField;
using lkss::RampParams;

namespace {

std::vector<FieldElement> random_symbols(const PrimeField& f, int n, std::mt19937_64& rng) {
    std::vector<FieldElement> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(f.element(rng() % f.modulus()));
    return v;
}

// all k-subsets of {0,...,n-1}
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<size_t>(pos)] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

TEST_CASE("hand-worked split in GF(5)") {
    PrimeField f(5);
    RampParams p(2, 1, 3, f);
    // p(x) = 3 + 1*x at x = 1, 2, 3
    std::vector<FieldElement> secret{f.element(3)};
    std::vector<FieldElement> rand{f.element(1)};
    BlockShares shares = lkss::split_block(secret, rand, p);
    REQUIRE(shares.size() == 3);
    CHECK(shares[0].value() == 4);
    CHECK(shares[1].value() == 0);
    CHECK(shares[2].value() == 1);
}

TEST_CASE("split validates input lengths and parameters") {
    PrimeField f(11);
    RampParams p(3, 2, 4, f);
    std::vector<FieldElement> two{f.element(1), f.element(2)};
    std::vector<FieldElement> one{f.element(1)};
    CHECK_THROWS_AS(lkss::split_block(one, one, p), lkss::InvalidParamsError);
    CHECK_THROWS_AS(lkss::split_block(two, two, p), lkss::InvalidParamsError);

    CHECK_THROWS_AS(RampParams(3, 2, 4, PrimeField(3)), lkss::InvalidParamsError);  // q < T+1
    CHECK_THROWS_AS(RampParams(0, 1, 4, f), lkss::InvalidParamsError);
    std::vector<FieldElement> bad_pts{f.element(0), f.element(1), f.element(2), f.element(3)};
    CHECK_THROWS_AS(RampParams(3, 2, 4, f, bad_pts), lkss::InvalidParamsError);  // zero point
    std::vector<FieldElement> dup_pts{f.element(1), f.element(1), f.element(2), f.element(3)};
    CHECK_THROWS_AS(RampParams(3, 2, 4, f, dup_pts), lkss::InvalidParamsError);
}

TEST_CASE("every tau-subset reconstructs the packed secret exactly") {
    std::mt19937_64 rng(17);
    for (uint64_t q : {7ull, 65537ull}) {
        PrimeField f(q);
        for (int tau = 1; tau <= 4; ++tau) {
            for (int L = 1; L <= tau; ++L) {
                const int T = 5;
                if (q < static_cast<uint64_t>(T) + 1) continue;
                RampParams p(tau, L, T, f);
                for (int trial = 0; trial < 5; ++trial) {
                    auto secret = random_symbols(f, L, rng);
                    auto randomness = random_symbols(f, tau - L, rng);
                    BlockShares shares = lkss::split_block(secret, randomness, p);
                    for_each_subset(T, tau, [&](const std::vector<int>& subset) {
                        std::vector<std::pair<FieldElement, FieldElement>> pts;
                        for (int i : subset)
                            pts.emplace_back(p.eval_points[static_cast<size_t>(i)],
                                             shares[static_cast<size_t>(i)]);
                        auto rec = lkss::reconstruct_block(pts, p);
                        REQUIRE(rec.size() == secret.size());
                        for (size_t i = 0; i < rec.size(); ++i) CHECK(rec[i] == secret[i]);
                    });
                }
            }
        }
    }
}

TEST_CASE("reconstruct ignores extra shares and rejects bad inputs") {
    PrimeField f(11);
    RampParams p(2, 1, 4, f);
    std::vector<FieldElement> secret{f.element(7)};
    std::vector<FieldElement> rnd{f.element(3)};
    BlockShares shares = lkss::split_block(secret, rnd, p);

    std::vector<std::pair<FieldElement, FieldElement>> all;
    for (int i = 0; i < 4; ++i) all.emplace_back(p.eval_points[static_cast<size_t>(i)], shares[static_cast<size_t>(i)]);
    CHECK(lkss::reconstruct_block(all, p)[0].value() == 7);

    std::vector<std::pair<FieldElement, FieldElement>> one(all.begin(), all.begin() + 1);
    CHECK_THROWS_AS(lkss::reconstruct_block(one, p), lkss::InsufficientSharesError);

    std::vector<std::pair<FieldElement, FieldElement>> dup{all[0], all[0]};
    CHECK_THROWS_AS(lkss::reconstruct_block(dup, p), lkss::InvalidParamsError);
}

TEST_CASE("encoding matrices reproduce split_block") {
    std::mt19937_64 rng(23);
    PrimeField f(65537);
    RampParams p(4, 2, 6, f);
    auto [A, B] = lkss::encoding_matrices(p);
    CHECK(A.rows() == 6);
    CHECK(A.cols() == 2);
    CHECK(B.rows() == 6);
    CHECK(B.cols() == 2);
    // row t is (1, x, x^2, x^3) split between A and B at column L
    for (size_t t = 0; t < 6; ++t) {
        uint64_t x = t + 1;
        CHECK(A.raw(t, 0) == 1);
        CHECK(A.raw(t, 1) == x);
        CHECK(B.raw(t, 0) == x * x % 65537);
        CHECK(B.raw(t, 1) == x * x * x % 65537);
    }

    for (int trial = 0; trial < 100; ++trial) {
        auto secret = random_symbols(f, 2, rng);
        auto randomness = random_symbols(f, 2, rng);
        BlockShares shares = lkss::split_block(secret, randomness, p);
        auto as = A.mul_vec(secret);
        auto bs = B.mul_vec(randomness);
        for (size_t t = 0; t < 6; ++t) CHECK(shares[t] == as[t] + bs[t]);
    }
}

TEST_CASE("ramp leakage profile is exact for every subset, exhaustively to T = 6") {
    for (int T = 2; T <= 6; ++T) {
        PrimeField f(7);
        for (int tau = 1; tau <= T; ++tau) {
            for (int L = 1; L <= tau; ++L) {
                RampParams p(tau, L, T, f);
                auto [A, B] = lkss::encoding_matrices(p);
                auto g = lkss::linear_ramp_g(tau, L, T);
                for (int s = 1; s <= T; ++s) {
                    for_each_subset(T, s, [&](const std::vector<int>& subset0) {
                        std::vector<int> subset;
                        for (int i : subset0) subset.push_back(i + 1);
                        // leakage matches the ramp profile at |S|
                        CHECK(lkss::rank_leakage(A, B, 1, subset) == g.at(s));
                        // randomness part alone has full possible rank
                        std::vector<size_t> rows;
                        for (int i : subset0) rows.push_back(static_cast<size_t>(i));
                        CHECK(B.select_rows(rows).rank() ==
                              static_cast<size_t>(std::min(s, tau - L)));
                    });
                }
            }
        }
    }
}
