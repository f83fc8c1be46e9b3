#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "lkss/field.hpp"

namespace lkss {

/// Source of uniform field symbols. Encoding consumes from it explicitly so
/// that callers control (and can replay or count) every random symbol.
class SymbolStream {
public:
    virtual ~SymbolStream() = default;

    FieldElement next() {
        ++consumed_;
        return do_next();
    }

    uint64_t consumed() const { return consumed_; }

protected:
    virtual FieldElement do_next() = 0;

private:
    uint64_t consumed_ = 0;
};

/// Replays a fixed symbol vector; throws once it runs dry. Used by tests and
/// by the exhaustive leakage oracle, where the "randomness" is enumerated.
class FixedStream : public SymbolStream {
public:
    explicit FixedStream(std::vector<FieldElement> symbols)
        : symbols_(std::move(symbols)) {}

protected:
    FieldElement do_next() override {
        if (pos_ >= symbols_.size())
            throw RandomnessExhaustedError("fixed randomness stream exhausted after " +
                                           std::to_string(symbols_.size()) + " symbols");
        return symbols_[pos_++];
    }

private:
    std::vector<FieldElement> symbols_;
    size_t pos_ = 0;
};

/// Uniform symbols from a seeded mt19937_64 via rejection sampling, so the
/// stream is reproducible across platforms. Not a CSPRNG; the seeded mode
/// exists for tests and deterministic replay only.
class EngineStream : public SymbolStream {
public:
    EngineStream(const PrimeField& field, uint64_t seed) : field_(field), eng_(seed) {}

    /// Seeded from the OS entropy source.
    explicit EngineStream(const PrimeField& field) : field_(field) {
        std::random_device rd;
        std::seed_seq seq{rd(), rd(), rd(), rd(), rd(), rd(), rd(), rd()};
        eng_.seed(seq);
    }

    uint64_t next_u64() { return eng_(); }

    /// 16 identifier bytes drawn from the engine (little-endian word order).
    std::array<uint8_t, 16> next_id() {
        std::array<uint8_t, 16> id{};
        for (int w = 0; w < 2; ++w) {
            uint64_t x = eng_();
            for (int i = 0; i < 8; ++i) id[static_cast<size_t>(w * 8 + i)] = static_cast<uint8_t>(x >> (8 * i));
        }
        return id;
    }

protected:
    FieldElement do_next() override {
        const uint64_t q = field_.modulus();
        // Rejection below the largest multiple of q keeps the draw uniform.
        const uint64_t limit = UINT64_MAX - UINT64_MAX % q;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return field_.element(x % q);
    }

private:
    PrimeField field_;
    std::mt19937_64 eng_;
};

}  // namespace lkss
