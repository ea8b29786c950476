// SPDX-License-Identifier: Apache-2.0

#include "pets/random.hpp"

#include <sodium.h>

namespace pets {

namespace detail {

uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace detail

std::vector<uint8_t> RandomSource::bytes(size_t n) {
    std::vector<uint8_t> out(n);
    fill(out);
    return out;
}

SymbolVector RandomSource::symbols(const Field& field, size_t n) {
    std::vector<uint8_t> raw(n);
    fill(raw);
    const uint8_t mask = uint8_t(field.order() - 1);
    for (auto& b : raw)
        b &= mask;
    return {field, std::move(raw)};
}

void SystemRandom::fill(std::span<uint8_t> out) {
    if (sodium_init() < 0)
        throw RngError("libsodium initialization failed");
    randombytes_buf(out.data(), out.size());
}

void SeededRandom::fill(std::span<uint8_t> out) {
    for (auto& b : out) {
        if (buffered_ == 0) {
            state_ += 0x9E3779B97F4A7C15ULL;
            const uint64_t z = detail::mix64(state_);
            for (unsigned i = 0; i < 8; ++i)
                buf_[i] = uint8_t(z >> (8 * i));
            buffered_ = 8;
        }
        b = buf_[8 - buffered_];
        --buffered_;
    }
}

} // namespace pets
