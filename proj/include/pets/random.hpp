// SPDX-License-Identifier: Apache-2.0

#ifndef PETS_RANDOM_HPP
#define PETS_RANDOM_HPP

#include <cstdint>
#include <span>

#include "pets/field.hpp"
#include "pets/symbol_vector.hpp"

namespace pets {

// Injected entropy capability. Implementations are not thread-safe; do not
// share one instance across concurrent calls without external ordering.
class RandomSource {
  public:
    virtual ~RandomSource() = default;
    virtual void fill(std::span<uint8_t> out) = 0;

    std::vector<uint8_t> bytes(size_t n);
    // Uniform field symbols; q is a power of two so masking a random byte
    // to m bits is exactly uniform.
    SymbolVector symbols(const Field& field, size_t n);
};

// Operating-system entropy. The production source.
class SystemRandom final : public RandomSource {
  public:
    void fill(std::span<uint8_t> out) override;
};

// Deterministic splitmix64 stream, identical on every platform. Test and
// regression use only.
class SeededRandom final : public RandomSource {
  public:
    explicit SeededRandom(uint64_t seed) : state_(seed) {}
    void fill(std::span<uint8_t> out) override;

  private:
    uint64_t state_;
    uint8_t buf_[8] = {};
    unsigned buffered_ = 0;
};

namespace detail {
// splitmix64 output mix; also the core of the test keystream suite.
uint64_t mix64(uint64_t z);
} // namespace detail

} // namespace pets

#endif
