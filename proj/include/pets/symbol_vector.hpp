// SPDX-License-Identifier: Apache-2.0

#ifndef PETS_SYMBOL_VECTOR_HPP
#define PETS_SYMBOL_VECTOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pets/field.hpp"

namespace pets {

// Fixed-length sequence of field elements sharing one field. Secrets, keys,
// ciphertext blocks, and share payloads are all SymbolVectors.
class SymbolVector {
  public:
    SymbolVector(const Field& field, size_t length); // zero-filled
    SymbolVector(const Field& field, std::vector<uint8_t> symbols);

    // Unpacks whole bytes into 8/m symbols each.
    static SymbolVector from_bytes(const Field& field, std::span<const uint8_t> bytes);
    // Unpacks exactly symbol_count symbols from ceil(count*m/8) bytes.
    static SymbolVector from_packed(const Field& field, std::span<const uint8_t> bytes,
                                    size_t symbol_count);

    // Packs into ceil(size*m/8) bytes; trailing bits of the last byte are 0.
    std::vector<uint8_t> to_bytes() const;

    const Field& field() const { return *field_; }
    size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const std::vector<uint8_t>& symbols() const { return symbols_; }

    uint8_t at(size_t i) const { return symbols_.at(i); }
    void set(size_t i, uint8_t value);

    // this += other, component-wise. Self-inverse: applying twice restores.
    void add_in_place(const SymbolVector& other);
    // this += scalar * other, component-wise.
    void add_scaled_in_place(const SymbolVector& other, uint8_t scalar);

    SymbolVector slice(size_t pos, size_t length) const;
    void append(const SymbolVector& other);
    void resize(size_t length); // zero-extends or truncates

    friend bool operator==(const SymbolVector& a, const SymbolVector& b);
    friend bool operator!=(const SymbolVector& a, const SymbolVector& b) { return !(a == b); }

  private:
    const Field* field_;
    std::vector<uint8_t> symbols_;
};

} // namespace pets

#endif
