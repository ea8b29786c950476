// SPDX-License-Identifier: Apache-2.0

/*
 * Arithmetic in binary extension fields GF(2^m), m <= 8.
 *
 * Addition is XOR; multiplication is carry-less polynomial multiplication
 * reduced modulo a fixed irreducible polynomial. Two fields are wired for
 * serialization: GF(4) with x^2+x+1 (id 0x01) and GF(256) with
 * x^8+x^4+x^3+x+1 (id 0x02). Other fields can be constructed for tests but
 * have no wire id.
 *
 * Symbol packing: a byte holds 8/m symbols, most significant bits first,
 * so GF(4) packs 4 symbols per byte and GF(256) packs 1.
 */

#ifndef PETS_FIELD_HPP
#define PETS_FIELD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pets/errors.hpp"

namespace pets {

enum class FieldId : uint8_t {
    none = 0x00, // test-only field, not serializable
    gf4 = 0x01,
    gf256 = 0x02,
};

class FieldElement;

class Field {
  public:
    // reduction_poly encodes the full irreducible polynomial including the
    // x^m term, e.g. 0b111 for x^2+x+1 and 0x11B for x^8+x^4+x^3+x+1.
    // Irreducibility is verified by exhaustive factor search; multiplication
    // and inverse tables are built once from the carry-less reference.
    Field(unsigned bits, unsigned reduction_poly, FieldId id = FieldId::none);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    static const Field& gf4();
    static const Field& gf256();
    static const Field& from_id(FieldId id);
    static const Field& from_name(const std::string& name); // "gf4" / "gf256"

    unsigned bits() const { return bits_; }
    unsigned order() const { return order_; }             // q = 2^m
    unsigned reduction_poly() const { return poly_; }
    FieldId id() const { return id_; }
    std::string name() const;

    uint8_t add(uint8_t a, uint8_t b) const { return a ^ b; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_table_[size_t(a) * order_ + b]; }
    uint8_t inv(uint8_t a) const;
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

    // Carry-less multiply with modular reduction, no tables. Kept public as
    // the ground truth the tables are checked against.
    uint8_t mul_reference(uint8_t a, uint8_t b) const;

    // Canonical evaluation point alpha_i for participant i: the element with
    // value i, defined for 1 <= i <= q-1. Indices at or above q throw
    // EvaluationPointsExhaustedError; this is the n < q bound.
    FieldElement element_from_index(unsigned i) const;

    FieldElement element(uint8_t value) const;
    FieldElement zero() const;
    FieldElement one() const;

    // --- symbol packing -----------------------------------------------
    unsigned symbols_per_byte() const { return 8 / bits_; }
    size_t packed_size(size_t symbol_count) const; // = ceil(count*m/8)
    std::vector<uint8_t> pack(std::span<const uint8_t> symbols) const;
    std::vector<uint8_t> unpack(std::span<const uint8_t> bytes, size_t symbol_count) const;

  private:
    unsigned bits_;
    unsigned order_;
    unsigned poly_;
    FieldId id_;
    std::vector<uint8_t> mul_table_; // q*q, built at construction
    std::vector<uint8_t> inv_table_; // q, inv_table_[0] unused
};

// One element of GF(2^m) together with its field. Arithmetic between
// elements of different fields throws FieldMismatchError.
class FieldElement {
  public:
    FieldElement(const Field& field, uint8_t value);

    uint8_t value() const { return value_; }
    const Field& field() const { return *field_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement inverse() const { return {*field_, field_->inv(value_)}; }

    friend FieldElement operator+(FieldElement a, FieldElement b);
    friend FieldElement operator*(FieldElement a, FieldElement b);
    friend bool operator==(FieldElement a, FieldElement b);
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

  private:
    const Field* field_;
    uint8_t value_;
};

namespace detail {
void require_same_field(const Field& a, const Field& b, const char* where);
}

} // namespace pets

#endif
