// SPDX-License-Identifier: Apache-2.0

#include "pets/field.hpp"

namespace pets {

namespace {

// Degree of a nonzero GF(2) polynomial given its bit encoding.
int poly_degree(unsigned p) {
    int d = -1;
    while (p != 0) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Remainder of carry-less division a mod b over GF(2).
unsigned poly_mod(unsigned a, unsigned b) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a))
        a ^= b << (da - db);
    return a;
}

bool is_irreducible(unsigned poly, unsigned degree) {
    // Exhaustive factor search: a reducible polynomial of degree m has a
    // factor of degree between 1 and m/2.
    for (unsigned f = 2; poly_degree(f) <= int(degree / 2); ++f) {
        if (poly_mod(poly, f) == 0)
            return false;
    }
    return true;
}

} // namespace

namespace detail {
void require_same_field(const Field& a, const Field& b, const char* where) {
    if (&a != &b)
        throw FieldMismatchError(std::string(where) + ": operands from different fields");
}
} // namespace detail

Field::Field(unsigned bits, unsigned reduction_poly, FieldId id)
    : bits_(bits), order_(1u << bits), poly_(reduction_poly), id_(id) {
    if (bits < 1 || bits > 8)
        throw ParamError("field degree must be between 1 and 8");
    if (poly_degree(reduction_poly) != int(bits))
        throw ParamError("reduction polynomial degree does not match field size");
    if (!is_irreducible(reduction_poly, bits))
        throw ParamError("reduction polynomial is reducible");

    mul_table_.resize(size_t(order_) * order_);
    for (unsigned a = 0; a < order_; ++a)
        for (unsigned b = 0; b < order_; ++b)
            mul_table_[size_t(a) * order_ + b] = mul_reference(uint8_t(a), uint8_t(b));

    inv_table_.assign(order_, 0);
    for (unsigned a = 1; a < order_; ++a)
        for (unsigned b = 1; b < order_; ++b)
            if (mul_table_[size_t(a) * order_ + b] == 1) {
                inv_table_[a] = uint8_t(b);
                break;
            }
}

const Field& Field::gf4() {
    static const Field f(2, 0b111, FieldId::gf4);
    return f;
}

const Field& Field::gf256() {
    static const Field f(8, 0x11B, FieldId::gf256);
    return f;
}

const Field& Field::from_id(FieldId id) {
    switch (id) {
    case FieldId::gf4:
        return gf4();
    case FieldId::gf256:
        return gf256();
    default:
        throw ParamError("unknown field id");
    }
}

const Field& Field::from_name(const std::string& name) {
    if (name == "gf4")
        return gf4();
    if (name == "gf256")
        return gf256();
    throw ParamError("unknown field name: " + name);
}

std::string Field::name() const {
    return "gf" + std::to_string(order_);
}

uint8_t Field::mul_reference(uint8_t a, uint8_t b) const {
    // Carry-less long multiplication, reducing whenever the accumulator
    // crosses degree m.
    unsigned acc = 0;
    unsigned aa = a;
    unsigned bb = b;
    while (bb != 0) {
        if (bb & 1)
            acc ^= aa;
        bb >>= 1;
        aa <<= 1;
        if (aa & order_)
            aa ^= poly_;
    }
    return uint8_t(acc);
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0)
        throw DivisionByZeroError("inverse of zero in " + name());
    return inv_table_[a];
}

FieldElement Field::element_from_index(unsigned i) const {
    if (i == 0 || i >= order_)
        throw EvaluationPointsExhaustedError(name() + " has only " + std::to_string(order_ - 1) +
                                             " nonzero evaluation points, index " +
                                             std::to_string(i) + " requested");
    return {*this, uint8_t(i)};
}

FieldElement Field::element(uint8_t value) const {
    return {*this, value};
}

FieldElement Field::zero() const {
    return {*this, 0};
}

FieldElement Field::one() const {
    return {*this, 1};
}

size_t Field::packed_size(size_t symbol_count) const {
    return (symbol_count * bits_ + 7) / 8;
}

std::vector<uint8_t> Field::pack(std::span<const uint8_t> symbols) const {
    if (8 % bits_ != 0)
        throw ParamError("packing only defined when the symbol size divides 8");
    std::vector<uint8_t> out(packed_size(symbols.size()), 0);
    const unsigned per_byte = symbols_per_byte();
    for (size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] >= order_)
            throw ParamError("symbol value outside " + name());
        const unsigned shift = 8 - bits_ * (unsigned(i % per_byte) + 1);
        out[i / per_byte] |= uint8_t(symbols[i] << shift);
    }
    return out;
}

std::vector<uint8_t> Field::unpack(std::span<const uint8_t> bytes, size_t symbol_count) const {
    if (8 % bits_ != 0)
        throw ParamError("packing only defined when the symbol size divides 8");
    if (bytes.size() != packed_size(symbol_count))
        throw ParamError("packed length does not match symbol count");
    std::vector<uint8_t> out(symbol_count);
    const unsigned per_byte = symbols_per_byte();
    const uint8_t mask = uint8_t(order_ - 1);
    for (size_t i = 0; i < symbol_count; ++i) {
        const unsigned shift = 8 - bits_ * (unsigned(i % per_byte) + 1);
        out[i] = uint8_t(bytes[i / per_byte] >> shift) & mask;
    }
    return out;
}

FieldElement::FieldElement(const Field& field, uint8_t value) : field_(&field), value_(value) {
    if (value >= field.order())
        throw ParamError("element value " + std::to_string(value) + " outside " + field.name());
}

FieldElement operator+(FieldElement a, FieldElement b) {
    detail::require_same_field(*a.field_, *b.field_, "add");
    return {*a.field_, uint8_t(a.value_ ^ b.value_)};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    detail::require_same_field(*a.field_, *b.field_, "mul");
    return {*a.field_, a.field_->mul(a.value_, b.value_)};
}

bool operator==(FieldElement a, FieldElement b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

} // namespace pets
