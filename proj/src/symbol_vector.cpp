// SPDX-License-Identifier: Apache-2.0

#include "pets/symbol_vector.hpp"

namespace pets {

SymbolVector::SymbolVector(const Field& field, size_t length)
    : field_(&field), symbols_(length, 0) {}

SymbolVector::SymbolVector(const Field& field, std::vector<uint8_t> symbols)
    : field_(&field), symbols_(std::move(symbols)) {
    for (uint8_t s : symbols_)
        if (s >= field.order())
            throw ParamError("symbol value outside " + field.name());
}

SymbolVector SymbolVector::from_bytes(const Field& field, std::span<const uint8_t> bytes) {
    return from_packed(field, bytes, bytes.size() * field.symbols_per_byte());
}

SymbolVector SymbolVector::from_packed(const Field& field, std::span<const uint8_t> bytes,
                                       size_t symbol_count) {
    return {field, field.unpack(bytes, symbol_count)};
}

std::vector<uint8_t> SymbolVector::to_bytes() const {
    return field_->pack(symbols_);
}

void SymbolVector::set(size_t i, uint8_t value) {
    if (value >= field_->order())
        throw ParamError("symbol value outside " + field_->name());
    symbols_.at(i) = value;
}

void SymbolVector::add_in_place(const SymbolVector& other) {
    detail::require_same_field(*field_, *other.field_, "vector add");
    if (symbols_.size() != other.symbols_.size())
        throw ParamError("vector add: length mismatch");
    for (size_t i = 0; i < symbols_.size(); ++i)
        symbols_[i] ^= other.symbols_[i];
}

void SymbolVector::add_scaled_in_place(const SymbolVector& other, uint8_t scalar) {
    detail::require_same_field(*field_, *other.field_, "vector add_scaled");
    if (symbols_.size() != other.symbols_.size())
        throw ParamError("vector add_scaled: length mismatch");
    if (scalar >= field_->order())
        throw ParamError("scalar outside " + field_->name());
    if (scalar == 0)
        return;
    for (size_t i = 0; i < symbols_.size(); ++i)
        symbols_[i] ^= field_->mul(other.symbols_[i], scalar);
}

SymbolVector SymbolVector::slice(size_t pos, size_t length) const {
    if (pos + length > symbols_.size())
        throw ParamError("slice out of range");
    return {*field_, std::vector<uint8_t>(symbols_.begin() + long(pos),
                                          symbols_.begin() + long(pos + length))};
}

void SymbolVector::append(const SymbolVector& other) {
    detail::require_same_field(*field_, *other.field_, "vector append");
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

void SymbolVector::resize(size_t length) {
    symbols_.resize(length, 0);
}

bool operator==(const SymbolVector& a, const SymbolVector& b) {
    return a.field_ == b.field_ && a.symbols_ == b.symbols_;
}

} // namespace pets
