// SPDX-License-Identifier: Apache-2.0

#ifndef PETS_SHARE_HPP
#define PETS_SHARE_HPP

#include <array>
#include <cstdint>

#include "pets/symbol_vector.hpp"

namespace pets {

enum class SchemeId : uint8_t {
    shamir = 0x01,
    ssms = 0x02,
    pets = 0x03,
};

const char* scheme_name(SchemeId id);
SchemeId scheme_from_name(std::string_view name);

// Framing metadata every share carries. All shares of one sharing agree on
// every field except index. cipher_id is 0x00 for the keyless Shamir scheme.
struct ShareHeader {
    uint8_t version = 1;
    SchemeId scheme_id = SchemeId::shamir;
    uint8_t field_id = 0;
    uint8_t cipher_id = 0;
    uint8_t t = 0;
    uint8_t n = 0;
    uint8_t index = 0;
    std::array<uint8_t, 16> nonce = {}; // reserved, zero in version 1
    uint64_t orig_len = 0;              // secret length in bytes
    uint32_t plain_pad = 0;             // plaintext padding, symbols
    uint32_t tail_pad = 0;              // dispersal padding, symbols
    uint32_t poly_part_len = 0;         // symbols
    uint32_t frag_part_len = 0;         // symbols

    // Equality over everything but index.
    bool compatible_with(const ShareHeader& other) const;
};

// One participant's bundle: polynomial evaluation part plus dispersal part.
struct Share {
    ShareHeader header;
    SymbolVector poly_part;
    SymbolVector frag_part;

    unsigned index() const { return header.index; }
};

// Checks a reconstruction set: headers pairwise compatible, part lengths
// matching the header, indices distinct and in [1, n], and at least t
// shares present. Returns the common header.
const ShareHeader& validate_share_set(std::span<const Share> shares);

} // namespace pets

#endif
