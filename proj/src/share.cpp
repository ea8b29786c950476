// SPDX-License-Identifier: Apache-2.0

#include "pets/share.hpp"

#include "pets/errors.hpp"

namespace pets {

const char* scheme_name(SchemeId id) {
    switch (id) {
    case SchemeId::shamir:
        return "shamir";
    case SchemeId::ssms:
        return "ssms";
    case SchemeId::pets:
        return "pets";
    }
    throw ParamError("unknown scheme id");
}

SchemeId scheme_from_name(std::string_view name) {
    for (SchemeId id : {SchemeId::shamir, SchemeId::ssms, SchemeId::pets})
        if (scheme_name(id) == name)
            return id;
    throw ParamError("unknown scheme: " + std::string(name));
}

const ShareHeader& validate_share_set(std::span<const Share> shares) {
    if (shares.empty())
        throw InsufficientSharesError("no shares supplied");
    const ShareHeader& head = shares.front().header;
    for (const Share& s : shares) {
        if (!s.header.compatible_with(head))
            throw HeaderMismatchError("shares disagree on framing metadata");
        if (s.header.index < 1 || s.header.index > s.header.n)
            throw HeaderMismatchError("share index " + std::to_string(s.header.index) +
                                      " outside [1, n]");
        if (s.poly_part.size() != s.header.poly_part_len ||
            s.frag_part.size() != s.header.frag_part_len)
            throw HeaderMismatchError("share payload lengths disagree with header");
        for (const Share& other : shares) {
            if (&other == &s)
                break;
            if (other.header.index == s.header.index)
                throw DuplicateIndexError("duplicate share index " +
                                          std::to_string(s.header.index));
        }
    }
    if (shares.size() < head.t)
        throw InsufficientSharesError("reconstruction needs " + std::to_string(head.t) +
                                      " shares, got " + std::to_string(shares.size()));
    return head;
}

bool ShareHeader::compatible_with(const ShareHeader& other) const {
    return version == other.version && scheme_id == other.scheme_id &&
           field_id == other.field_id && cipher_id == other.cipher_id && t == other.t &&
           n == other.n && nonce == other.nonce && orig_len == other.orig_len &&
           plain_pad == other.plain_pad && tail_pad == other.tail_pad &&
           poly_part_len == other.poly_part_len && frag_part_len == other.frag_part_len;
}

} // namespace pets
