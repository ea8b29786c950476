// SPDX-License-Identifier: Apache-2.0

#include "pets/share_format.hpp"

#include <cstring>
#include <fstream>

#include "pets/cipher.hpp"
#include "pets/errors.hpp"

namespace pets {

namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (unsigned i = 0; i < 4; ++i)
        out.push_back(uint8_t(v >> (8 * i)));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (unsigned i = 0; i < 8; ++i)
        out.push_back(uint8_t(v >> (8 * i)));
}

uint32_t get_u32(std::span<const uint8_t> in, size_t at) {
    uint32_t v = 0;
    for (unsigned i = 0; i < 4; ++i)
        v |= uint32_t(in[at + i]) << (8 * i);
    return v;
}

uint64_t get_u64(std::span<const uint8_t> in, size_t at) {
    uint64_t v = 0;
    for (unsigned i = 0; i < 8; ++i)
        v |= uint64_t(in[at + i]) << (8 * i);
    return v;
}

} // namespace

std::vector<uint8_t> serialize_share(const Share& share) {
    const ShareHeader& h = share.header;
    if (share.poly_part.size() != h.poly_part_len || share.frag_part.size() != h.frag_part_len)
        throw ParamError("share payload lengths disagree with header");

    std::vector<uint8_t> out;
    out.reserve(kShareHeaderSize);
    out.insert(out.end(), kShareMagic, kShareMagic + 4);
    out.push_back(h.version);
    out.push_back(uint8_t(h.scheme_id));
    out.push_back(h.field_id);
    out.push_back(h.cipher_id);
    out.push_back(h.t);
    out.push_back(h.n);
    out.push_back(h.index);
    out.insert(out.end(), h.nonce.begin(), h.nonce.end());
    put_u64(out, h.orig_len);
    put_u32(out, h.plain_pad);
    put_u32(out, h.tail_pad);
    put_u32(out, h.poly_part_len);
    put_u32(out, h.frag_part_len);

    SymbolVector payload = share.poly_part;
    payload.append(share.frag_part);
    const std::vector<uint8_t> packed = payload.to_bytes();
    out.insert(out.end(), packed.begin(), packed.end());
    return out;
}

Share parse_share(std::span<const uint8_t> bytes) {
    if (bytes.size() < kShareHeaderSize)
        throw ShareFormatError("share file truncated");
    if (std::memcmp(bytes.data(), kShareMagic, 4) != 0)
        throw ShareFormatError("bad magic");

    ShareHeader h;
    h.version = bytes[4];
    if (h.version != 1)
        throw ShareFormatError("unsupported share version " + std::to_string(h.version));
    h.scheme_id = SchemeId(bytes[5]);
    if (bytes[5] < 0x01 || bytes[5] > 0x03)
        throw ShareFormatError("unknown scheme id");
    h.field_id = bytes[6];
    h.cipher_id = bytes[7];
    h.t = bytes[8];
    h.n = bytes[9];
    h.index = bytes[10];
    std::memcpy(h.nonce.data(), bytes.data() + 11, 16);
    h.orig_len = get_u64(bytes, 27);
    h.plain_pad = get_u32(bytes, 35);
    h.tail_pad = get_u32(bytes, 39);
    h.poly_part_len = get_u32(bytes, 43);
    h.frag_part_len = get_u32(bytes, 47);

    const Field& field = [&]() -> const Field& {
        try {
            return Field::from_id(FieldId(h.field_id));
        } catch (const ParamError&) {
            throw ShareFormatError("unknown field id");
        }
    }();
    if (h.scheme_id == SchemeId::shamir) {
        if (h.cipher_id != 0x00)
            throw ShareFormatError("shamir shares are keyless; cipher id must be 0");
    } else {
        try {
            suite_from_id(h.cipher_id);
        } catch (const ParamError&) {
            throw ShareFormatError("unknown cipher id");
        }
    }
    if (h.t < 1 || h.t > h.n || h.index < 1 || h.index > h.n)
        throw ShareFormatError("invalid threshold or index fields");

    const size_t total_symbols = size_t(h.poly_part_len) + h.frag_part_len;
    const size_t payload_bytes = field.packed_size(total_symbols);
    if (bytes.size() != kShareHeaderSize + payload_bytes)
        throw ShareFormatError("payload length disagrees with header");

    const auto payload_span = bytes.subspan(kShareHeaderSize);
    const SymbolVector payload = SymbolVector::from_packed(field, payload_span, total_symbols);
    // Trailing bits of the final byte, if any, must be zero.
    if (field.pack(payload.symbols()) !=
        std::vector<uint8_t>(payload_span.begin(), payload_span.end()))
        throw ShareFormatError("nonzero padding bits in payload");

    Share share{h, payload.slice(0, h.poly_part_len),
                payload.slice(h.poly_part_len, h.frag_part_len)};
    return share;
}

void write_share_file(const std::filesystem::path& path, const Share& share) {
    const std::vector<uint8_t> bytes = serialize_share(share);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out)
        throw IoError("write failed: " + path.string());
}

Share read_share_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("read failed: " + path.string());
    return parse_share(bytes);
}

} // namespace pets
