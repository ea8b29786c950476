// SPDX-License-Identifier: Apache-2.0

/*
 * Bit-exact share file format, version 1.
 *
 *   offset  size  field
 *        0     4  magic "PET1"
 *        4     1  version (1)
 *        5     1  scheme id   0x01 shamir / 0x02 ssms / 0x03 pets
 *        6     1  field id    0x01 gf4 / 0x02 gf256
 *        7     1  cipher id   0x00 none / 0x01 toy-otp /
 *                             0x02 test-keystream / 0x03 stream256
 *        8     1  t
 *        9     1  n
 *       10     1  index
 *       11    16  reserved nonce, zero in v1
 *       27     8  orig_len, u64 LE (secret bytes)
 *       35     4  plain_pad, u32 LE (symbols)
 *       39     4  tail_pad, u32 LE (symbols)
 *       43     4  poly_part_len, u32 LE (symbols)
 *       47     4  frag_part_len, u32 LE (symbols)
 *       51     -  payload: poly part then fragment part, packed as one
 *                 symbol stream of ceil((poly+frag)*m/8) bytes
 */

#ifndef PETS_SHARE_FORMAT_HPP
#define PETS_SHARE_FORMAT_HPP

#include <filesystem>

#include "pets/share.hpp"

namespace pets {

inline constexpr char kShareMagic[4] = {'P', 'E', 'T', '1'};
inline constexpr size_t kShareHeaderSize = 51;

std::vector<uint8_t> serialize_share(const Share& share);
// Rejects bad magic, unsupported version, truncation, trailing garbage,
// nonzero padding bits, and inconsistent header fields.
Share parse_share(std::span<const uint8_t> bytes);

void write_share_file(const std::filesystem::path& path, const Share& share);
Share read_share_file(const std::filesystem::path& path);

} // namespace pets

#endif
