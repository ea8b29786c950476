// SPDX-License-Identifier: Apache-2.0

/*
 * Secret Sharing Made Short: Shamir-share the encryption key, disperse the
 * whole ciphertext. Per-share payload is |K| + ceil(|S|/t) symbols. Kept on
 * the same field packing, dispersal, and framing as the other schemes so
 * size comparisons isolate the scheme difference.
 */

#ifndef PETS_SSMS_HPP
#define PETS_SSMS_HPP

#include "pets/cipher.hpp"
#include "pets/share.hpp"

namespace pets {

struct SsmsGeometry {
    unsigned t = 0;
    unsigned n = 0;
    size_t sym_S = 0;    // ciphertext (= secret) length in symbols
    size_t sym_K = 0;    // key length in symbols
    size_t frag_len = 0; // ceil(sym_S / t)
    size_t tail_pad = 0; // dispersal padding symbols
    size_t payload = 0;  // sym_K + frag_len

    // In bits: multiply symbol counts by the field's m.
    static SsmsGeometry plan_symbols(size_t sym_S, size_t sym_K, unsigned t, unsigned n);
};

std::vector<Share> ssms_split(std::span<const uint8_t> secret, unsigned t, unsigned n,
                              const CipherSuite& suite, const Field& field, RandomSource& rng);
std::vector<uint8_t> ssms_join(std::span<const Share> shares);

} // namespace pets

#endif
