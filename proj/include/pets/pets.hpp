// SPDX-License-Identifier: Apache-2.0

/*
 * Pseudorandom Encryption Threshold Sharing. Encrypt the secret, cut the
 * ciphertext into t-1 key-sized head blocks plus a tail, embed the key as
 * the constant term of f(x) = K + E_1 x + ... + E_{t-1} x^{t-1}, disperse
 * the tail. Share i is (f(alpha_i), X_i): sym_K + ceil(tail/t) symbols,
 * which is (|S| + |K|)/t when no padding is needed.
 *
 * The plaintext is zero-padded before encryption so the ciphertext always
 * covers the t-1 head blocks; padding ciphertext instead would bolt
 * non-pseudorandom zeros onto E_{t-1}.
 */

#ifndef PETS_PETS_HPP
#define PETS_PETS_HPP

#include "pets/cipher.hpp"
#include "pets/share.hpp"

namespace pets {

struct PetsGeometry {
    unsigned t = 0;
    unsigned n = 0;
    size_t orig_len = 0;   // secret bytes
    size_t sym_S = 0;      // plaintext/ciphertext symbols, after plaintext padding
    size_t sym_K = 0;      // key symbols
    size_t plain_pad = 0;  // zero symbols appended to the plaintext
    size_t head_blocks = 0; // t - 1 blocks of sym_K symbols each
    size_t tail_len = 0;   // sym_S - (t-1)*sym_K, always >= 0
    size_t frag_len = 0;   // ceil(tail_len / t)
    size_t tail_pad = 0;   // zero symbols appended to the tail for dispersal
    size_t payload = 0;    // per-share symbols: sym_K + frag_len

    bool pad_free() const { return plain_pad == 0 && tail_pad == 0; }

    static PetsGeometry plan_symbols(size_t orig_sym, size_t sym_K, unsigned t, unsigned n);
};

// Geometry for a byte secret under a concrete suite and field; validates
// n against the field capacity.
PetsGeometry pets_plan(size_t secret_len, unsigned t, unsigned n, const CipherSuite& suite,
                       const Field& field);

// The only randomness is the key draw.
std::vector<Share> pets_split(std::span<const uint8_t> secret, unsigned t, unsigned n,
                              const CipherSuite& suite, const Field& field, RandomSource& rng);
std::vector<uint8_t> pets_join(std::span<const Share> shares);

// Ideal-cipher-limit census over a scalar key: replaces the head blocks by
// exhaustively enumerated uniform symbols and checks that, for every fixed
// key and every unauthorized subset of size t-1, the observed evaluation
// tuples are exactly uniform. Throws SpaceTooLargeError beyond q^t = 2^16.
bool pets_uniformity_census(unsigned t, unsigned n, const Field& field);

} // namespace pets

#endif
