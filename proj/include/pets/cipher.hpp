// SPDX-License-Identifier: Apache-2.0

/*
 * Length-preserving encryption behind one interface: |enc(K,S)| = |S| and
 * dec(K, enc(K, S)) = S for every key and message.
 *
 * Encryption is deterministic; keys are single-use, drawn fresh for every
 * sharing. The share header reserves a nonce field for future multi-use
 * hardening, zero in version 1.
 *
 * Registered suites:
 *   0x01 toy-otp         repeating-key XOR, 1-byte key; small enough for
 *                        exhaustive key-sensitivity checks
 *   0x02 test-keystream  XOR with a keyed counter-mode splitmix64 keystream,
 *                        256-bit key; deterministic for regression vectors,
 *                        not cryptographically strong
 *   0x03 stream256       ChaCha20 keystream, 256-bit key; the production
 *                        default
 */

#ifndef PETS_CIPHER_HPP
#define PETS_CIPHER_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pets/random.hpp"

namespace pets {

using SecretKey = std::vector<uint8_t>;

class CipherSuite {
  public:
    virtual ~CipherSuite() = default;

    virtual uint8_t id() const = 0;
    virtual std::string_view name() const = 0;
    virtual size_t key_len() const = 0; // bytes

    virtual std::vector<uint8_t> enc(std::span<const uint8_t> key,
                                     std::span<const uint8_t> msg) const = 0;
    virtual std::vector<uint8_t> dec(std::span<const uint8_t> key,
                                     std::span<const uint8_t> ciphertext) const = 0;

    // key_len uniformly random bytes from rng.
    SecretKey keygen(RandomSource& rng) const;

    // Key as |K| * 8/m field symbols under the module packing rule.
    SymbolVector key_symbols(const Field& field, const SecretKey& key) const;

  protected:
    void check_key(std::span<const uint8_t> key) const;
};

const CipherSuite& suite_from_id(uint8_t id);
const CipherSuite& suite_from_name(std::string_view name);

const CipherSuite& toy_otp();
const CipherSuite& test_keystream();
const CipherSuite& stream256();

// Exhaustive key-sensitivity search: true iff for every key k and every key
// bit position i there is a message m of msg_len bytes with
// dec(flip_bit(k, i), enc(k, m)) != m. A false result exhibits a key bit
// that decryption never depends on. Key and message spaces are limited to
// 16 bits each; larger suites throw SpaceTooLargeError.
bool check_non_redundant(const CipherSuite& suite, size_t msg_len);

} // namespace pets

#endif
