// SPDX-License-Identifier: Apache-2.0

#include "pets/cipher.hpp"

#include <sodium.h>

#include "pets/errors.hpp"

namespace pets {

namespace {

class ToyOtp final : public CipherSuite {
  public:
    uint8_t id() const override { return 0x01; }
    std::string_view name() const override { return "toy-otp"; }
    size_t key_len() const override { return 1; }

    std::vector<uint8_t> enc(std::span<const uint8_t> key,
                             std::span<const uint8_t> msg) const override {
        check_key(key);
        std::vector<uint8_t> out(msg.begin(), msg.end());
        for (size_t i = 0; i < out.size(); ++i)
            out[i] ^= key[i % key.size()];
        return out;
    }

    std::vector<uint8_t> dec(std::span<const uint8_t> key,
                             std::span<const uint8_t> ciphertext) const override {
        return enc(key, ciphertext); // XOR is its own inverse
    }
};

// Counter-mode keystream: block i is a splitmix64-style mix chain over the
// four key words, seeded by the block counter. Random access by block index
// makes the stream splittable.
class TestKeystream final : public CipherSuite {
  public:
    uint8_t id() const override { return 0x02; }
    std::string_view name() const override { return "test-keystream"; }
    size_t key_len() const override { return 32; }

    std::vector<uint8_t> enc(std::span<const uint8_t> key,
                             std::span<const uint8_t> msg) const override {
        check_key(key);
        uint64_t k[4];
        for (unsigned w = 0; w < 4; ++w) {
            k[w] = 0;
            for (unsigned i = 0; i < 8; ++i)
                k[w] |= uint64_t(key[8 * w + i]) << (8 * i);
        }
        std::vector<uint8_t> out(msg.begin(), msg.end());
        for (size_t block = 0; block * 8 < out.size(); ++block) {
            uint64_t z = uint64_t(block) * 0x9E3779B97F4A7C15ULL;
            for (unsigned w = 0; w < 4; ++w)
                z = detail::mix64(z ^ k[w]);
            const size_t limit = std::min(out.size(), block * 8 + 8);
            for (size_t i = block * 8; i < limit; ++i)
                out[i] ^= uint8_t(z >> (8 * (i % 8)));
        }
        return out;
    }

    std::vector<uint8_t> dec(std::span<const uint8_t> key,
                             std::span<const uint8_t> ciphertext) const override {
        return enc(key, ciphertext);
    }
};

class Stream256 final : public CipherSuite {
  public:
    uint8_t id() const override { return 0x03; }
    std::string_view name() const override { return "stream256"; }
    size_t key_len() const override { return crypto_stream_chacha20_KEYBYTES; }

    std::vector<uint8_t> enc(std::span<const uint8_t> key,
                             std::span<const uint8_t> msg) const override {
        check_key(key);
        if (sodium_init() < 0)
            throw RngError("libsodium initialization failed");
        // Single-use keys, so a fixed zero nonce keeps enc deterministic and
        // length preserving.
        static const uint8_t nonce[crypto_stream_chacha20_NONCEBYTES] = {};
        std::vector<uint8_t> out(msg.size());
        crypto_stream_chacha20_xor(out.data(), msg.data(), msg.size(), nonce, key.data());
        return out;
    }

    std::vector<uint8_t> dec(std::span<const uint8_t> key,
                             std::span<const uint8_t> ciphertext) const override {
        return enc(key, ciphertext);
    }
};

} // namespace

SecretKey CipherSuite::keygen(RandomSource& rng) const {
    return rng.bytes(key_len());
}

SymbolVector CipherSuite::key_symbols(const Field& field, const SecretKey& key) const {
    check_key(key);
    return SymbolVector::from_bytes(field, key);
}

void CipherSuite::check_key(std::span<const uint8_t> key) const {
    if (key.size() != key_len())
        throw ParamError(std::string(name()) + ": key must be " + std::to_string(key_len()) +
                         " bytes");
}

const CipherSuite& toy_otp() {
    static const ToyOtp suite;
    return suite;
}

const CipherSuite& test_keystream() {
    static const TestKeystream suite;
    return suite;
}

const CipherSuite& stream256() {
    static const Stream256 suite;
    return suite;
}

const CipherSuite& suite_from_id(uint8_t id) {
    switch (id) {
    case 0x01:
        return toy_otp();
    case 0x02:
        return test_keystream();
    case 0x03:
        return stream256();
    default:
        throw ParamError("unknown cipher suite id");
    }
}

const CipherSuite& suite_from_name(std::string_view name) {
    for (uint8_t id : {0x01, 0x02, 0x03})
        if (suite_from_id(id).name() == name)
            return suite_from_id(id);
    throw ParamError("unknown cipher suite: " + std::string(name));
}

bool check_non_redundant(const CipherSuite& suite, size_t msg_len) {
    if (suite.key_len() > 2 || msg_len > 2)
        throw SpaceTooLargeError("non-redundancy search needs key and message spaces of at "
                                 "most 16 bits");
    const size_t key_bits = suite.key_len() * 8;
    const uint32_t key_count = 1u << key_bits;
    const uint32_t msg_count = 1u << (msg_len * 8);

    std::vector<uint8_t> key(suite.key_len());
    std::vector<uint8_t> msg(msg_len);
    for (uint32_t k = 0; k < key_count; ++k) {
        for (size_t b = 0; b < key.size(); ++b)
            key[b] = uint8_t(k >> (8 * b));
        for (size_t bit = 0; bit < key_bits; ++bit) {
            std::vector<uint8_t> flipped = key;
            flipped[bit / 8] ^= uint8_t(1u << (bit % 8));
            bool sensitive = false;
            for (uint32_t m = 0; m < msg_count && !sensitive; ++m) {
                for (size_t b = 0; b < msg.size(); ++b)
                    msg[b] = uint8_t(m >> (8 * b));
                sensitive = suite.dec(flipped, suite.enc(key, msg)) != msg;
            }
            if (!sensitive)
                return false; // key bit `bit` of key k never matters
        }
    }
    return true;
}

} // namespace pets
