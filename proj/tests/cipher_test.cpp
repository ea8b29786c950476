// SPDX-License-Identifier: Apache-2.0

#include "pets/cipher.hpp"

#include <cmath>
#include <gtest/gtest.h>

#include "toy_suites.hpp"

using namespace pets;

namespace {

const CipherSuite* kSuites[] = {&toy_otp(), &test_keystream(), &stream256()};

} // namespace

TEST(Cipher, KeygenDeterministicUnderFixedSeed) {
    for (const CipherSuite* suite : kSuites) {
        SeededRandom a(0), b(0);
        EXPECT_EQ(suite->keygen(a), suite->keygen(b));
    }
}

TEST(Cipher, DistinctSeedsGiveDistinctKeys) {
    for (const CipherSuite* suite : kSuites) {
        SeededRandom a(0), b(1);
        EXPECT_NE(suite->keygen(a), suite->keygen(b));
    }
}

TEST(Cipher, KeyLengths) {
    EXPECT_EQ(toy_otp().key_len(), 1u);
    EXPECT_EQ(test_keystream().key_len(), 32u);
    EXPECT_EQ(stream256().key_len(), 32u);
    for (const CipherSuite* suite : kSuites) {
        SeededRandom rng(3);
        EXPECT_EQ(suite->keygen(rng).size(), suite->key_len());
    }
}

TEST(Cipher, EmptyMessage) {
    for (const CipherSuite* suite : kSuites) {
        SeededRandom rng(4);
        const SecretKey key = suite->keygen(rng);
        EXPECT_TRUE(suite->enc(key, {}).empty());
        EXPECT_TRUE(suite->dec(key, {}).empty());
    }
}

TEST(Cipher, ToyOtpZeroKeyZeroMessage) {
    const std::vector<uint8_t> key{0x00};
    const std::vector<uint8_t> msg(8, 0x00);
    EXPECT_EQ(toy_otp().enc(key, msg), msg);
}

TEST(Cipher, RoundTripRandom) {
    for (const CipherSuite* suite : kSuites) {
        SeededRandom rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const SecretKey key = suite->keygen(rng);
            const auto msg = rng.bytes(rng.bytes(1)[0]);
            EXPECT_EQ(suite->dec(key, suite->enc(key, msg)), msg);
        }
    }
}

TEST(Cipher, WrongKeyFailsToDecrypt) {
    for (const CipherSuite* suite : kSuites) {
        SeededRandom rng(6);
        const SecretKey key = suite->keygen(rng);
        const SecretKey other = suite->keygen(rng);
        ASSERT_NE(key, other);
        const auto msg = rng.bytes(64);
        EXPECT_NE(suite->dec(other, suite->enc(key, msg)), msg);
    }
}

TEST(Cipher, LengthPreservationSweep) {
    SeededRandom rng(7);
    for (const CipherSuite* suite : kSuites) {
        const SecretKey key = suite->keygen(rng);
        for (size_t len : {size_t(0), size_t(1), size_t(4096)}) {
            EXPECT_EQ(suite->enc(key, rng.bytes(len)).size(), len);
        }
        for (int trial = 0; trial < 50; ++trial) {
            const auto two = rng.bytes(2);
            const size_t len = (size_t(two[0]) << 8 | two[1]) % 4097;
            const auto msg = rng.bytes(len);
            EXPECT_EQ(suite->enc(key, msg).size(), len);
        }
    }
}

TEST(Cipher, KeystreamUniformitySmokeTest) {
    // Encrypting 1 MiB of zeros exposes the keystream; each byte value
    // should appear 4096 +- 5 sigma times (sigma ~ 63.9).
    SeededRandom rng(8);
    const SecretKey key = test_keystream().keygen(rng);
    const std::vector<uint8_t> zeros(1u << 20, 0);
    const auto stream = test_keystream().enc(key, zeros);

    std::vector<unsigned> counts(256, 0);
    for (uint8_t b : stream)
        ++counts[b];
    const double expected = double(stream.size()) / 256.0;
    const double sigma = std::sqrt(double(stream.size()) * (1.0 / 256.0) * (255.0 / 256.0));
    for (unsigned v = 0; v < 256; ++v)
        EXPECT_LT(std::abs(double(counts[v]) - expected), 5.0 * sigma)
            << "byte value " << v << " count " << counts[v];
}

TEST(Cipher, KeySymbolsRoundTrip) {
    SeededRandom rng(9);
    for (const CipherSuite* suite : kSuites) {
        const SecretKey key = suite->keygen(rng);
        for (const Field* f : {&Field::gf4(), &Field::gf256()}) {
            const SymbolVector sym = suite->key_symbols(*f, key);
            EXPECT_EQ(sym.size(), key.size() * f->symbols_per_byte());
            EXPECT_EQ(sym.to_bytes(), key);
        }
    }
}

TEST(Cipher, Registry) {
    EXPECT_EQ(suite_from_id(0x01).name(), "toy-otp");
    EXPECT_EQ(suite_from_id(0x02).name(), "test-keystream");
    EXPECT_EQ(suite_from_id(0x03).name(), "stream256");
    EXPECT_EQ(&suite_from_name("stream256"), &stream256());
    EXPECT_THROW(suite_from_id(0x09), ParamError);
    EXPECT_THROW(suite_from_name("rot13"), ParamError);
}

TEST(Cipher, NonRedundantToyOtp) {
    // Flipping key bit i flips plaintext bit i of every message.
    EXPECT_TRUE(check_non_redundant(toy_otp(), 1));
}

TEST(Cipher, NonRedundantRejectsRedundantSuite) {
    EXPECT_FALSE(check_non_redundant(pets::testsupport::RedundantOtp(), 1));
}

TEST(Cipher, NonRedundantToyPermKeystream) {
    // Pinned after one exhaustive run: the permutation keystream makes every
    // key bit matter.
    EXPECT_TRUE(check_non_redundant(pets::testsupport::ToyPermKeystream(), 1));
}

TEST(Cipher, NonRedundantSpaceGuard) {
    EXPECT_THROW(check_non_redundant(test_keystream(), 1), SpaceTooLargeError);
    EXPECT_THROW(check_non_redundant(toy_otp(), 3), SpaceTooLargeError);
}

TEST(Cipher, WrongKeyLengthThrows) {
    const std::vector<uint8_t> short_key{0x01};
    EXPECT_THROW(test_keystream().enc(short_key, {}), ParamError);
}
