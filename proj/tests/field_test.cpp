// SPDX-License-Identifier: Apache-2.0

#include "pets/field.hpp"

#include <gtest/gtest.h>

#include "pets/random.hpp"

using namespace pets;

namespace {
constexpr uint8_t kAlpha = 2;   // alpha in gf4
constexpr uint8_t kAlphaP1 = 3; // alpha + 1
} // namespace

TEST(Field, Gf4AdditionIsXor) {
    const Field& f = Field::gf4();
    EXPECT_EQ(f.add(kAlpha, kAlphaP1), 1); // alpha + (alpha+1) = 1
    for (unsigned a = 0; a < 4; ++a) {
        EXPECT_EQ(f.add(uint8_t(a), 0), a);          // identity
        EXPECT_EQ(f.add(uint8_t(a), uint8_t(a)), 0); // self-inverse
    }
}

TEST(Field, Gf256Addition) {
    EXPECT_EQ(Field::gf256().add(0x57, 0x83), 0xD4);
}

TEST(Field, AddIsInvolution) {
    for (const Field* f : {&Field::gf4(), &Field::gf256()}) {
        SeededRandom rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const uint8_t x = rng.bytes(1)[0] & uint8_t(f->order() - 1);
            const uint8_t y = rng.bytes(1)[0] & uint8_t(f->order() - 1);
            EXPECT_EQ(f->add(f->add(x, y), y), x);
        }
    }
}

TEST(Field, Gf4AlphaSquared) {
    // The defining relation: alpha^2 = alpha + 1.
    EXPECT_EQ(Field::gf4().mul(kAlpha, kAlpha), kAlphaP1);
}

TEST(Field, MultiplicativeIdentity) {
    const Field& gf4 = Field::gf4();
    for (unsigned a = 0; a < 4; ++a)
        EXPECT_EQ(gf4.mul(uint8_t(a), 1), a);
    const Field& gf256 = Field::gf256();
    for (unsigned a = 0; a < 256; ++a)
        EXPECT_EQ(gf256.mul(uint8_t(a), 1), a);
}

TEST(Field, Gf256OneReductionStep) {
    // x * x^7 wraps once around the reduction polynomial.
    EXPECT_EQ(Field::gf256().mul(0x02, 0x80), 0x1B);
}

TEST(Field, TableMatchesReferenceExhaustively) {
    for (const Field* f : {&Field::gf4(), &Field::gf256()}) {
        for (unsigned a = 0; a < f->order(); ++a)
            for (unsigned b = 0; b < f->order(); ++b)
                ASSERT_EQ(f->mul(uint8_t(a), uint8_t(b)),
                          f->mul_reference(uint8_t(a), uint8_t(b)));
    }
}

TEST(Field, AxiomsExhaustiveGf4) {
    const Field& f = Field::gf4();
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b) {
            EXPECT_EQ(f.mul(uint8_t(a), uint8_t(b)), f.mul(uint8_t(b), uint8_t(a)));
            for (unsigned c = 0; c < 4; ++c) {
                EXPECT_EQ(f.mul(f.mul(uint8_t(a), uint8_t(b)), uint8_t(c)),
                          f.mul(uint8_t(a), f.mul(uint8_t(b), uint8_t(c))));
                EXPECT_EQ(f.mul(uint8_t(a), f.add(uint8_t(b), uint8_t(c))),
                          f.add(f.mul(uint8_t(a), uint8_t(b)), f.mul(uint8_t(a), uint8_t(c))));
            }
        }
}

TEST(Field, AxiomsRandomizedGf256) {
    const Field& f = Field::gf256();
    SeededRandom rng(12);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto bytes = rng.bytes(3);
        const uint8_t a = bytes[0], b = bytes[1], c = bytes[2];
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST(Field, NoZeroDivisors) {
    // Exhaustive for gf4 and gf16.
    const Field gf16(4, 0x13);
    for (const Field* f : {&Field::gf4(), &gf16}) {
        for (unsigned a = 0; a < f->order(); ++a)
            for (unsigned b = 0; b < f->order(); ++b) {
                const bool zero = f->mul(uint8_t(a), uint8_t(b)) == 0;
                EXPECT_EQ(zero, a == 0 || b == 0);
            }
    }
}

TEST(Field, InverseOfOne) {
    EXPECT_EQ(Field::gf4().inv(1), 1);
    EXPECT_EQ(Field::gf256().inv(1), 1);
}

TEST(Field, Gf4InverseOfAlphaByTableSearch) {
    // Independent oracle: scan the multiplication table for the unit.
    const Field& f = Field::gf4();
    uint8_t found = 0;
    for (unsigned b = 1; b < 4; ++b)
        if (f.mul(kAlpha, uint8_t(b)) == 1)
            found = uint8_t(b);
    EXPECT_EQ(found, kAlphaP1);
    EXPECT_EQ(f.inv(kAlpha), found);
}

TEST(Field, Gf256InverseSelfConsistency) {
    const Field& f = Field::gf256();
    SeededRandom rng(13);
    int checked = 0;
    while (checked < 1000) {
        const uint8_t a = rng.bytes(1)[0];
        if (a == 0)
            continue;
        ASSERT_EQ(f.mul(a, f.inv(a)), 1);
        ++checked;
    }
}

TEST(Field, InverseOfZeroThrows) {
    EXPECT_THROW(Field::gf4().inv(0), DivisionByZeroError);
    EXPECT_THROW(Field::gf256().inv(0), DivisionByZeroError);
}

TEST(Field, ElementFromIndexCanonical) {
    const Field& f = Field::gf4();
    EXPECT_EQ(f.element_from_index(1).value(), 1);
    EXPECT_EQ(f.element_from_index(2).value(), kAlpha);
    EXPECT_EQ(f.element_from_index(3).value(), kAlphaP1);
    EXPECT_THROW(f.element_from_index(0), EvaluationPointsExhaustedError);
    EXPECT_THROW(f.element_from_index(4), EvaluationPointsExhaustedError);
}

TEST(Field, ElementFromIndexInjective) {
    for (const Field* f : {&Field::gf4(), &Field::gf256()}) {
        std::vector<bool> seen(f->order(), false);
        for (unsigned i = 1; i < f->order(); ++i) {
            const uint8_t v = f->element_from_index(i).value();
            EXPECT_FALSE(seen[v]);
            seen[v] = true;
        }
    }
}

TEST(Field, MismatchedFieldsThrow) {
    const FieldElement a = Field::gf4().element(1);
    const FieldElement b = Field::gf256().element(1);
    EXPECT_THROW(a + b, FieldMismatchError);
    EXPECT_THROW(a * b, FieldMismatchError);
}

TEST(Field, ElementValueRangeEnforced) {
    EXPECT_THROW(Field::gf4().element(4), ParamError);
    EXPECT_NO_THROW(Field::gf256().element(255));
}

TEST(Field, ReduciblePolynomialRejected) {
    EXPECT_THROW(Field(2, 0b110), ParamError); // x^2 + x = x(x+1)
    EXPECT_THROW(Field(8, 0x11A), ParamError); // even => divisible by x
    EXPECT_NO_THROW(Field(8, 0x11D));          // the other common gf256 modulus
}

TEST(Field, PackingGf4MostSignificantFirst) {
    const Field& f = Field::gf4();
    const std::vector<uint8_t> symbols{1, 2, 3, 0};
    EXPECT_EQ(f.pack(symbols), std::vector<uint8_t>{0b01101100});
    EXPECT_EQ(f.unpack(f.pack(symbols), 4), symbols);

    // 5 symbols span two bytes; trailing bits zero.
    const std::vector<uint8_t> five{3, 3, 3, 3, 2};
    EXPECT_EQ(f.packed_size(5), 2u);
    EXPECT_EQ(f.pack(five), (std::vector<uint8_t>{0xFF, 0b10000000}));
    EXPECT_EQ(f.unpack(f.pack(five), 5), five);
}

TEST(Field, PackingGf256Identity) {
    const Field& f = Field::gf256();
    const std::vector<uint8_t> symbols{0x00, 0x7F, 0xFF};
    EXPECT_EQ(f.pack(symbols), symbols);
    EXPECT_EQ(f.unpack(symbols, 3), symbols);
}

TEST(Field, PackedSizeLaw) {
    EXPECT_EQ(Field::gf4().packed_size(0), 0u);
    EXPECT_EQ(Field::gf4().packed_size(1), 1u);
    EXPECT_EQ(Field::gf4().packed_size(4), 1u);
    EXPECT_EQ(Field::gf4().packed_size(9), 3u);
    EXPECT_EQ(Field::gf256().packed_size(9), 9u);
}

TEST(Field, WireIds) {
    EXPECT_EQ(&Field::from_id(FieldId::gf4), &Field::gf4());
    EXPECT_EQ(&Field::from_id(FieldId::gf256), &Field::gf256());
    EXPECT_EQ(&Field::from_name("gf4"), &Field::gf4());
    EXPECT_THROW(Field::from_name("gf123"), ParamError);
    EXPECT_EQ(Field::gf4().order(), 4u);
    EXPECT_EQ(Field::gf256().order(), 256u);
}
