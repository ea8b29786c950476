// SPDX-License-Identifier: Apache-2.0

#include "pets/ida.hpp"

#include <gtest/gtest.h>

#include "pets/random.hpp"
#include "test_support.hpp"

using namespace pets;
using pets::testsupport::pick;
using pets::testsupport::subsets;

TEST(Ida, PaperGeometryTwoOfThree) {
    // 384 symbols over gf4 split (2,3): three fragments of 192 symbols.
    const Field& f = Field::gf4();
    SeededRandom rng(31);
    const SymbolVector m = rng.symbols(f, 384);
    const Dispersal d = disperse(m, 2, 3);

    ASSERT_EQ(d.fragments.size(), 3u);
    EXPECT_EQ(d.pad_len, 0u);
    for (const auto& frag : d.fragments)
        EXPECT_EQ(frag.data.size(), 192u);

    for (const auto& subset : subsets(3, 2))
        EXPECT_EQ(reconstruct(pick(d.fragments, subset), 2, d.pad_len), m);
}

TEST(Ida, ThresholdOneReplicates) {
    const Field& f = Field::gf256();
    SeededRandom rng(32);
    const SymbolVector m = rng.symbols(f, 17);
    const Dispersal d = disperse(m, 1, 4);
    EXPECT_EQ(d.pad_len, 0u);
    for (const auto& frag : d.fragments)
        EXPECT_EQ(frag.data, m);
}

TEST(Ida, PaddingGeometry) {
    const Field& f = Field::gf256();
    SeededRandom rng(33);
    const SymbolVector m = rng.symbols(f, 10);
    const Dispersal d = disperse(m, 4, 4);
    EXPECT_EQ(d.pad_len, 2u);
    for (const auto& frag : d.fragments)
        EXPECT_EQ(frag.data.size(), 3u);
    EXPECT_EQ(reconstruct(d.fragments, 4, d.pad_len), m);
}

TEST(Ida, RoundTripAllSubsets) {
    SeededRandom rng(34);
    for (const Field* f : {&Field::gf4(), &Field::gf256()}) {
        const unsigned max_n = std::min(6u, f->order() - 1);
        for (unsigned n = 1; n <= max_n; ++n)
            for (unsigned t = 1; t <= n; ++t) {
                const size_t len = rng.bytes(1)[0] % 40;
                const SymbolVector m = rng.symbols(*f, len);
                const Dispersal d = disperse(m, t, n);
                EXPECT_EQ(d.fragments.front().data.size(), (len + t - 1) / t);
                for (const auto& subset : subsets(n, t))
                    ASSERT_EQ(reconstruct(pick(d.fragments, subset), t, d.pad_len), m);
            }
    }
}

TEST(Ida, SizeLaw) {
    const Field& f = Field::gf256();
    SeededRandom rng(35);
    for (size_t len : {size_t(0), size_t(1), size_t(5), size_t(17), size_t(100)})
        for (unsigned t = 1; t <= 6; ++t) {
            const Dispersal d = disperse(rng.symbols(f, len), t, 6);
            const size_t expect = (len + t - 1) / t;
            for (const auto& frag : d.fragments)
                ASSERT_EQ(frag.data.size(), expect);
            ASSERT_EQ(d.pad_len, expect * t - len);
        }
}

TEST(Ida, BelowThresholdHidesAndDeterminesNothing) {
    // gf4, t = 2, |M| = 2: every single fragment value is consistent with
    // exactly q = 4 of the 16 possible messages.
    const Field& f = Field::gf4();
    for (unsigned index = 1; index <= 3; ++index) {
        // consistent[v] = number of messages whose fragment `index` equals v
        std::vector<unsigned> consistent(4, 0);
        for (unsigned m0 = 0; m0 < 4; ++m0)
            for (unsigned m1 = 0; m1 < 4; ++m1) {
                const SymbolVector m(f, {uint8_t(m0), uint8_t(m1)});
                const Dispersal d = disperse(m, 2, 3);
                ASSERT_EQ(d.fragments[index - 1].data.size(), 1u);
                ++consistent[d.fragments[index - 1].data.at(0)];
            }
        for (unsigned v = 0; v < 4; ++v)
            EXPECT_GE(consistent[v], f.order());
    }
}

TEST(Ida, InsufficientFragmentsFail) {
    const Field& f = Field::gf256();
    SeededRandom rng(36);
    const Dispersal d = disperse(rng.symbols(f, 30), 3, 5);
    const std::vector<Fragment> two{d.fragments[0], d.fragments[3]};
    EXPECT_THROW(reconstruct(two, 3, d.pad_len), InsufficientSharesError);
}

TEST(Ida, DuplicateIndicesFail) {
    const Field& f = Field::gf256();
    SeededRandom rng(37);
    const Dispersal d = disperse(rng.symbols(f, 30), 2, 4);
    const std::vector<Fragment> dup{d.fragments[1], d.fragments[1]};
    EXPECT_THROW(reconstruct(dup, 2, d.pad_len), DuplicateIndexError);
}

TEST(Ida, FieldCapacityBound) {
    const Field& f = Field::gf4();
    SeededRandom rng(38);
    const SymbolVector m = rng.symbols(f, 8);
    EXPECT_THROW(disperse(m, 2, 4), EvaluationPointsExhaustedError);
    EXPECT_NO_THROW(disperse(m, 2, 3));
}

TEST(Ida, BadThresholdParams) {
    const Field& f = Field::gf256();
    const SymbolVector m(f, 4);
    EXPECT_THROW(disperse(m, 0, 3), ParamError);
    EXPECT_THROW(disperse(m, 4, 3), ParamError);
}
