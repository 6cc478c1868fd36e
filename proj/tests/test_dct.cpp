#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "edc/dct.hpp"
#include "testutil.hpp"

namespace {

using edc::BlockArray;
using edc::BlockGrid;
using edc::Dct2d;
using edc::Plane;

TEST(Partition, SingleBlockIdentity) {
    auto g = testutil::rng(401);
    const Plane p = testutil::random_plane(g, 8, 8, -128.0, 127.0);
    const BlockArray blocks = edc::partition(p, 8);
    EXPECT_EQ(blocks.grid.block_count(), 1);
    for (int i = 0; i < 64; ++i) EXPECT_DOUBLE_EQ(blocks.block(0)[i], p.samples[i]);
}

TEST(Partition, ReplicatesIntoPadding) {
    Plane p(9, 8);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 9; ++x) p.at(x, y) = x + 100.0 * y;
    const BlockArray blocks = edc::partition(p, 8);
    EXPECT_EQ(blocks.grid.padded_width, 16);
    EXPECT_EQ(blocks.grid.padded_height, 8);
    EXPECT_EQ(blocks.grid.block_count(), 2);
    const double* right = blocks.block(1);
    for (int y = 0; y < 8; ++y)
        for (int x = 1; x < 8; ++x)  // columns 9..15 replicate column 8
            EXPECT_DOUBLE_EQ(right[y * 8 + x], p.at(8, y));
}

TEST(Partition, ReassembleInverts) {
    auto g = testutil::rng(402);
    for (int n : {8, 16, 32}) {
        std::uniform_int_distribution<int> dim(1, 70);
        const Plane p = testutil::random_plane(g, dim(g), dim(g), 0.0, 255.0);
        const Plane back = edc::reassemble(edc::partition(p, n));
        ASSERT_EQ(back.width, p.width);
        ASSERT_EQ(back.height, p.height);
        for (std::size_t i = 0; i < p.samples.size(); ++i)
            ASSERT_DOUBLE_EQ(back.samples[i], p.samples[i]);
    }
}

TEST(Dct, ConstantBlockNormalization) {
    const Dct2d dct(8);
    std::vector<double> block(64, 128.0), coeffs(64);
    dct.forward(block.data(), coeffs.data());
    EXPECT_NEAR(coeffs[0], 1024.0, 1e-9);
    for (int i = 1; i < 64; ++i) EXPECT_NEAR(coeffs[i], 0.0, 1e-9);
}

TEST(Dct, ZeroBlockMapsToZero) {
    const Dct2d dct(16);
    std::vector<double> block(256, 0.0), coeffs(256, 1.0);
    dct.forward(block.data(), coeffs.data());
    for (double c : coeffs) EXPECT_DOUBLE_EQ(c, 0.0);
}

TEST(Dct, MatchesDefinitionalOracle) {
    auto g = testutil::rng(403);
    for (int n : {8, 16, 32}) {
        std::vector<double> block(static_cast<std::size_t>(n) * n), ours(block.size()),
            ref(block.size());
        std::uniform_real_distribution<double> d(-128.0, 127.0);
        const Dct2d dct(n);
        for (int iter = 0; iter < 5; ++iter) {
            for (auto& v : block) v = d(g);
            dct.forward(block.data(), ours.data());
            testutil::dct2_reference(block.data(), ref.data(), n);
            for (std::size_t i = 0; i < block.size(); ++i)
                ASSERT_NEAR(ours[i], ref[i], 1e-10) << "n=" << n << " i=" << i;
        }
    }
}

TEST(Dct, RoundTrip) {
    auto g = testutil::rng(404);
    for (int n : {8, 16, 32}) {
        const Dct2d dct(n);
        std::vector<double> block(static_cast<std::size_t>(n) * n), coeffs(block.size()),
            back(block.size());
        std::uniform_real_distribution<double> d(-255.0, 255.0);
        for (auto& v : block) v = d(g);
        dct.forward(block.data(), coeffs.data());
        dct.inverse(coeffs.data(), back.data());
        for (std::size_t i = 0; i < block.size(); ++i) ASSERT_NEAR(back[i], block[i], 1e-9);
    }
}

TEST(Dct, DcOnlyInverseIsConstant) {
    const Dct2d dct(8);
    std::vector<double> coeffs(64, 0.0), samples(64);
    coeffs[0] = 1024.0;
    dct.inverse(coeffs.data(), samples.data());
    for (double s : samples) EXPECT_NEAR(s, 128.0, 1e-9);
}

// Single AC basis function: coefficient (0,1)=1 reconstructs the closed-form
// cosine pattern alpha0*alpha1*cos((2y+1)pi/2N) constant down the rows.
TEST(Dct, SingleAcBasisFunction) {
    const int n = 8;
    const Dct2d dct(n);
    std::vector<double> coeffs(64, 0.0), samples(64);
    coeffs[1] = 1.0;  // (i,j) = (0,1)
    dct.inverse(coeffs.data(), samples.data());
    const double a0 = std::sqrt(1.0 / n), a1 = std::sqrt(2.0 / n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const double expect = a0 * a1 * std::cos((2.0 * y + 1.0) * 3.14159265358979323846 /
                                                     (2.0 * n));
            EXPECT_NEAR(samples[x * n + y], expect, 1e-12);
        }
}

TEST(Dct, ParsevalHolds) {
    auto g = testutil::rng(405);
    for (int n : {8, 16, 32}) {
        const Dct2d dct(n);
        std::vector<double> block(static_cast<std::size_t>(n) * n), coeffs(block.size());
        std::uniform_real_distribution<double> d(-255.0, 255.0);
        for (auto& v : block) v = d(g);
        dct.forward(block.data(), coeffs.data());
        double e_in = 0.0, e_out = 0.0;
        for (std::size_t i = 0; i < block.size(); ++i) {
            e_in += block[i] * block[i];
            e_out += coeffs[i] * coeffs[i];
        }
        EXPECT_NEAR(e_out / e_in, 1.0, 1e-6);
    }
}

TEST(Dct, Linearity) {
    auto g = testutil::rng(406);
    const int n = 8;
    const Dct2d dct(n);
    std::vector<double> a(64), b(64), mix(64), ca(64), cb(64), cmix(64);
    std::uniform_real_distribution<double> d(-100.0, 100.0);
    for (int i = 0; i < 64; ++i) {
        a[i] = d(g);
        b[i] = d(g);
        mix[i] = 2.5 * a[i] - 1.25 * b[i];
    }
    dct.forward(a.data(), ca.data());
    dct.forward(b.data(), cb.data());
    dct.forward(mix.data(), cmix.data());
    for (int i = 0; i < 64; ++i) EXPECT_NEAR(cmix[i], 2.5 * ca[i] - 1.25 * cb[i], 1e-9);
}

TEST(Zigzag, LeadingOrderN8) {
    const auto zz = edc::zigzag(8);
    // (row,col): (0,0),(0,1),(1,0),(2,0),(1,1),(0,2)
    const int expect[6] = {0, 1, 8, 16, 9, 2};
    for (int k = 0; k < 6; ++k) EXPECT_EQ(zz[k], expect[k]) << "k=" << k;
}

TEST(Zigzag, TrivialSize) {
    const auto zz = edc::zigzag(1);
    ASSERT_EQ(zz.size(), 1u);
    EXPECT_EQ(zz[0], 0);
}

TEST(Zigzag, FullOrderN4) {
    const auto zz = edc::zigzag(4);
    const std::pair<int, int> expect[16] = {{0, 0}, {0, 1}, {1, 0}, {2, 0}, {1, 1}, {0, 2},
                                            {0, 3}, {1, 2}, {2, 1}, {3, 0}, {3, 1}, {2, 2},
                                            {1, 3}, {2, 3}, {3, 2}, {3, 3}};
    ASSERT_EQ(zz.size(), 16u);
    for (int k = 0; k < 16; ++k)
        EXPECT_EQ(zz[k], expect[k].first * 4 + expect[k].second) << "k=" << k;
}

TEST(Zigzag, BijectionForAllSizes) {
    for (int n = 1; n <= 32; ++n) {
        const auto zz = edc::zigzag(n);
        const auto inv = edc::inverse_zigzag(n);
        ASSERT_EQ(zz.size(), static_cast<std::size_t>(n) * n);
        std::vector<bool> seen(zz.size(), false);
        for (int raster : zz) {
            ASSERT_GE(raster, 0);
            ASSERT_LT(raster, n * n);
            ASSERT_FALSE(seen[static_cast<std::size_t>(raster)]);
            seen[static_cast<std::size_t>(raster)] = true;
        }
        for (std::size_t k = 0; k < zz.size(); ++k)
            EXPECT_EQ(inv[static_cast<std::size_t>(zz[k])], static_cast<int>(k));
    }
}

// Low-pass blocks concentrate nearly all AC energy in the first quarter of
// the zigzag order.
TEST(Zigzag, EnergyCompactionOnSmoothBlocks) {
    auto g = testutil::rng(407);
    const int n = 8;
    const Dct2d dct(n);
    const auto zz = edc::zigzag(n);
    int ok = 0, total = 0;
    double ratio_sum = 0.0;
    for (int iter = 0; iter < 50; ++iter) {
        Plane p = testutil::random_plane(g, n, n, -128.0, 127.0);
        p = edc::gaussian_smooth(p, 1.5);  // low-pass
        std::vector<double> coeffs(64);
        dct.forward(p.samples.data(), coeffs.data());
        double ac = 0.0, head = 0.0;
        for (int k = 1; k < 64; ++k) {
            const double e = coeffs[static_cast<std::size_t>(zz[k])] *
                             coeffs[static_cast<std::size_t>(zz[k])];
            ac += e;
            if (k < 16) head += e;
        }
        if (ac > 0.0) {
            ++total;
            ratio_sum += head / ac;
            if (head / ac > 0.9) ++ok;
        }
    }
    EXPECT_GT(ratio_sum / total, 0.9);
    EXPECT_GE(ok * 10, total * 9);  // at least 90% of blocks strongly compacted
}

}  // namespace
