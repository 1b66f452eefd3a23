#include <gtest/gtest.h>

#include <random>

#include "groupcent/kernels.hpp"
#include "test_support.hpp"

using namespace groupcent;
namespace k = groupcent::kernels;

namespace {

// Mix of small, large (beyond 2^52), zero and unreachable distances.
DistanceArray random_distances(std::size_t n, std::mt19937_64 &rng, int profile) {
    DistanceArray d(n);
    std::uniform_int_distribution<int> kind(0, 9);
    for (auto &x : d) {
        const int c = kind(rng);
        if (c == 0)
            x = 0;
        else if (c == 1)
            x = kUnreachable;
        else if (profile == 1 && c == 2)
            x = (Distance{1} << 52) + rng() % 1000;
        else if (profile == 1 && c == 3)
            x = kUnreachable - 1 - rng() % 3;
        else
            x = 1 + rng() % 50;
    }
    return d;
}

class KernelEquivalence : public ::testing::Test {
protected:
    void SetUp() override {
        if (!k::isa_supported(k::Isa::avx2))
            GTEST_SKIP() << "AVX2 not available";
    }
};

} // namespace

#if defined(GROUPCENT_HAVE_AVX2)

TEST_F(KernelEquivalence, HarmonicSum) {
    std::mt19937_64 rng(1);
    for (std::size_t n = 0; n < 140; ++n)
        for (int profile = 0; profile < 2; ++profile) {
            const DistanceArray d = random_distances(n, rng, profile);
            const double a = k::scalar::harmonic_sum(d);
            const double b = k::avx2::harmonic_sum(d);
            EXPECT_TRUE(groupcent::testing::near(a, b)) << n << ": " << a << " vs " << b;
        }
}

TEST_F(KernelEquivalence, FarnessSum) {
    std::mt19937_64 rng(2);
    for (std::size_t n = 0; n < 140; ++n)
        for (int profile = 0; profile < 2; ++profile) {
            const DistanceArray d = random_distances(n, rng, profile);
            const auto a = k::scalar::farness_sum(d);
            const auto b = k::avx2::farness_sum(d);
            EXPECT_EQ(a.sum, b.sum);
            EXPECT_EQ(a.unreached, b.unreached);
        }
}

TEST_F(KernelEquivalence, RemovalDeltaAndDistancesWithout) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n < 140; ++n) {
        std::vector<Vertex> rep(n);
        DistanceArray first(n), second(n);
        for (std::size_t x = 0; x < n; ++x) {
            rep[x] = static_cast<Vertex>(rng() % 4);
            first[x] = rng() % 20;
            second[x] = rng() % 9 == 0 ? kUnreachable : first[x] + rng() % 20;
        }
        for (Vertex u = 0; u < 5; ++u) {
            EXPECT_EQ(k::scalar::removal_delta(rep, first, second, u),
                      k::avx2::removal_delta(rep, first, second, u));
            DistanceArray a(n), b(n);
            k::scalar::distances_without(rep, first, second, u, a);
            k::avx2::distances_without(rep, first, second, u, b);
            EXPECT_EQ(a, b);
        }
    }
}

TEST_F(KernelEquivalence, MinInto) {
    std::mt19937_64 rng(4);
    for (std::size_t n = 0; n < 140; ++n) {
        DistanceArray acc = random_distances(n, rng, 1);
        const DistanceArray row = random_distances(n, rng, 1);
        DistanceArray a = acc, b = acc;
        k::scalar::min_into(a, row);
        k::avx2::min_into(b, row);
        EXPECT_EQ(a, b);
    }
}

#endif

TEST(KernelReference, HarmonicSkipsZeroAndUnreachable) {
    const DistanceArray d{0, 1, 2, kUnreachable, 4};
    EXPECT_DOUBLE_EQ(k::scalar::harmonic_sum(d), 1.75);
}

TEST(KernelReference, RemovalDeltaSignalsDisconnection) {
    const std::vector<Vertex> rep{0, 0, 1};
    const DistanceArray first{0, 1, 0}, second{3, kUnreachable, 2};
    EXPECT_FALSE(k::scalar::removal_delta(rep, first, second, 0).has_value());
    EXPECT_EQ(k::scalar::removal_delta(rep, first, second, 1), 2u);
}

TEST(KernelDispatch, ForceScalarAndRestore) {
    const k::Isa before = k::active_isa();
    k::force_isa(k::Isa::scalar);
    EXPECT_EQ(k::active_isa(), k::Isa::scalar);
    const DistanceArray d{1, 2, 4, 8, 16, 0, kUnreachable};
    EXPECT_DOUBLE_EQ(k::harmonic_sum(d), 1.9375);
    k::force_isa(before);
    EXPECT_EQ(k::active_isa(), before);
    EXPECT_STREQ(k::isa_name(k::Isa::avx2), "avx2");
}

TEST(KernelDispatch, UnsupportedIsaRejected) {
    if (k::isa_supported(k::Isa::avx2))
        GTEST_SKIP() << "every ISA is supported here";
    EXPECT_THROW(k::force_isa(k::Isa::avx2), InputError);
}
