#include <gtest/gtest.h>

#include "hmap/characteristics.hpp"
#include "hmap/io.hpp"
#include "hmap/jordan.hpp"
#include "support/fixtures.hpp"

using namespace hmap;
using namespace hmap::testing;

namespace {

MapStats stats(std::size_t nd, std::size_t ne, std::size_t nv, std::size_t nf, std::size_t nc, std::int64_t ec,
               std::int64_t g) {
    return MapStats{nd, ne, nv, nf, nc, ec, g, g == 0};
}

void expect_matches_brute(const FreeMap& m, const MapStats& s) {
    const auto b = brute_stats(model_from_trace(m));
    EXPECT_EQ(s.nd, b.nd);
    EXPECT_EQ(s.ne, b.ne);
    EXPECT_EQ(s.nv, b.nv);
    EXPECT_EQ(s.nf, b.nf);
    EXPECT_EQ(s.nc, b.nc);
    EXPECT_EQ(s.ec, b.ec);
    EXPECT_EQ(2 * s.genus, b.genus_times_2);
}

}  // namespace

TEST(Counts, Goldens) {
    EXPECT_EQ(counts(FreeMap{}), stats(0, 0, 0, 0, 0, 0, 0));
    EXPECT_EQ(counts(fix1()), stats(15, 7, 6, 6, 3, 4, 1));
    EXPECT_EQ(counts(m2()), stats(2, 1, 2, 1, 1, 2, 0));
    EXPECT_EQ(counts(k4t()), stats(4, 2, 1, 1, 1, 0, 1));
    EXPECT_EQ(counts(digon()), stats(4, 2, 2, 2, 1, 2, 0));
    EXPECT_TRUE(planar(FreeMap{}));
    EXPECT_EQ(genus(k4t()), 1);
    EXPECT_EQ(genus(fix1()), 1);
    EXPECT_EQ(euler_characteristic(fix1()), 4);
}

TEST(Counts, GoldensAgreeWithHandWrittenCycles) {
    // FIX1 rebuilt from its permutations written out by hand.
    std::set<Dart> darts;
    for (Dart z = 1; z <= 15; ++z) darts.insert(z);
    const auto pm = model_from_cycles(darts, {{4, 3, 5}, {1, 6, 2, 9}, {11, 12}, {8, 15}, {10, 14}},
                                      {{4, 1, 2, 3}, {5, 9}, {6, 7, 11}, {8, 14, 10, 15}});
    const auto b = brute_stats(pm);
    EXPECT_EQ(b.nf, 6u);
    EXPECT_EQ(b.nc, 3u);
    EXPECT_EQ(cycle_containing(face_perm(pm), 1), (std::set<Dart>{1, 5, 2, 11, 12, 7, 6, 4, 9}));
    expect_matches_brute(fix1(), counts(fix1()));
    expect_matches_brute(m2(), counts(m2()));
    expect_matches_brute(digon(), counts(digon()));
    expect_matches_brute(k4t(), counts(k4t()));
}

TEST(Counts, RejectsNonHypermap) {
    EXPECT_THROW(counts(FreeMap{}.inserted(1).linked(Dim::zero, 1, 1)), PreconditionError);
}

TEST(Counts, BackendsAgreeWithBruteForce) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = seed % 30;
        const FreeMap m = generate_hypermap(seed, n, seed % (2 * n + 1));
        const MapStats s = counts(m);
        expect_matches_brute(m, s);
        ASSERT_EQ(counts_by_recurrence(m), s) << serialize_map(m);
    }
}

TEST(Counts, RecurrenceFollowsTraceOrder) {
    // Links interleaved with inserts, not darts-first.
    const FreeMap m = FreeMap{}
                          .inserted(5)
                          .inserted(2)
                          .linked(Dim::one, 5, 2)
                          .inserted(9)
                          .linked(Dim::zero, 2, 9)
                          .linked(Dim::zero, 9, 5)
                          .inserted(1)
                          .linked(Dim::one, 2, 9);
    ASSERT_TRUE(is_hypermap(m));
    EXPECT_EQ(counts_by_recurrence(m), counts(m));
    expect_matches_brute(m, counts(m));
}

TEST(Counts, ExhaustiveFourDarts) {
    for (std::size_t n = 0; n <= 4; ++n)
        for_each_hypermap(n, [](const FreeMap& m) {
            const MapStats s = counts(m);
            ASSERT_EQ(counts_by_recurrence(m), s);
            expect_matches_brute(m, s);
        });
}

TEST(GenusTheorem, Examples) {
    EXPECT_TRUE(check_genus_theorem(fix1()).pass);
    EXPECT_TRUE(check_genus_theorem(FreeMap{}).pass);
    const auto r = check_genus_theorem(fix1());
    EXPECT_EQ(r.stats.ec, 4);
    EXPECT_TRUE(r.failures.empty());
}

TEST(GenusTheorem, RandomMaps) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 1 + seed % 40;
        const auto r = check_genus_theorem(generate_hypermap(seed, n, seed % (2 * n + 1)));
        ASSERT_TRUE(r.pass) << r.witness;
        EXPECT_EQ(r.stats.ec % 2, 0);
        EXPECT_GE(r.stats.genus, 0);
        EXPECT_GE(2 * static_cast<std::int64_t>(r.stats.nc), r.stats.ec);
    }
}

TEST(EulerFormula, Examples) {
    const auto r = check_euler_formula(m2());
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.stats.nv + r.stats.ne + r.stats.nf - r.stats.nd, 2u);
    EXPECT_TRUE(check_euler_formula(digon()).pass);
    EXPECT_TRUE(check_euler_formula(FreeMap{}).pass);
    EXPECT_THROW(check_euler_formula(fix1()), PreconditionError);
    EXPECT_THROW(check_euler_formula(k4t()), PreconditionError);
}

TEST(EulerFormula, GeneratedPlanarMaps) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = seed % 40;
        const FreeMap m = generate_planar(seed, n, (seed * 3) % (2 * n + 1));
        const auto r = check_euler_formula(m);
        ASSERT_TRUE(r.pass) << r.witness;
        EXPECT_EQ(r.stats.ec, 2 * static_cast<std::int64_t>(r.stats.nc));
    }
}
