#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mmdim/bounds.hpp"
#include "mmdim/constructors.hpp"

using namespace mmdim;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST(LowerBound, Examples)
{
    EXPECT_EQ(lower_bound(Params(5, 6, 8)).value, 8);
    EXPECT_EQ(lower_bound(Params(5, 6, 8)).provenance, Provenance::HalfSumMinusOne);
    EXPECT_EQ(lower_bound(Params(3, 5, 11)).value, 10);
    EXPECT_EQ(lower_bound(Params(3, 5, 11)).provenance, Provenance::LargestMinusOne);
    EXPECT_EQ(lower_bound(Params(1, 1, 1)).value, 0);
    EXPECT_EQ(lower_bound(Params(4, 6, 6)).value, 8);
    EXPECT_EQ(lower_bound(Params(4, 6, 6)).provenance, Provenance::Exception466);
}

TEST(UpperBound, Examples)
{
    EXPECT_EQ(upper_bound(Params(4, 6, 6)).value, 8);
    EXPECT_EQ(upper_bound(Params(5, 5, 9)).value, 9);
    EXPECT_EQ(upper_bound(Params(5, 5, 9)).provenance, Provenance::AA2A);
    EXPECT_EQ(upper_bound(Params(4, 8, 10)).value, 11);
    EXPECT_EQ(upper_bound(Params(4, 8, 10)).provenance, Provenance::TwoThirds);
}

TEST(Bounds, PegOrderDoesNotMatter)
{
    EXPECT_EQ(lower_bound(Params(11, 3, 5)).value, 10);
    EXPECT_EQ(upper_bound(Params(10, 4, 8)).value, 11);
}

TEST(Dimension, Examples)
{
    EXPECT_EQ(dimension(Params(3, 3, 6)).exact->value, 5);
    EXPECT_EQ(dimension(Params(2, 2, 3)).exact->value, 3);
    EXPECT_EQ(dimension(Params(1, 1, 1)).exact->value, 0);
    EXPECT_EQ(dimension(Params(4, 6, 6)).exact->value, 8);
    const auto d = dimension(Params(5, 6, 8));
    EXPECT_EQ(d.lower.value, 8);
    EXPECT_EQ(d.upper.value, 9);
    ASSERT_TRUE(d.exact);
    EXPECT_EQ(d.exact->value, 9);
    EXPECT_EQ(d.exact->provenance, Provenance::ComputerVerified);
}

TEST(Dimension, AllEqualIsThreeHalves)
{
    for (int a = 2; a <= 6; ++a) {
        const auto d = dimension(Params(a, a, a));
        ASSERT_TRUE(d.exact);
        EXPECT_EQ(d.exact->value, 3 * a / 2);
    }
}

TEST(Dimension, WitnessIsFeasibleOfUpperSize)
{
    for (const Params p : {Params(4, 6, 6), Params(3, 5, 11), Params(6, 2, 3)}) {
        const auto d = dimension(p, true);
        ASSERT_TRUE(d.witness);
        EXPECT_EQ(d.witness->params(), p);
        EXPECT_EQ(int(d.witness->size()), d.upper.value);
        EXPECT_TRUE(verify_feasible(*d.witness).feasible);
    }
}

TEST(Dimension, VerifiedListHasEighteenTriples)
{
    const auto& v = computer_verified_triples();
    EXPECT_EQ(v.size(), 18u);
    EXPECT_EQ(v.front(), Params(3, 3, 4));
    EXPECT_EQ(v.back(), Params(6, 7, 8));
}

TEST(Table, MatchesGoldenFile)
{
    const auto golden = read_file(std::string(MMDIM_TEST_DATA_DIR) + "/table_21.csv");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(dimension_table_csv(dimension_table(21)), golden);
}

TEST(Table, OpenRowsReportHalfSumInterval)
{
    int open = 0;
    for (const auto& r : dimension_table(30)) {
        const int s = r.params.a() + r.params.b() + r.params.c();
        EXPECT_LE(r.lower.value, r.upper.value);
        if (r.exact) {
            EXPECT_TRUE(r.lower.value == r.upper.value || r.exact->value == r.upper.value);
            continue;
        }
        ++open;
        EXPECT_EQ(r.lower.value, s / 2 - 1) << to_string(r.params);
        EXPECT_EQ(r.upper.value, s / 2) << to_string(r.params);
    }
    EXPECT_GT(open, 0);
}

TEST(BoundsProperty, LowerAtMostConstructionSize)
{
    for (int a = 1; a <= 9; ++a)
        for (int b = a; b <= 9; ++b)
            for (int c = b; c <= 9; ++c) {
                const Params p(a, b, c);
                const int size = int(construct(p).size());
                EXPECT_LE(lower_bound(p).value, size) << to_string(p);
                EXPECT_EQ(upper_bound(p).value, size) << to_string(p);
            }
}
