#include "plgb/enumerate.hpp"
#include "plgb/error.hpp"
#include "plgb/order.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

using namespace plgb;

namespace {

// Rooted trees with k vertex colours:
// a(1) = k, a(n+1) = (1/n) sum_{j=1..n} c(j) a(n+1-j), c(j) = sum_{d|j} d a(d).
std::vector<long> colored_rooted_trees(long k, int max_n)
{
    std::vector<long> a(static_cast<std::size_t>(max_n + 1), 0);
    a[1] = k;
    for (int n = 1; n < max_n; ++n) {
        long s = 0;
        for (int j = 1; j <= n; ++j) {
            long c = 0;
            for (int d = 1; d <= j; ++d)
                if (j % d == 0)
                    c += d * a[d];
            s += c * a[n + 1 - j];
        }
        a[n + 1] = s / n;
    }
    return a;
}

long catalan(int n)
{
    long c = 1;
    for (int i = 0; i < n; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

long power(long b, int e)
{
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

TEST(Enumerate, NonPlanarOneGenerator)
{
    const long expected[] = {1, 1, 2, 4, 9, 20, 48};
    auto one = Alphabet::single();
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(static_cast<long>(enumerate_nonplanar(one, n).size()), expected[n - 1]) << n;
}

TEST(Enumerate, NonPlanarMatchesColouredOracle)
{
    auto xy = Alphabet::uniform({"x", "y"});
    auto xyz = Alphabet::uniform({"x", "y", "z"});
    auto a2 = colored_rooted_trees(2, 5);
    auto a3 = colored_rooted_trees(3, 4);
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(static_cast<long>(enumerate_nonplanar(xy, n).size()), a2[n]);
    for (int n = 1; n <= 4; ++n)
        EXPECT_EQ(static_cast<long>(enumerate_nonplanar(xyz, n).size()), a3[n]);
    EXPECT_EQ(enumerate_nonplanar(xy, 3).size(), 14u);
}

TEST(Enumerate, PlanarCountsAreCatalanTimesColourings)
{
    auto one = Alphabet::single();
    auto xy = Alphabet::uniform({"x", "y"});
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(static_cast<long>(enumerate_planar(one, n).size()), catalan(n - 1));
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(static_cast<long>(enumerate_planar(xy, n).size()), catalan(n - 1) * power(2, n));
}

TEST(Enumerate, GradedAlphabet)
{
    auto g = Alphabet::graded(2);
    // degree 2: a2 and a1(a1)
    EXPECT_EQ(enumerate_nonplanar(g, 2).size(), 2u);
    EXPECT_EQ(enumerate_planar(g, 2).size(), 2u);
    for (const auto& t : enumerate_planar(g, 5))
        EXPECT_EQ(t.degree(), 5);
}

TEST(Enumerate, BinaryShapes)
{
    auto one = Alphabet::single();
    auto xy = Alphabet::uniform({"x", "y"});
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(static_cast<long>(enumerate_binary(one, n).size()), catalan(n - 1));
    EXPECT_EQ(enumerate_binary(xy, 2).size(), 4u);
    EXPECT_EQ(enumerate_binary_by_degree(Alphabet::graded(2), 2).size(), 2u);
}

TEST(Enumerate, DuplicateFree)
{
    auto xy = Alphabet::uniform({"x", "y"});
    auto p = enumerate_planar(xy, 4);
    EXPECT_EQ((std::set<PlanarTree, Ascending<PlanarTree>>(p.begin(), p.end()).size()), p.size());
    auto t = enumerate_nonplanar(xy, 5);
    std::set<Tree, Ascending<Tree>> ts(t.begin(), t.end());
    EXPECT_EQ(ts.size(), t.size());
}

TEST(Enumerate, RejectsNonPositiveDegree)
{
    auto one = Alphabet::single();
    EXPECT_THROW(enumerate_planar(one, 0), DegreeError);
    EXPECT_THROW(enumerate_nonplanar(one, -1), DegreeError);
    EXPECT_THROW(enumerate_binary(one, 0), DegreeError);
}
