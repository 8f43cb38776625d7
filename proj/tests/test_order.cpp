#include "plgb/enumerate.hpp"
#include "plgb/error.hpp"
#include "plgb/order.hpp"
#include "plgb/tree_io.hpp"
#include "plgb/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace plgb;

namespace {

const Alphabet xy = Alphabet::uniform({"x", "y"});
const Alphabet one = Alphabet::single();

PlanarTree P(const Alphabet& a, const char* s) { return parse_tree(a, s); }

} // namespace

TEST(PlanarOrder, DegreeDecidesFirst)
{
    auto d = cmp_planar(P(one, "a(a)"), P(one, "a(a,a)"));
    EXPECT_TRUE(d.less());
    EXPECT_EQ(d.rule, Rule::Degree);
}

TEST(PlanarOrder, LadderBelowCherry)
{
    auto d = cmp_planar(P(one, "a(a(a))"), P(one, "a(a,a)"));
    EXPECT_TRUE(d.less());
    EXPECT_EQ(d.rule, Rule::BranchCount);
    EXPECT_TRUE(cmp_planar(P(one, "a(a,a)"), P(one, "a(a(a))")).greater());
}

TEST(PlanarOrder, BranchesBeforeRoot)
{
    auto d = cmp_planar(P(xy, "y(x)"), P(xy, "x(y)"));
    EXPECT_TRUE(d.less());
    EXPECT_EQ(d.rule, Rule::Branches);
    d = cmp_planar(P(xy, "x(x)"), P(xy, "y(x)"));
    EXPECT_TRUE(d.less());
    EXPECT_EQ(d.rule, Rule::Root);
    d = cmp_planar(P(xy, "x(y,x)"), P(xy, "x(x,y)"));
    EXPECT_TRUE(d.greater());
    EXPECT_EQ(d.rule, Rule::Branches);
}

TEST(PlanarOrder, EqualOnlyWhenIdentical)
{
    auto d = cmp_planar(P(xy, "x(y,x)"), P(xy, "x(y,x)"));
    EXPECT_TRUE(d.equal());
    EXPECT_EQ(d.rule, Rule::Identical);
}

TEST(PlanarOrder, GeneratorsByDegreeThenRank)
{
    auto g = Alphabet::graded(2);
    EXPECT_TRUE(cmp_planar(P(g, "a1(a1)"), P(g, "a2")).greater());
    EXPECT_EQ(cmp_planar(P(g, "a1(a1)"), P(g, "a2")).rule, Rule::BranchCount);
    EXPECT_TRUE(cmp_planar(P(xy, "x"), P(xy, "y")).less());
}

TEST(NonPlanarOrder, Examples)
{
    Tree x = parse_nonplanar(xy, "x"), y = parse_nonplanar(xy, "y"), xx = parse_nonplanar(xy, "x(x)");
    EXPECT_TRUE(cmp_nonplanar(x, y).less());
    EXPECT_TRUE(cmp_nonplanar(y, xx).less());
    EXPECT_TRUE(cmp_nonplanar(xx, xx).equal());
    EXPECT_TRUE(cmp_nonplanar(parse_nonplanar(xy, "x(x,y)"), parse_nonplanar(xy, "x(x(x))")).greater());
}

// Sorted branches are compared, so the planar order of a sorted
// representative decides the non-planar order.
TEST(NonPlanarOrder, AgreesWithSortedRepresentatives)
{
    auto trees = enumerate_nonplanar(xy, 4);
    for (const auto& s : trees)
        for (const auto& t : trees)
            EXPECT_EQ(cmp_nonplanar(s, t).outcome, cmp_planar(s_min(s), s_min(t)).outcome);
}

TEST(Order, ReversedSwapsOutcome)
{
    auto d = cmp_planar(P(xy, "x"), P(xy, "y(x)"));
    EXPECT_TRUE(d.reversed().greater());
    EXPECT_EQ(d.reversed().rule, d.rule);
    EXPECT_EQ(to_string(Rule::BranchCount), "branch-count");
}

TEST(BinaryOrder, LeafBeforeNode)
{
    auto g = Alphabet::graded(2);
    EXPECT_TRUE(cmp_binary(parse_binary(g, "a2"), parse_binary(g, "(a1^a1)")).less());
    EXPECT_TRUE(cmp_binary(parse_binary(xy, "((x^y)^x)"), parse_binary(xy, "(x^(y^x))")).greater());
}

TEST(Order, TotalAndCompatibleWithProducts)
{
    for (const auto& r : {check_order_planar(xy, 4), check_order_nonplanar(xy, 4), check_order_binary(xy, 4),
                          check_order_planar(Alphabet::graded(3), 4)})
        EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Order, EnumerationsAreSorted)
{
    auto p = enumerate_planar(xy, 4);
    EXPECT_TRUE(std::is_sorted(p.begin(), p.end(), Ascending<PlanarTree>{}));
    auto b = enumerate_binary(xy, 4);
    EXPECT_TRUE(std::is_sorted(b.begin(), b.end(), Ascending<BinaryTree>{}));
}
