#include "plgb/enumerate.hpp"
#include "plgb/error.hpp"
#include "plgb/order.hpp"
#include "plgb/tree_io.hpp"
#include "plgb/trees.hpp"

#include <gtest/gtest.h>

#include <unordered_set>

using namespace plgb;

namespace {

const Alphabet xy = Alphabet::uniform({"x", "y"});

PlanarTree P(const char* s) { return parse_tree(xy, s); }
Tree N(const char* s) { return parse_nonplanar(xy, s); }

} // namespace

TEST(Trees, DegreeAndSize)
{
    auto g = Alphabet::graded(3);
    PlanarTree t = parse_tree(g, "a1(a2,a3(a1))");
    EXPECT_EQ(t.degree(), 7);
    EXPECT_EQ(t.vertex_count(), 4);
    EXPECT_EQ(branch_count(t), 2);
    EXPECT_EQ(degree(t), 7);
}

TEST(Trees, PlanarKeepsBranchOrder)
{
    EXPECT_FALSE(P("x(x,y)") == P("x(y,x)"));
    EXPECT_TRUE(N("x(x,y)") == N("x(y,x)"));
    EXPECT_EQ(N("x(y,x)").hash(), N("x(x,y)").hash());
    EXPECT_EQ(format_tree(xy, N("x(y(x),x,y)")), "x(x,y,y(x))");
}

TEST(Trees, NonPlanarEqualityIsIsomorphism)
{
    EXPECT_TRUE(N("x(y(x,y),x(y))") == N("x(x(y),y(y,x))"));
    EXPECT_FALSE(N("x(y(x,y),x(y))") == N("x(y(x),x(y,y))"));
}

TEST(Trees, Ladders)
{
    EXPECT_TRUE(is_ladder(P("x")));
    EXPECT_TRUE(is_ladder(P("x(y(x(x)))")));
    EXPECT_FALSE(is_ladder(P("x(y,x)")));
    EXPECT_FALSE(is_ladder(P("x(y(x,x))")));
    Letter x = xy.letter("x"), y = xy.letter("y");
    EXPECT_EQ(ladder<PlanarTag>({x, y, y}), P("x(y(y))"));
}

TEST(Trees, NondecreasingBranches)
{
    EXPECT_TRUE(has_nondecreasing_branches(P("x(x,y)")));
    EXPECT_FALSE(has_nondecreasing_branches(P("x(y,x)")));
    EXPECT_FALSE(has_nondecreasing_branches(P("x(x,x(y,x))")));
    EXPECT_TRUE(has_nondecreasing_branches(P("x(x,x(x,y))")));
}

TEST(Trees, SectionIsSortedPreimage)
{
    for (const auto& t : enumerate_nonplanar(xy, 4)) {
        PlanarTree s = s_min(t);
        EXPECT_TRUE(has_nondecreasing_branches(s));
        EXPECT_EQ(forget_planarity(s), t);
    }
}

// Brute force over the fibre of pi: s_min(t) is the order-minimal planar tree
// mapping to t, and every fibre is non-empty.
TEST(Trees, SectionMinimisesFibres)
{
    const Alphabet g = Alphabet::graded(2);
    for (const Alphabet* a : {&xy, &g}) {
        for (int n = 1; n <= 5; ++n) {
            std::map<Tree, PlanarTree, Ascending<Tree>> best;
            for (const auto& p : enumerate_planar(*a, n)) {
                Tree t = forget_planarity(p);
                auto it = best.find(t);
                if (it == best.end())
                    best.emplace(t, p);
                else if (cmp_planar(p, it->second).less())
                    it->second = p;
            }
            EXPECT_EQ(best.size(), enumerate_nonplanar(*a, n).size());
            for (const auto& [t, p] : best)
                EXPECT_EQ(s_min(t), p) << format_tree(*a, t);
        }
    }
}

TEST(Trees, VertexPathsArePreorder)
{
    PlanarTree t = P("x(y(x),y)");
    auto paths = vertex_paths(t);
    ASSERT_EQ(paths.size(), 4u);
    EXPECT_EQ(paths[0], VertexPath{});
    EXPECT_EQ(paths[1], (VertexPath{0}));
    EXPECT_EQ(paths[2], (VertexPath{0, 0}));
    EXPECT_EQ(paths[3], (VertexPath{1}));
    EXPECT_EQ(subtree_at(t, {0}), P("y(x)"));
    EXPECT_THROW(subtree_at(t, {2}), Error);
}

TEST(Trees, AttachAndDetach)
{
    PlanarTree t = P("x(y(x),y)");
    EXPECT_EQ(attach_at(t, {0}, P("y")), P("x(y(y,x),y)"));
    EXPECT_EQ(attach_at(t, {}, P("x")), P("x(x,y(x),y)"));
    EXPECT_EQ(detach_at(t, {0, 0}), P("x(y,y)"));
    EXPECT_EQ(detach_at(t, {1}), P("x(y(x))"));
    EXPECT_THROW(detach_at(t, {}), Error);
    Tree n = N("x(y,x)");
    EXPECT_EQ(attach_at(n, {0}, N("y")), N("x(y,x(y))"));
}

TEST(Trees, BinaryTrees)
{
    BinaryTree t = parse_binary(xy, "((x^y)^x)");
    EXPECT_EQ(t.leaf_count(), 3);
    EXPECT_EQ(t.degree(), 3);
    EXPECT_FALSE(t.is_leaf());
    EXPECT_TRUE(t.right().is_leaf());
    EXPECT_EQ(format_binary(xy, t), "((x^y)^x)");
    EXPECT_FALSE(parse_binary(xy, "(x^y)") == parse_binary(xy, "(y^x)"));
}

TEST(TreeIo, RoundTripAndBlanks)
{
    for (const auto& t : enumerate_planar(xy, 4))
        EXPECT_EQ(parse_tree(xy, format_tree(xy, t)), t);
    EXPECT_EQ(P(" x ( y , x( y ) ) "), P("x(y,x(y))"));
}

TEST(TreeIo, ErrorsCarryPositions)
{
    auto expect_at = [](const char* text, std::size_t pos) {
        try {
            parse_tree(xy, text);
            ADD_FAILURE() << text;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.position(), pos) << text << ": " << e.what();
        }
    };
    expect_at("z", 0);
    expect_at("x(y", 3);
    expect_at("x(y,)", 4);
    expect_at("x()", 2);
    expect_at("x y", 2);
    EXPECT_THROW(parse_binary(xy, "(x^y"), ParseError);
    EXPECT_THROW(parse_binary(xy, "(x,y)"), ParseError);
}

TEST(Trees, HashAgreesWithEquality)
{
    auto all = enumerate_nonplanar(xy, 5);
    std::unordered_set<Tree> set(all.begin(), all.end());
    EXPECT_EQ(set.size(), all.size());
}
