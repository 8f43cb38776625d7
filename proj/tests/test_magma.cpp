#include "plgb/enumerate.hpp"
#include "plgb/error.hpp"
#include "plgb/magma.hpp"
#include "plgb/tree_io.hpp"
#include "plgb/verify.hpp"

#include <gtest/gtest.h>

using namespace plgb;

namespace {

const Alphabet g5({{"a", 2}, {"b", 3}, {"c", 1}, {"d", 4}, {"e", 5}});

BinaryTree B(const Alphabet& al, const char* s) { return parse_binary(al, s); }

} // namespace

TEST(Magma, VeeBuildsNewRoot)
{
    BinaryTree a = B(g5, "a"), b = B(g5, "b");
    BinaryTree y = vee(a, b);
    EXPECT_EQ(y, B(g5, "(a^b)"));
    EXPECT_EQ(y.left(), a);
    EXPECT_EQ(y.right(), b);
    EXPECT_EQ(y.leaf_count(), 2);
    EXPECT_EQ(vee(y, y).leaf_count(), 4);
}

TEST(Magma, StarWeightsByLeftDegree)
{
    BinaryTree a = B(g5, "a"), b = B(g5, "b"), c = B(g5, "c");
    EXPECT_EQ(star(a, b), BinaryPoly(B(g5, "(a^b)"), Rational(2)));
    EXPECT_EQ(star(a, a), BinaryPoly(B(g5, "(a^a)"), Rational(2)));
    BinaryPoly ab = star(BinaryPoly(a), BinaryPoly(b));
    EXPECT_EQ(star(ab, BinaryPoly(c)), BinaryPoly(B(g5, "((a^b)^c)"), Rational(2 * (2 + 3))));
}

TEST(Magma, StarRejectsMixedDegreeLeftFactor)
{
    BinaryPoly x = BinaryPoly(B(g5, "a")) + BinaryPoly(B(g5, "b"));
    EXPECT_THROW(star(x, BinaryPoly(B(g5, "c"))), DegreeError);
    EXPECT_TRUE(star(BinaryPoly{}, BinaryPoly(B(g5, "c"))).is_zero());
}

TEST(WeightF, Examples)
{
    EXPECT_EQ(weight_f(B(g5, "a")), 1);
    // |a| |d| (|a|+|b|) (|a|+|b|+|c|)
    EXPECT_EQ(weight_f(B(g5, "(((a^b)^c)^(d^e))")), 2 * 4 * (2 + 3) * (2 + 3 + 1));
    EXPECT_EQ(weight_f(B(g5, "((a^b)^c)")), 2 * (2 + 3));
    EXPECT_EQ(weight_f_by_left_vertices(B(g5, "(((a^b)^c)^(d^e))")), 2 * 4 * (2 + 3) * (2 + 3 + 1));
}

TEST(WeightF, RightCombs)
{
    auto one = Alphabet::single();
    EXPECT_EQ(weight_f(B(one, "(a^(a^a))")), 1);
    EXPECT_EQ(weight_f_by_left_vertices(B(one, "(a^(a^(a^a)))")), 1);
    // with graded letters only the left leaf degrees remain
    EXPECT_EQ(weight_f(B(g5, "(a^(b^c))")), 2 * 3);
}

TEST(WeightF, TwoFormulasAgree)
{
    auto r = check_weight_f(g5, 5);
    EXPECT_TRUE(r.passed) << r.detail;
    r = check_weight_f(Alphabet::uniform({"x", "y"}), 6);
    EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Gamma, Examples)
{
    BinaryTree a = B(g5, "a"), b = B(g5, "b");
    EXPECT_EQ(gamma(BinaryPoly(a)), BinaryPoly(a));
    EXPECT_EQ(gamma(BinaryPoly(vee(a, b))), BinaryPoly(vee(a, b), Rational(2)));
    BinaryPoly x = BinaryPoly(B(g5, "(a^c)")) + BinaryPoly(B(g5, "(c^(e^a))"), Rational(3));
    EXPECT_EQ(gamma_inverse(gamma(x)), x);
}

TEST(Gamma, MorphismLaw)
{
    auto r = check_gamma_morphism(Alphabet::graded(3), 4);
    EXPECT_TRUE(r.passed) << r.detail;
    r = check_gamma_morphism(Alphabet::uniform({"x", "y"}), 4);
    EXPECT_TRUE(r.passed) << r.detail;
}

TEST(BinaryPolyIo, RoundTrip)
{
    BinaryPoly f = parse_binary_poly(g5, "2*(a^b) - 1/3*((a^b)^c)");
    EXPECT_EQ(parse_binary_poly(g5, format_poly(g5, f)), f);
    EXPECT_THROW(parse_binary_poly(g5, "(a^"), ParseError);
}
