#include "plgb/alphabet.hpp"
#include "plgb/error.hpp"
#include "plgb/order.hpp"

#include <gtest/gtest.h>

using namespace plgb;

TEST(Alphabet, RanksByDegreeThenDeclaration)
{
    Alphabet a({{"c", 2}, {"b", 1}, {"d", 2}, {"a", 1}});
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(a[0].name, "b");
    EXPECT_EQ(a[1].name, "a");
    EXPECT_EQ(a[2].name, "c");
    EXPECT_EQ(a[3].name, "d");
    for (int i = 0; i < 4; ++i)
        EXPECT_EQ(a[i].rank, i);
}

TEST(Alphabet, Lookup)
{
    auto a = Alphabet::uniform({"x", "y"});
    EXPECT_EQ(a.letter("y").rank, 1);
    EXPECT_EQ(a.name(a.letter("x")), "x");
    EXPECT_FALSE(a.lookup("z").has_value());
    EXPECT_THROW(a.find("z"), Error);
}

TEST(Alphabet, Graded)
{
    auto g = Alphabet::graded(4);
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(g[i].name, "a" + std::to_string(i + 1));
        EXPECT_EQ(g[i].degree, i + 1);
    }
}

TEST(Alphabet, RejectsBadDeclarations)
{
    EXPECT_THROW(Alphabet({}), Error);
    EXPECT_THROW(Alphabet({{"x", 1}, {"x", 2}}), Error);
    EXPECT_THROW(Alphabet({{"x", 0}}), DegreeError);
    EXPECT_THROW(Alphabet({{"x", -1}}), DegreeError);
    EXPECT_THROW(Alphabet({{"1x", 1}}), Error);
    EXPECT_THROW(Alphabet({{"", 1}}), Error);
}

TEST(Alphabet, Json)
{
    auto a = Alphabet::from_json(R"({"generators":[{"name":"p","degree":3},{"name":"q"}]})");
    EXPECT_EQ(a[0].name, "q");
    EXPECT_EQ(a[0].degree, 1);
    EXPECT_EQ(a[1].degree, 3);
    auto b = Alphabet::from_json(a.to_json());
    EXPECT_EQ(b[1].name, "p");
    EXPECT_THROW(Alphabet::from_json("{"), ParseError);
    EXPECT_THROW(Alphabet::from_json(R"({"gens":[]})"), ParseError);
    EXPECT_THROW(Alphabet::from_json(R"({"generators":[{"degree":1}]})"), ParseError);
    EXPECT_THROW(Alphabet::from_json(R"({"generators":[{"name":"x","degree":"1"}]})"), ParseError);
    EXPECT_THROW(Alphabet::from_json(R"({"generators":[]})"), Error);
}

TEST(Alphabet, GeneratorComparison)
{
    Alphabet a({{"b", 2}, {"a", 1}, {"c", 1}});
    auto d = cmp_generators(a.find("a"), a.find("b"));
    EXPECT_TRUE(d.less());
    EXPECT_EQ(d.rule, Rule::Degree);
    d = cmp_generators(a.find("c"), a.find("a"));
    EXPECT_TRUE(d.greater());
    EXPECT_EQ(d.rule, Rule::Root);
    EXPECT_TRUE(cmp_generators(a.find("c"), a.find("c")).equal());
    Alphabet other({{"a", 1}});
    EXPECT_THROW(cmp_generators(a.find("a"), other.find("a")), Error);
}
