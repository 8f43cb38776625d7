#include "plgb/tree_algebra.hpp"

#include <cctype>

namespace plgb {

PlanarTree left_butcher(const PlanarTree& sigma, const PlanarTree& tau)
{
    std::vector<PlanarTree> branches;
    branches.reserve(tau.branches().size() + 1);
    branches.push_back(sigma);
    branches.insert(branches.end(), tau.branches().begin(), tau.branches().end());
    return PlanarTree(tau.root(), std::move(branches));
}

PlanarPoly left_graft(const PlanarTree& sigma, const PlanarTree& tau)
{
    PlanarPoly out;
    for (const auto& v : vertex_paths(tau))
        out.add_term(attach_at(tau, v, sigma), Rational(1));
    return out;
}

Tree butcher(const Tree& s, const Tree& t)
{
    std::vector<Tree> branches = t.branches();
    branches.push_back(s);
    return Tree(t.root(), std::move(branches));
}

TreePoly graft(const Tree& s, const Tree& t)
{
    TreePoly out;
    for (const auto& v : vertex_paths(t))
        out.add_term(attach_at(t, v, s), Rational(1));
    return out;
}

Tree graft_at(const Tree& s, const Tree& t, const VertexPath& v)
{
    return attach_at(t, v, s);
}

PlanarPoly left_butcher(const PlanarPoly& f, const PlanarPoly& g)
{
    return bilinear(f, g, [](const PlanarTree& a, const PlanarTree& b) { return left_butcher(a, b); });
}

PlanarPoly left_graft(const PlanarPoly& f, const PlanarPoly& g)
{
    return bilinear(f, g, [](const PlanarTree& a, const PlanarTree& b) { return left_graft(a, b); });
}

TreePoly butcher(const TreePoly& f, const TreePoly& g)
{
    return bilinear(f, g, [](const Tree& a, const Tree& b) { return butcher(a, b); });
}

TreePoly graft(const TreePoly& f, const TreePoly& g)
{
    return bilinear(f, g, [](const Tree& a, const Tree& b) { return graft(a, b); });
}

TreePoly forget_planarity(const PlanarPoly& f)
{
    TreePoly out;
    for (const auto& [m, c] : f)
        out.add_term(forget_planarity(m), c);
    return out;
}

namespace detail {

std::optional<Rational> parse_coefficient(Scanner& in)
{
    in.skip_blanks();
    std::string_view rest = in.rest();
    std::size_t i = 0;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i])))
        ++i;
    if (i == 0)
        return std::nullopt;
    if (i < rest.size() && rest[i] == '/') {
        std::size_t j = i + 1;
        while (j < rest.size() && std::isdigit(static_cast<unsigned char>(rest[j])))
            ++j;
        if (j == i + 1)
            in.fail("expected a denominator");
        i = j;
    }
    Rational c;
    try {
        c = parse_rational(rest.substr(0, i));
    } catch (const ParseError&) {
        in.fail("malformed coefficient");
    }
    for (std::size_t k = 0; k < i; ++k)
        in.accept(rest[k]);
    return c;
}

} // namespace detail

namespace {

template <class M, class Term>
LinearCombination<M> parse_whole(std::string_view text, Term&& term)
{
    detail::Scanner in(text);
    auto out = detail::parse_sum<M>(in, term);
    if (!in.at_end())
        in.fail("unexpected trailing input");
    return out;
}

} // namespace

PlanarPoly parse_planar_poly(const Alphabet& alphabet, std::string_view text)
{
    return parse_whole<PlanarTree>(text, [&](detail::Scanner& in) { return detail::parse_tree(alphabet, in); });
}

TreePoly parse_tree_poly(const Alphabet& alphabet, std::string_view text)
{
    return parse_whole<Tree>(
        text, [&](detail::Scanner& in) { return forget_planarity(detail::parse_tree(alphabet, in)); });
}

std::string format_poly(const Alphabet& alphabet, const PlanarPoly& f)
{
    return detail::format_sum(f, [&](const PlanarTree& t) { return format_tree(alphabet, t); });
}

std::string format_poly(const Alphabet& alphabet, const TreePoly& f)
{
    return detail::format_sum(f, [&](const Tree& t) { return format_tree(alphabet, t); });
}

} // namespace plgb
