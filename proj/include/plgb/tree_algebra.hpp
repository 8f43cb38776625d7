#pragma once

#include "plgb/alphabet.hpp"
#include "plgb/linear_combination.hpp"
#include "plgb/tree_io.hpp"
#include "plgb/trees.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace plgb {

using PlanarPoly = LinearCombination<PlanarTree>;
using TreePoly = LinearCombination<Tree>;

/// sigma o\ tau: sigma becomes the new leftmost branch of the root of tau.
PlanarTree left_butcher(const PlanarTree& sigma, const PlanarTree& tau);

/// sigma \ tau: sum over the vertices v of tau of sigma grafted as the
/// leftmost branch of v. All terms have coefficient one.
PlanarPoly left_graft(const PlanarTree& sigma, const PlanarTree& tau);

/// s |> t, the NAP Butcher product on canonical trees.
Tree butcher(const Tree& s, const Tree& t);

/// s -> t, the pre-Lie grafting; coinciding results accumulate.
TreePoly graft(const Tree& s, const Tree& t);

/// s ->_v t for a single vertex.
Tree graft_at(const Tree& s, const Tree& t, const VertexPath& v);

PlanarPoly left_butcher(const PlanarPoly& f, const PlanarPoly& g);
PlanarPoly left_graft(const PlanarPoly& f, const PlanarPoly& g);
TreePoly butcher(const TreePoly& f, const TreePoly& g);
TreePoly graft(const TreePoly& f, const TreePoly& g);

/// pi applied termwise.
TreePoly forget_planarity(const PlanarPoly& f);

/// T(f) and lc(f); throws Error on zero.
template <class M>
std::pair<M, Rational> leading_term(const LinearCombination<M>& f)
{
    return f.leading_term();
}

// Linear-combination text format: `c1*TREE1 + c2*TREE2 - ...`.
// Coefficients are integers or p/q; a missing coefficient means 1; "0" is
// the zero polynomial. Output lists terms in descending order.

PlanarPoly parse_planar_poly(const Alphabet& alphabet, std::string_view text);
TreePoly parse_tree_poly(const Alphabet& alphabet, std::string_view text);
std::string format_poly(const Alphabet& alphabet, const PlanarPoly& f);
std::string format_poly(const Alphabet& alphabet, const TreePoly& f);

namespace detail {

/// Renders `c*X` sums given a per-term formatter.
template <class Poly, class Format>
std::string format_sum(const Poly& f, Format&& format_term)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += format_rational(mag);
            out += "*";
        }
        out += format_term(m);
        first = false;
    }
    return out;
}

/// Reads a coefficient token if one is present ("3", "3/4"); the caller has
/// already consumed any sign.
std::optional<Rational> parse_coefficient(Scanner& in);

/// Parses `[-] [c *] TERM ((+|-) [c *] TERM)*` or "0".
template <class M, class ParseTerm>
LinearCombination<M> parse_sum(Scanner& in, ParseTerm&& parse_term)
{
    LinearCombination<M> out;
    in.skip_blanks();
    if (in.peek() == '0') {
        auto save = in.rest();
        Scanner probe(save);
        probe.accept('0');
        if (probe.at_end()) {
            in.accept('0');
            return out;
        }
    }
    bool first = true;
    while (true) {
        in.skip_blanks();
        Rational sign(1);
        if (in.accept('-'))
            sign = -1;
        else if (!first)
            in.expect('+');
        else
            in.accept('+');
        in.skip_blanks();
        Rational c = sign;
        if (auto k = parse_coefficient(in)) {
            c *= *k;
            in.skip_blanks();
            in.expect('*');
        }
        M term = parse_term(in);
        out.add_term(term, c);
        first = false;
        in.skip_blanks();
        if (in.at_end())
            break;
        char next = in.peek();
        if (next != '+' && next != '-')
            in.fail("expected '+' or '-'");
    }
    return out;
}

} // namespace detail

} // namespace plgb
