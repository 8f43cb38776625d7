#pragma once

#include "plgb/alphabet.hpp"
#include "plgb/trees.hpp"

#include <compare>
#include <string_view>

namespace plgb {

enum class Outcome { Less, Equal, Greater };

/// Which clause of the tree order decided a comparison.
enum class Rule {
    Identical = 0,   ///< structurally equal
    Degree = 1,      ///< |s| vs |t|
    BranchCount = 2, ///< b(s) vs b(t)
    Branches = 3,    ///< lexicographic comparison of branch tuples
    Root = 4,        ///< root decorations
};

struct OrderDecision {
    Outcome outcome = Outcome::Equal;
    Rule rule = Rule::Identical;

    bool less() const { return outcome == Outcome::Less; }
    bool greater() const { return outcome == Outcome::Greater; }
    bool equal() const { return outcome == Outcome::Equal; }
    OrderDecision reversed() const;
};

std::string_view to_string(Outcome o);
std::string_view to_string(Rule r);

/// First by degree, then by rank inside a degree. Throws Error for
/// generators of different alphabets.
OrderDecision cmp_generators(const Generator& a, const Generator& b);

/// The planar monomial well-order: degree, then root branch count, then
/// branch tuples lexicographically, then root decoration.
OrderDecision cmp_planar(const PlanarTree& s, const PlanarTree& t);

/// Same cascade on canonical trees; branch lists are compared in their
/// sorted (nondecreasing) order.
OrderDecision cmp_nonplanar(const Tree& s, const Tree& t);

/// Degree, then leaf < node, then leaf rank, then left subtree, then right.
OrderDecision cmp_binary(const BinaryTree& s, const BinaryTree& t);

inline std::strong_ordering to_ordering(OrderDecision d)
{
    switch (d.outcome) {
    case Outcome::Less: return std::strong_ordering::less;
    case Outcome::Greater: return std::strong_ordering::greater;
    default: return std::strong_ordering::equal;
    }
}

inline std::strong_ordering monomial_compare(const PlanarTree& a, const PlanarTree& b)
{
    return to_ordering(cmp_planar(a, b));
}
inline std::strong_ordering monomial_compare(const Tree& a, const Tree& b)
{
    return to_ordering(cmp_nonplanar(a, b));
}
inline std::strong_ordering monomial_compare(const BinaryTree& a, const BinaryTree& b)
{
    return to_ordering(cmp_binary(a, b));
}

template <class M>
struct Ascending {
    bool operator()(const M& a, const M& b) const { return monomial_compare(a, b) < 0; }
};

template <class M>
struct Descending {
    bool operator()(const M& a, const M& b) const { return monomial_compare(a, b) > 0; }
};

} // namespace plgb
