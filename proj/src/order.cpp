#include "plgb/order.hpp"

#include "plgb/error.hpp"

namespace plgb {

namespace {

template <class T>
OrderDecision by(const T& a, const T& b, Rule rule)
{
    if (a < b)
        return {Outcome::Less, rule};
    if (b < a)
        return {Outcome::Greater, rule};
    return {Outcome::Equal, Rule::Identical};
}

template <class P, class Cmp>
OrderDecision cmp_rooted(const BasicTree<P>& s, const BasicTree<P>& t, Cmp&& recurse)
{
    if (&s == &t)
        return {};
    if (auto d = by(s.degree(), t.degree(), Rule::Degree); !d.equal())
        return d;
    if (auto d = by(s.branches().size(), t.branches().size(), Rule::BranchCount); !d.equal())
        return d;
    for (std::size_t i = 0; i < s.branches().size(); ++i) {
        OrderDecision d = recurse(s.branches()[i], t.branches()[i]);
        if (!d.equal())
            return {d.outcome, Rule::Branches};
    }
    return by(s.root().rank, t.root().rank, Rule::Root);
}

} // namespace

OrderDecision OrderDecision::reversed() const
{
    switch (outcome) {
    case Outcome::Less: return {Outcome::Greater, rule};
    case Outcome::Greater: return {Outcome::Less, rule};
    default: return *this;
    }
}

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::Less: return "less";
    case Outcome::Greater: return "greater";
    default: return "equal";
    }
}

std::string_view to_string(Rule r)
{
    switch (r) {
    case Rule::Degree: return "degree";
    case Rule::BranchCount: return "branch-count";
    case Rule::Branches: return "branches";
    case Rule::Root: return "root";
    default: return "identical";
    }
}

OrderDecision cmp_generators(const Generator& a, const Generator& b)
{
    if (a.alphabet_id != b.alphabet_id)
        throw Error("cannot compare generators '" + a.name + "' and '" + b.name + "' of different alphabets");
    if (auto d = by(a.degree, b.degree, Rule::Degree); !d.equal())
        return d;
    return by(a.rank, b.rank, Rule::Root);
}

OrderDecision cmp_planar(const PlanarTree& s, const PlanarTree& t)
{
    return cmp_rooted(s, t, [](const PlanarTree& a, const PlanarTree& b) { return cmp_planar(a, b); });
}

OrderDecision cmp_nonplanar(const Tree& s, const Tree& t)
{
    return cmp_rooted(s, t, [](const Tree& a, const Tree& b) { return cmp_nonplanar(a, b); });
}

OrderDecision cmp_binary(const BinaryTree& s, const BinaryTree& t)
{
    if (&s == &t)
        return {};
    if (auto d = by(s.degree(), t.degree(), Rule::Degree); !d.equal())
        return d;
    if (s.is_leaf() != t.is_leaf())
        return {s.is_leaf() ? Outcome::Less : Outcome::Greater, Rule::BranchCount};
    if (s.is_leaf())
        return by(s.leaf().rank, t.leaf().rank, Rule::Root);
    if (auto d = cmp_binary(s.left(), t.left()); !d.equal())
        return {d.outcome, Rule::Branches};
    if (auto d = cmp_binary(s.right(), t.right()); !d.equal())
        return {d.outcome, Rule::Branches};
    return {};
}

} // namespace plgb
