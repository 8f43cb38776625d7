#include "plgb/ideal.hpp"

#include "plgb/enumerate.hpp"

#include <map>
#include <memory>
#include <tuple>

namespace plgb {

namespace {

template <class M, class Enumerate>
std::function<std::vector<M>(int)> cached(const Alphabet& alphabet, Enumerate enumerate)
{
    auto cache = std::make_shared<std::map<int, std::vector<M>>>();
    return [alphabet, cache, enumerate](int n) -> std::vector<M> {
        auto it = cache->find(n);
        if (it == cache->end())
            it = cache->emplace(n, enumerate(alphabet, n)).first;
        return it->second;
    };
}

} // namespace

IdealKind parse_ideal_kind(std::string_view text)
{
    if (text == "J")
        return IdealKind::J;
    if (text == "J'" || text == "Jprime" || text == "J-prime")
        return IdealKind::JPrime;
    if (text == "I")
        return IdealKind::I;
    throw ParseError("unknown ideal '" + std::string(text) + "' (expected J, J' or I)", 0);
}

std::string_view to_string(IdealKind kind)
{
    switch (kind) {
    case IdealKind::J: return "J";
    case IdealKind::JPrime: return "J'";
    default: return "I";
    }
}

Carrier<PlanarTree> planar_carrier(const Alphabet& alphabet)
{
    return {"planar trees, left Butcher product", cached<PlanarTree>(alphabet, enumerate_planar),
            [](const PlanarTree& a, const PlanarTree& b) { return PlanarPoly(left_butcher(a, b)); }};
}

Carrier<Tree> nonplanar_carrier(const Alphabet& alphabet)
{
    return {"non-planar trees, grafting", cached<Tree>(alphabet, enumerate_nonplanar),
            [](const Tree& a, const Tree& b) { return graft(a, b); }};
}

Carrier<BinaryTree> binary_dot_carrier(const Alphabet& alphabet)
{
    return {"binary trees, magma product", cached<BinaryTree>(alphabet, enumerate_binary_by_degree),
            [](const BinaryTree& a, const BinaryTree& b) { return BinaryPoly(vee(a, b)); }};
}

Carrier<BinaryTree> binary_star_carrier(const Alphabet& alphabet)
{
    return {"binary trees, weighted product", cached<BinaryTree>(alphabet, enumerate_binary_by_degree),
            [](const BinaryTree& a, const BinaryTree& b) { return star(a, b); }};
}

PlanarPoly prelie_relation(const PlanarTree& s, const PlanarTree& t, const PlanarTree& r)
{
    PlanarPoly out;
    out.add_term(left_butcher(left_butcher(s, t), r), Rational(1));
    out.add_term(left_butcher(s, left_butcher(t, r)), Rational(-1));
    out.add_term(left_butcher(left_butcher(t, s), r), Rational(-1));
    out.add_term(left_butcher(t, left_butcher(s, r)), Rational(1));
    return out;
}

PlanarPoly weighted_antisymmetry(const PlanarTree& s, const PlanarTree& t)
{
    PlanarPoly out;
    out.add_term(left_butcher(s, t), Rational(s.degree()));
    out.add_term(left_butcher(t, s), Rational(t.degree()));
    return out;
}

TreePoly weighted_antisymmetry(const Tree& s, const Tree& t)
{
    TreePoly out;
    out.add_scaled(graft(s, t), Rational(s.degree()));
    out.add_scaled(graft(t, s), Rational(t.degree()));
    return out;
}

IdealPresentation<PlanarTree> planar_ideal_J(const Alphabet& alphabet)
{
    return {"J",
            planar_carrier(alphabet),
            {{"pre-Lie", 3, [](const std::vector<PlanarTree>& p) { return prelie_relation(p[0], p[1], p[2]); }}}};
}

IdealPresentation<PlanarTree> planar_ideal_J_prime(const Alphabet& alphabet)
{
    auto pres = planar_ideal_J(alphabet);
    pres.name = "J'";
    pres.schemas.push_back(
        {"weighted anti-symmetry", 2, [](const std::vector<PlanarTree>& p) { return weighted_antisymmetry(p[0], p[1]); }});
    return pres;
}

IdealPresentation<Tree> nonplanar_ideal_I(const Alphabet& alphabet)
{
    return {"I",
            nonplanar_carrier(alphabet),
            {{"weighted anti-symmetry", 2, [](const std::vector<Tree>& p) { return weighted_antisymmetry(p[0], p[1]); }}}};
}

IdealPresentation<BinaryTree> binary_ideal_star_lie(const Alphabet& alphabet)
{
    auto anti = [](const std::vector<BinaryTree>& p) { return star(p[0], p[1]) + star(p[1], p[0]); };
    auto jacobi = [](const std::vector<BinaryTree>& p) {
        const BinaryPoly x(p[0]), y(p[1]), z(p[2]);
        return star(x, star(y, z)) + star(y, star(z, x)) + star(z, star(x, y));
    };
    return {"star Lie", binary_star_carrier(alphabet), {{"anti-symmetry", 2, anti}, {"Jacobi", 3, jacobi}}};
}

IdealPresentation<BinaryTree> binary_ideal_dot_prelie(const Alphabet& alphabet)
{
    auto prelie = [](const std::vector<BinaryTree>& p) {
        const auto& [x, y, z] = std::tie(p[0], p[1], p[2]);
        BinaryPoly out;
        out.add_term(vee(vee(x, y), z), Rational(1));
        out.add_term(vee(x, vee(y, z)), Rational(-1));
        out.add_term(vee(vee(y, x), z), Rational(-1));
        out.add_term(vee(y, vee(x, z)), Rational(1));
        return out;
    };
    auto anti = [](const std::vector<BinaryTree>& p) {
        BinaryPoly out;
        out.add_term(vee(p[0], p[1]), Rational(p[0].degree()));
        out.add_term(vee(p[1], p[0]), Rational(p[1].degree()));
        return out;
    };
    return {"dot pre-Lie",
            binary_dot_carrier(alphabet),
            {{"pre-Lie", 3, prelie}, {"weighted anti-symmetry", 2, anti}}};
}

TreePoly quotient_prelie_product(const TreePoly& f, const TreePoly& g, const IdealBases<Tree>& bases)
{
    return can(graft(f, g), bases);
}

TreePoly quotient_bracket(const TreePoly& f, const TreePoly& g, const IdealBases<Tree>& bases)
{
    if (f.is_zero())
        return {};
    auto d = f.homogeneous_degree();
    if (!d)
        throw DegreeError("quotient bracket needs a homogeneous left argument");
    return Rational(*d) * can(graft(f, g), bases);
}

} // namespace plgb
