#include "plgb/magma.hpp"

#include "plgb/tree_algebra.hpp"
#include "plgb/tree_io.hpp"
#include "plgb/error.hpp"

namespace plgb {

BinaryTree vee(const BinaryTree& t1, const BinaryTree& t2)
{
    return BinaryTree(t1, t2);
}

BinaryPoly star(const BinaryTree& x, const BinaryTree& y)
{
    return BinaryPoly(vee(x, y), Rational(x.degree()));
}

BinaryPoly star(const BinaryPoly& x, const BinaryPoly& y)
{
    if (!x.is_zero() && !x.homogeneous_degree())
        throw DegreeError("star: left factor is not homogeneous");
    return bilinear(x, y, [](const BinaryTree& a, const BinaryTree& b) { return star(a, b); });
}

BinaryPoly dot(const BinaryPoly& x, const BinaryPoly& y)
{
    return bilinear(x, y, [](const BinaryTree& a, const BinaryTree& b) { return vee(a, b); });
}

Rational weight_f(const BinaryTree& z)
{
    if (z.is_leaf())
        return Rational(1);
    return Rational(z.left().degree()) * weight_f(z.left()) * weight_f(z.right());
}

Rational weight_f_by_left_vertices(const BinaryTree& z)
{
    Rational out(1);
    std::vector<const BinaryTree*> stack{&z};
    while (!stack.empty()) {
        const BinaryTree* v = stack.back();
        stack.pop_back();
        if (v->is_leaf())
            continue;
        out *= v->left().degree();
        stack.push_back(&v->left());
        stack.push_back(&v->right());
    }
    return out;
}

BinaryPoly gamma(const BinaryPoly& x)
{
    BinaryPoly out;
    for (const auto& [z, c] : x)
        out.add_term(z, c * weight_f(z));
    return out;
}

BinaryPoly gamma_inverse(const BinaryPoly& x)
{
    BinaryPoly out;
    for (const auto& [z, c] : x)
        out.add_term(z, c / weight_f(z));
    return out;
}

BinaryPoly parse_binary_poly(const Alphabet& alphabet, std::string_view text)
{
    detail::Scanner in(text);
    auto out = detail::parse_sum<BinaryTree>(in, [&](detail::Scanner& s) { return detail::parse_binary(alphabet, s); });
    if (!in.at_end())
        in.fail("unexpected trailing input");
    return out;
}

std::string format_poly(const Alphabet& alphabet, const BinaryPoly& f)
{
    return detail::format_sum(f, [&](const BinaryTree& t) { return format_binary(alphabet, t); });
}

} // namespace plgb
