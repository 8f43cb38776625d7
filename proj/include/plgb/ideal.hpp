#pragma once

#include "plgb/alphabet.hpp"
#include "plgb/echelon.hpp"
#include "plgb/error.hpp"
#include "plgb/linear_combination.hpp"
#include "plgb/magma.hpp"
#include "plgb/tree_algebra.hpp"
#include "plgb/trees.hpp"

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace plgb {

/// A graded magmatic algebra with a monomial basis: the monomials of each
/// degree (ascending) and the product of two monomials.
template <class M>
struct Carrier {
    std::string name;
    std::function<std::vector<M>(int)> monomials;
    std::function<LinearCombination<M>(const M&, const M&)> multiply;

    LinearCombination<M> multiply_poly(const LinearCombination<M>& f, const LinearCombination<M>& g) const
    {
        return bilinear(f, g, multiply);
    }
};

/// Parameterised generator family of an ideal. Instances are homogeneous of
/// degree equal to the sum of the parameter degrees.
template <class M>
struct Schema {
    std::string name;
    int arity = 2;
    std::function<LinearCombination<M>(const std::vector<M>&)> instantiate;
};

template <class M>
struct IdealPresentation {
    std::string name;
    Carrier<M> carrier;
    std::vector<Schema<M>> schemas;
};

struct Caps {
    int max_degree = 8;
    std::size_t max_terms = 1'000'000;  ///< bound on the size of any single product
    std::size_t max_seeds = 5'000'000;  ///< bound on schema instances per degree
};

/// Reduced echelon basis of the degree-n component of an ideal.
template <class M>
struct HomogeneousIdealBasis {
    int degree = 0;
    Echelon<M> echelon;

    std::vector<LinearCombination<M>> rows() const { return echelon.rows(); }
    std::size_t rank() const { return echelon.rank(); }
};

/// Bases for degrees 1..max_degree of one ideal.
template <class M>
class IdealBases {
public:
    IdealBases(Carrier<M> carrier, std::vector<HomogeneousIdealBasis<M>> components)
        : carrier_(std::move(carrier)), components_(std::move(components)) {}

    int max_degree() const { return static_cast<int>(components_.size()); }
    const Carrier<M>& carrier() const { return carrier_; }

    const HomogeneousIdealBasis<M>& operator[](int n) const
    {
        if (n < 1 || n > max_degree())
            throw DegreeError("degree " + std::to_string(n) + " exceeds computed ideal bases (max " +
                              std::to_string(max_degree()) + ")");
        return components_[static_cast<std::size_t>(n - 1)];
    }

private:
    Carrier<M> carrier_;
    std::vector<HomogeneousIdealBasis<M>> components_;
};

namespace detail {

template <class M, class Visit>
void for_each_tuple(const Carrier<M>& carrier, int arity, int degree, std::vector<M>& prefix, Visit& visit)
{
    if (arity == 1) {
        if (degree < 1)
            return;
        for (const M& m : carrier.monomials(degree)) {
            prefix.push_back(m);
            visit(prefix);
            prefix.pop_back();
        }
        return;
    }
    for (int d = 1; d <= degree - (arity - 1); ++d) {
        for (const M& m : carrier.monomials(d)) {
            prefix.push_back(m);
            for_each_tuple(carrier, arity - 1, degree - d, prefix, visit);
            prefix.pop_back();
        }
    }
}

} // namespace detail

/// Degree-by-degree span of the two-sided ideal generated by the schemas.
///
/// Degree n is spanned by the schema instances of degree n and by the left
/// and right products of the lower-degree basis rows with all monomials of
/// complementary degree. Lower components are complete when degree n is
/// built, so a single ascending pass reaches the fixpoint.
template <class M>
IdealBases<M> span_ideal(const IdealPresentation<M>& pres, int max_degree, const Caps& caps = {})
{
    if (max_degree < 1)
        throw DegreeError("span_ideal: degree must be >= 1");
    if (max_degree > caps.max_degree)
        throw ResourceLimit("span_ideal: degree " + std::to_string(max_degree) + " exceeds cap " +
                            std::to_string(caps.max_degree));
    const Carrier<M>& carrier = pres.carrier;
    std::vector<HomogeneousIdealBasis<M>> components;
    for (int n = 1; n <= max_degree; ++n) {
        HomogeneousIdealBasis<M> basis;
        basis.degree = n;
        std::size_t seeds = 0;
        auto add = [&](const LinearCombination<M>& v) {
            if (v.size() > caps.max_terms)
                throw ResourceLimit("span_ideal: product with " + std::to_string(v.size()) + " terms");
            basis.echelon.insert(v);
        };
        for (const auto& schema : pres.schemas) {
            std::vector<M> prefix;
            auto visit = [&](const std::vector<M>& params) {
                if (++seeds > caps.max_seeds)
                    throw ResourceLimit("span_ideal: more than " + std::to_string(caps.max_seeds) +
                                        " seed instances in degree " + std::to_string(n));
                add(schema.instantiate(params));
            };
            detail::for_each_tuple(carrier, schema.arity, n, prefix, visit);
        }
        for (int m = 1; m < n; ++m) {
            const auto& lower = components[static_cast<std::size_t>(m - 1)];
            if (lower.rank() == 0)
                continue;
            const auto factors = carrier.monomials(n - m);
            for (const auto& row : lower.echelon.rows()) {
                for (const M& t : factors) {
                    const LinearCombination<M> tp(t);
                    add(carrier.multiply_poly(tp, row));
                    add(carrier.multiply_poly(row, tp));
                }
            }
        }
        components.push_back(std::move(basis));
    }
    return IdealBases<M>(carrier, std::move(components));
}

/// T(I)_n, descending.
template <class M>
std::vector<M> leading_terms(const HomogeneousIdealBasis<M>& basis)
{
    return basis.echelon.leading_monomials();
}

/// O(I)_n: degree-n monomials that are not leading terms, ascending.
template <class M>
std::vector<M> complement(const HomogeneousIdealBasis<M>& basis, const Carrier<M>& carrier)
{
    std::vector<M> out;
    for (const M& m : carrier.monomials(basis.degree))
        if (basis.echelon.row_with_leading(m) == nullptr)
            out.push_back(m);
    return out;
}

template <class M>
std::vector<M> complement(const IdealBases<M>& bases, int n)
{
    return complement(bases[n], bases.carrier());
}

/// Canonical form Can(f, I) via the reduction loop: a leading term outside
/// T(I) moves to the output; otherwise it is cancelled by an ideal element
/// with the same leading term and leading coefficient one.
///
/// With `rng`, each reducer is the echelon row plus a random combination of
/// rows with smaller leading terms, which exercises reducer-choice
/// independence.
template <class M>
LinearCombination<M> can(LinearCombination<M> f, const IdealBases<M>& bases, std::mt19937_64* rng = nullptr)
{
    LinearCombination<M> h;
    while (!f.is_zero()) {
        auto [lead, lc] = f.leading_term();
        const auto& component = bases[degree(lead)];
        const auto* row = component.echelon.row_with_leading(lead);
        if (row == nullptr) {
            h.add_term(lead, lc);
            f.erase(lead);
            continue;
        }
        LinearCombination<M> g = *row;
        if (rng != nullptr) {
            std::uniform_int_distribution<int> coin(-2, 2);
            for (const auto& [m, other] : component.echelon.table()) {
                if (monomial_compare(m, lead) < 0)
                    g.add_scaled(other, Rational(coin(*rng)));
            }
        }
        f.add_scaled(g, -lc);
    }
    return h;
}

template <class M>
bool contains(const LinearCombination<M>& f, const IdealBases<M>& bases)
{
    return can(f, bases).is_zero();
}

// Bundled presentations.

enum class IdealKind { J, JPrime, I };

IdealKind parse_ideal_kind(std::string_view text);
std::string_view to_string(IdealKind kind);

Carrier<PlanarTree> planar_carrier(const Alphabet& alphabet);
Carrier<Tree> nonplanar_carrier(const Alphabet& alphabet);
Carrier<BinaryTree> binary_dot_carrier(const Alphabet& alphabet);
Carrier<BinaryTree> binary_star_carrier(const Alphabet& alphabet);

/// (s o\ t) o\ r - s o\ (t o\ r) - (t o\ s) o\ r + t o\ (s o\ r)
PlanarPoly prelie_relation(const PlanarTree& s, const PlanarTree& t, const PlanarTree& r);
/// |s| s o\ t + |t| t o\ s
PlanarPoly weighted_antisymmetry(const PlanarTree& s, const PlanarTree& t);
/// |s| (s -> t) + |t| (t -> s)
TreePoly weighted_antisymmetry(const Tree& s, const Tree& t);

/// J: generated by the pre-Lie identity for o\ on planar trees.
IdealPresentation<PlanarTree> planar_ideal_J(const Alphabet& alphabet);
/// J': J together with the weighted anti-symmetry relations.
IdealPresentation<PlanarTree> planar_ideal_J_prime(const Alphabet& alphabet);
/// I: generated by |s|(s -> t) + |t|(t -> s) in the free pre-Lie algebra.
IdealPresentation<Tree> nonplanar_ideal_I(const Alphabet& alphabet);
/// Anti-symmetry x*y + y*x and Jacobi for * on binary trees.
IdealPresentation<BinaryTree> binary_ideal_star_lie(const Alphabet& alphabet);
/// Pre-Lie identity for . and |x| x.y + |y| y.x on binary trees.
IdealPresentation<BinaryTree> binary_ideal_dot_prelie(const Alphabet& alphabet);

/// s-bar |>* t-bar = Can(s -> t, I).
TreePoly quotient_prelie_product(const TreePoly& f, const TreePoly& g, const IdealBases<Tree>& bases);
/// [s-bar, t-bar] = |s| Can(s -> t, I); f must be homogeneous.
TreePoly quotient_bracket(const TreePoly& f, const TreePoly& g, const IdealBases<Tree>& bases);

} // namespace plgb
