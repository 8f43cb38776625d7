#pragma once

#include "plgb/error.hpp"
#include "plgb/order.hpp"
#include "plgb/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace plgb {

/// Finite linear combination of monomials with exact rational coefficients.
/// Zero coefficients are never stored. Terms iterate in descending monomial
/// order, so the first term is the leading term.
template <class M>
class LinearCombination {
public:
    using Terms = std::map<M, Rational, Descending<M>>;
    using const_iterator = typename Terms::const_iterator;

    LinearCombination() = default;
    LinearCombination(const M& m) { terms_.emplace(m, Rational(1)); } // NOLINT: implicit by design of the algebra
    LinearCombination(const M& m, const Rational& c) { add_term(m, c); }

    static LinearCombination zero() { return {}; }

    void add_term(const M& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// this += c * other
    void add_scaled(const LinearCombination& other, const Rational& c)
    {
        if (c == 0)
            return;
        for (const auto& [m, a] : other.terms_)
            add_term(m, c * a);
    }

    Rational coefficient(const M& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool contains(const M& m) const { return terms_.count(m) != 0; }
    void erase(const M& m) { terms_.erase(m); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Terms& terms() const { return terms_; }

    /// T(f) together with lc(f). Throws Error on the zero polynomial.
    std::pair<M, Rational> leading_term() const
    {
        if (terms_.empty())
            throw Error("leading term of the zero polynomial");
        return *terms_.begin();
    }
    const M& leading_monomial() const
    {
        if (terms_.empty())
            throw Error("leading term of the zero polynomial");
        return terms_.begin()->first;
    }

    std::vector<M> support() const
    {
        std::vector<M> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_)
            out.push_back(m);
        return out;
    }

    /// Common degree of all terms, or nullopt if empty or mixed.
    std::optional<int> homogeneous_degree() const
    {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            if (d && *d != degree(m))
                return std::nullopt;
            d = degree(m);
        }
        return d;
    }

    /// Part of degree exactly d.
    LinearCombination component(int d) const
    {
        LinearCombination out;
        for (const auto& [m, c] : terms_)
            if (degree(m) == d)
                out.terms_.emplace_hint(out.terms_.end(), m, c);
        return out;
    }

    LinearCombination& operator+=(const LinearCombination& o)
    {
        add_scaled(o, Rational(1));
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o)
    {
        add_scaled(o, Rational(-1));
        return *this;
    }
    LinearCombination& operator*=(const Rational& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, a] : terms_)
            a *= c;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
    friend LinearCombination operator*(const Rational& c, LinearCombination a) { return a *= c; }
    friend LinearCombination operator*(LinearCombination a, const Rational& c) { return a *= c; }

    friend bool operator==(const LinearCombination& a, const LinearCombination& b)
    {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

/// Extends a monomial product bilinearly.
template <class M, class Product>
LinearCombination<M> bilinear(const LinearCombination<M>& f, const LinearCombination<M>& g, Product&& product)
{
    LinearCombination<M> out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g)
            out.add_scaled(LinearCombination<M>(product(a, b)), ca * cb);
    return out;
}

} // namespace plgb
