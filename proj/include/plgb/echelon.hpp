#pragma once

#include "plgb/linear_combination.hpp"

#include <map>
#include <vector>

namespace plgb {

/// Reduced row-echelon span over exact rationals, keyed by leading monomial.
///
/// Invariant: every row has leading coefficient 1 and no row contains the
/// leading monomial of another row.
template <class M>
class Echelon {
public:
    using Row = LinearCombination<M>;

    /// Remainder of v after eliminating every pivot monomial. The result is
    /// supported outside the pivot set and is zero iff v lies in the span.
    Row reduce(Row v) const
    {
        std::vector<std::pair<const Row*, Rational>> steps;
        for (const auto& [m, c] : v) {
            auto it = rows_.find(m);
            if (it != rows_.end())
                steps.emplace_back(&it->second, c);
        }
        // Rows avoid each other's pivots, so each subtraction only touches
        // non-pivot monomials and the collected coefficients stay valid.
        for (const auto& [row, c] : steps)
            v.add_scaled(*row, -c);
        return v;
    }

    /// Adds v to the span. Returns true iff the rank grew.
    bool insert(const Row& v)
    {
        Row r = reduce(v);
        if (r.is_zero())
            return false;
        auto [lead, lc] = r.leading_term();
        r *= Rational(1) / lc;
        for (auto& [m, row] : rows_) {
            Rational c = row.coefficient(lead);
            if (c != 0)
                row.add_scaled(r, -c);
        }
        rows_.emplace(lead, std::move(r));
        return true;
    }

    const Row* row_with_leading(const M& m) const
    {
        auto it = rows_.find(m);
        return it == rows_.end() ? nullptr : &it->second;
    }

    bool contains(const Row& v) const { return reduce(v).is_zero(); }
    std::size_t rank() const { return rows_.size(); }

    /// Rows sorted by leading monomial, descending.
    std::vector<Row> rows() const
    {
        std::vector<Row> out;
        out.reserve(rows_.size());
        for (const auto& [m, row] : rows_)
            out.push_back(row);
        return out;
    }

    std::vector<M> leading_monomials() const
    {
        std::vector<M> out;
        out.reserve(rows_.size());
        for (const auto& [m, row] : rows_)
            out.push_back(m);
        return out;
    }

    const std::map<M, Row, Descending<M>>& table() const { return rows_; }

    friend bool operator==(const Echelon& a, const Echelon& b) { return a.rows_ == b.rows_; }

private:
    std::map<M, Row, Descending<M>> rows_;
};

/// Rank over Q of a family of vectors.
template <class M>
std::size_t rank_of(const std::vector<LinearCombination<M>>& family)
{
    Echelon<M> e;
    for (const auto& v : family)
        e.insert(v);
    return e.rank();
}

} // namespace plgb
