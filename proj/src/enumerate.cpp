#include "plgb/enumerate.hpp"

#include "plgb/error.hpp"
#include "plgb/order.hpp"

#include <algorithm>
#include <map>

namespace plgb {

namespace {

void require_positive(int n)
{
    if (n < 1)
        throw DegreeError("enumeration degree must be >= 1, got " + std::to_string(n));
}

template <class M>
void sort_ascending(std::vector<M>& v)
{
    std::sort(v.begin(), v.end(), Ascending<M>{});
}

/// Planar trees and ordered forests by degree.
class PlanarTables {
public:
    explicit PlanarTables(const Alphabet& a) : alphabet_(a) {}

    const std::vector<PlanarTree>& trees(int n)
    {
        if (auto it = trees_.find(n); it != trees_.end())
            return it->second;
        std::vector<PlanarTree> out;
        for (const auto& g : alphabet_.generators()) {
            if (g.degree > n)
                continue;
            for (const auto& forest : forests(n - g.degree))
                out.emplace_back(g.letter(), forest);
        }
        sort_ascending(out);
        return trees_[n] = std::move(out);
    }

    const std::vector<std::vector<PlanarTree>>& forests(int n)
    {
        if (auto it = forests_.find(n); it != forests_.end())
            return it->second;
        std::vector<std::vector<PlanarTree>> out;
        if (n == 0) {
            out.emplace_back();
        } else {
            for (int first = 1; first <= n; ++first) {
                const auto heads = trees(first);
                const auto tails = forests(n - first);
                for (const auto& h : heads) {
                    for (const auto& tail : tails) {
                        std::vector<PlanarTree> f{h};
                        f.insert(f.end(), tail.begin(), tail.end());
                        out.push_back(std::move(f));
                    }
                }
            }
        }
        return forests_[n] = std::move(out);
    }

private:
    const Alphabet& alphabet_;
    std::map<int, std::vector<PlanarTree>> trees_;
    std::map<int, std::vector<std::vector<PlanarTree>>> forests_;
};

/// Non-planar trees; forests are nondecreasing sequences of indices into the
/// ascending list of all smaller trees, so each multiset appears once.
class NonPlanarTables {
public:
    explicit NonPlanarTables(const Alphabet& a) : alphabet_(a) {}

    std::vector<Tree> trees(int n)
    {
        while (static_cast<int>(by_degree_.size()) < n)
            extend();
        return by_degree_[static_cast<std::size_t>(n - 1)];
    }

private:
    void extend()
    {
        const int n = static_cast<int>(by_degree_.size()) + 1;
        std::vector<Tree> out;
        for (const auto& g : alphabet_.generators()) {
            if (g.degree > n)
                continue;
            std::vector<Tree> forest;
            forests(n - g.degree, 0, forest, [&](const std::vector<Tree>& f) { out.emplace_back(g.letter(), f); });
        }
        sort_ascending(out);
        by_degree_.push_back(out);
        all_.insert(all_.end(), out.begin(), out.end());
    }

    template <class Emit>
    void forests(int remaining, std::size_t from, std::vector<Tree>& prefix, Emit&& emit)
    {
        if (remaining == 0) {
            emit(prefix);
            return;
        }
        for (std::size_t i = from; i < all_.size(); ++i) {
            if (all_[i].degree() > remaining)
                break;
            prefix.push_back(all_[i]);
            forests(remaining - all_[i].degree(), i, prefix, emit);
            prefix.pop_back();
        }
    }

    const Alphabet& alphabet_;
    std::vector<std::vector<Tree>> by_degree_;
    std::vector<Tree> all_;  // ascending, hence sorted by degree
};

} // namespace

std::vector<PlanarTree> enumerate_planar(const Alphabet& alphabet, int degree)
{
    require_positive(degree);
    PlanarTables tables(alphabet);
    return tables.trees(degree);
}

std::vector<Tree> enumerate_nonplanar(const Alphabet& alphabet, int degree)
{
    require_positive(degree);
    NonPlanarTables tables(alphabet);
    return tables.trees(degree);
}

std::vector<BinaryTree> enumerate_binary(const Alphabet& alphabet, int leaves)
{
    require_positive(leaves);
    std::vector<std::vector<BinaryTree>> table(static_cast<std::size_t>(leaves) + 1);
    for (const auto& g : alphabet.generators())
        table[1].emplace_back(g.letter());
    for (int k = 2; k <= leaves; ++k)
        for (int l = 1; l < k; ++l)
            for (const auto& left : table[static_cast<std::size_t>(l)])
                for (const auto& right : table[static_cast<std::size_t>(k - l)])
                    table[static_cast<std::size_t>(k)].emplace_back(left, right);
    auto out = table[static_cast<std::size_t>(leaves)];
    sort_ascending(out);
    return out;
}

std::vector<BinaryTree> enumerate_binary_by_degree(const Alphabet& alphabet, int degree)
{
    require_positive(degree);
    std::vector<std::vector<BinaryTree>> table(static_cast<std::size_t>(degree) + 1);
    for (int d = 1; d <= degree; ++d) {
        auto& here = table[static_cast<std::size_t>(d)];
        for (const auto& g : alphabet.generators())
            if (g.degree == d)
                here.emplace_back(g.letter());
        for (int l = 1; l < d; ++l)
            for (const auto& left : table[static_cast<std::size_t>(l)])
                for (const auto& right : table[static_cast<std::size_t>(d - l)])
                    here.emplace_back(left, right);
    }
    auto out = table[static_cast<std::size_t>(degree)];
    sort_ascending(out);
    return out;
}

} // namespace plgb
