#include "plgb/prelie_basis.hpp"

#include "plgb/enumerate.hpp"
#include "plgb/error.hpp"

#include <deque>
#include <map>
#include <mutex>

namespace plgb {

namespace {

struct Cut {
    Tree branch;            // subtree above the cut edge
    Tree trunk;             // what remains
    PlanarTree planar_trunk; // trunk with the vertex positions of t kept
    VertexPath at;          // attachment vertex, a path in planar_trunk
};

/// Every way of writing t as branch ->_v trunk with v a vertex of trunk.
/// Cutting happens on the sorted planar representative so that paths stay
/// valid; canonicalising the trunk could reorder the ancestors of v.
std::vector<Cut> edge_cuts(const Tree& t)
{
    const PlanarTree p = s_min(t);
    std::vector<Cut> out;
    for (const auto& path : vertex_paths(p)) {
        if (path.empty())
            continue;
        PlanarTree trunk = detach_at(p, path);
        VertexPath parent(path.begin(), path.end() - 1);
        out.push_back({forget_planarity(subtree_at(p, path)), forget_planarity(trunk), std::move(trunk),
                       std::move(parent)});
    }
    return out;
}

std::mutex cache_mutex;
std::map<Tree, TreePoly, Ascending<Tree>> psi_cache;
struct PairLess {
    bool operator()(const std::pair<Tree, Tree>& a, const std::pair<Tree, Tree>& b) const
    {
        if (auto c = monomial_compare(a.first, b.first); c != 0)
            return c < 0;
        return monomial_compare(a.second, b.second) < 0;
    }
};
std::map<std::pair<Tree, Tree>, Rational, PairLess> beta_cache;

Rational beta_unchecked(const Tree& s, const Tree& t);

Rational beta_compute(const Tree& s, const Tree& t)
{
    if (s.degree() != t.degree())
        return 0;
    if (t.branches().empty())
        return s.branches().empty() && s.root() == t.root() ? 1 : 0;
    auto [t1, t2] = minimal_branch_split(t);
    // Group the cuts of s by their (branch, trunk) pair; the coefficient of s
    // in branch -> trunk is then read off the grafting itself.
    std::set<std::pair<Tree, Tree>, PairLess> pairs;
    for (auto& cut : edge_cuts(s))
        if (cut.branch.degree() == t1.degree())
            pairs.emplace(cut.branch, cut.trunk);
    Rational out(0);
    for (const auto& key : pairs) {
        Rational b1 = beta_unchecked(key.first, t1);
        if (b1 == 0)
            continue;
        Rational b2 = beta_unchecked(key.second, t2);
        if (b2 == 0)
            continue;
        out += b1 * b2 * graft(key.first, key.second).coefficient(s);
    }
    return out;
}

Rational beta_unchecked(const Tree& s, const Tree& t)
{
    auto key = std::make_pair(s, t);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = beta_cache.find(key); it != beta_cache.end())
            return it->second;
    }
    Rational value = beta_compute(s, t);
    std::lock_guard lock(cache_mutex);
    beta_cache.emplace(std::move(key), value);
    return value;
}

} // namespace

std::vector<std::pair<Tree, Tree>> relate_R(const Tree& t)
{
    std::set<Tree, Ascending<Tree>> seen;
    for (const auto& cut : edge_cuts(t)) {
        const PlanarTree& v = subtree_at(cut.planar_trunk, cut.at);
        const PlanarTree branch = s_min(cut.branch);
        for (std::size_t i = 0; i < v.branches().size(); ++i) {
            VertexPath w = cut.at;
            w.push_back(static_cast<int>(i));
            seen.insert(forget_planarity(attach_at(cut.planar_trunk, w, branch)));
        }
    }
    std::vector<std::pair<Tree, Tree>> out;
    for (const auto& s : seen)
        out.emplace_back(t, s);
    return out;
}

HashClass hash_class(const Tree& t)
{
    HashClass out{t, {}};
    std::deque<Tree> todo{t};
    out.members.insert(t);
    while (!todo.empty()) {
        Tree s = todo.front();
        todo.pop_front();
        for (auto& [from, to] : relate_R(s))
            if (out.members.insert(to).second)
                todo.push_back(to);
    }
    return out;
}

std::pair<Tree, Tree> minimal_branch_split(const Tree& t)
{
    if (t.branches().empty())
        throw Error("minimal_branch_split: tree has no branches");
    std::vector<Tree> rest(t.branches().begin() + 1, t.branches().end());
    return {t.branches().front(), Tree(t.root(), std::move(rest))};
}

TreePoly psi(const Tree& t)
{
    if (t.branches().empty())
        return TreePoly(t);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = psi_cache.find(t); it != psi_cache.end())
            return it->second;
    }
    auto [t1, t2] = minimal_branch_split(t);
    TreePoly value = graft(psi(t1), psi(t2));
    std::lock_guard lock(cache_mutex);
    psi_cache.emplace(t, value);
    return value;
}

Rational beta(const Tree& s, const Tree& t)
{
    if (s.degree() != t.degree())
        throw DegreeError("beta: degrees " + std::to_string(s.degree()) + " and " + std::to_string(t.degree()) +
                          " differ");
    return beta_unchecked(s, t);
}

std::vector<TreePoly> prelie_monomial_basis(const Alphabet& alphabet, int n)
{
    std::vector<TreePoly> out;
    for (const auto& t : enumerate_nonplanar(alphabet, n))
        out.push_back(psi(t));
    return out;
}

} // namespace plgb
