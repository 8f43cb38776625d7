#include "plgb/trees.hpp"

#include "plgb/error.hpp"
#include "plgb/order.hpp"

#include <algorithm>

namespace plgb {

namespace {

std::size_t mix(std::size_t h, std::size_t v)
{
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

template <class P>
void sort_if_nonplanar(std::vector<BasicTree<P>>& branches)
{
    if constexpr (std::is_same_v<P, NonPlanarTag>) {
        std::sort(branches.begin(), branches.end(),
                  [](const Tree& a, const Tree& b) { return cmp_nonplanar(a, b).less(); });
    }
}

template <class P>
void collect_paths(const BasicTree<P>& t, VertexPath& prefix, std::vector<VertexPath>& out)
{
    out.push_back(prefix);
    for (std::size_t i = 0; i < t.branches().size(); ++i) {
        prefix.push_back(static_cast<int>(i));
        collect_paths(t.branches()[i], prefix, out);
        prefix.pop_back();
    }
}

template <class P>
BasicTree<P> rebuild(const BasicTree<P>& t, const VertexPath& path, std::size_t depth,
                     const BasicTree<P>* attach, bool detach)
{
    std::vector<BasicTree<P>> branches = t.branches();
    if (depth == path.size()) {
        // Only reached when attaching.
        branches.insert(branches.begin(), *attach);
        return BasicTree<P>(t.root(), std::move(branches));
    }
    auto i = static_cast<std::size_t>(path[depth]);
    if (i >= branches.size())
        throw Error("vertex path out of range");
    if (detach && depth + 1 == path.size())
        branches.erase(branches.begin() + static_cast<std::ptrdiff_t>(i));
    else
        branches[i] = rebuild(branches[i], path, depth + 1, attach, detach);
    return BasicTree<P>(t.root(), std::move(branches));
}

} // namespace

template <class P>
BasicTree<P>::BasicTree(Letter root, std::vector<BasicTree> branches)
    : root_(root), branches_(std::move(branches)), degree_(root.degree), size_(1)
{
    sort_if_nonplanar(branches_);
    std::size_t h = mix(0x51ed27ULL, static_cast<std::size_t>(root.rank));
    for (const auto& b : branches_) {
        degree_ += b.degree_;
        size_ += b.size_;
        h = mix(h, b.hash_);
    }
    hash_ = mix(h, branches_.size());
}

template class BasicTree<PlanarTag>;
template class BasicTree<NonPlanarTag>;

BinaryTree::BinaryTree(Letter leaf)
    : leaf_(leaf), degree_(leaf.degree), leaves_(1), hash_(mix(0xb1a7ULL, static_cast<std::size_t>(leaf.rank)))
{
}

BinaryTree::BinaryTree(BinaryTree left, BinaryTree right)
    : degree_(left.degree_ + right.degree_), leaves_(left.leaves_ + right.leaves_),
      hash_(mix(mix(0x40deULL, left.hash_), right.hash_))
{
    children_.reserve(2);
    children_.push_back(std::move(left));
    children_.push_back(std::move(right));
}

bool has_nondecreasing_branches(const PlanarTree& t)
{
    const auto& bs = t.branches();
    for (std::size_t i = 0; i + 1 < bs.size(); ++i)
        if (cmp_planar(bs[i], bs[i + 1]).greater())
            return false;
    return std::all_of(bs.begin(), bs.end(), [](const PlanarTree& b) { return has_nondecreasing_branches(b); });
}

Tree forget_planarity(const PlanarTree& t)
{
    std::vector<Tree> branches;
    branches.reserve(t.branches().size());
    for (const auto& b : t.branches())
        branches.push_back(forget_planarity(b));
    return Tree(t.root(), std::move(branches));
}

PlanarTree s_min(const Tree& t)
{
    std::vector<PlanarTree> branches;
    branches.reserve(t.branches().size());
    for (const auto& b : t.branches())
        branches.push_back(s_min(b));
    return PlanarTree(t.root(), std::move(branches));
}

template <class P>
std::vector<VertexPath> vertex_paths(const BasicTree<P>& t)
{
    std::vector<VertexPath> out;
    out.reserve(static_cast<std::size_t>(t.vertex_count()));
    VertexPath prefix;
    collect_paths(t, prefix, out);
    return out;
}

template <class P>
const BasicTree<P>& subtree_at(const BasicTree<P>& t, const VertexPath& path)
{
    const BasicTree<P>* v = &t;
    for (int i : path) {
        if (i < 0 || static_cast<std::size_t>(i) >= v->branches().size())
            throw Error("vertex path out of range");
        v = &v->branches()[static_cast<std::size_t>(i)];
    }
    return *v;
}

template <class P>
BasicTree<P> attach_at(const BasicTree<P>& t, const VertexPath& path, const BasicTree<P>& branch)
{
    return rebuild(t, path, 0, &branch, false);
}

template <class P>
BasicTree<P> detach_at(const BasicTree<P>& t, const VertexPath& path)
{
    if (path.empty())
        throw Error("cannot detach the root");
    return rebuild<P>(t, path, 0, nullptr, true);
}

template std::vector<VertexPath> vertex_paths(const PlanarTree&);
template std::vector<VertexPath> vertex_paths(const Tree&);
template const PlanarTree& subtree_at(const PlanarTree&, const VertexPath&);
template const Tree& subtree_at(const Tree&, const VertexPath&);
template PlanarTree attach_at(const PlanarTree&, const VertexPath&, const PlanarTree&);
template Tree attach_at(const Tree&, const VertexPath&, const Tree&);
template PlanarTree detach_at(const PlanarTree&, const VertexPath&);
template Tree detach_at(const Tree&, const VertexPath&);

} // namespace plgb
