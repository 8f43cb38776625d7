#pragma once

#include "plgb/alphabet.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace plgb {

struct PlanarTag {};
struct NonPlanarTag {};

/// Decorated rooted tree B+_a(t1 ... tk).
///
/// With PlanarTag the branch order is part of the value. With NonPlanarTag the
/// constructor sorts branches nondecreasingly under the tree order, so every
/// value is the canonical representative of its isomorphism class and
/// equality is structural.
template <class Planarity>
class BasicTree {
public:
    explicit BasicTree(Letter root, std::vector<BasicTree> branches = {});

    Letter root() const { return root_; }
    const std::vector<BasicTree>& branches() const { return branches_; }
    /// Sum of the vertex decoration degrees.
    int degree() const { return degree_; }
    int vertex_count() const { return size_; }
    std::size_t hash() const { return hash_; }

    friend bool operator==(const BasicTree& a, const BasicTree& b)
    {
        return a.hash_ == b.hash_ && a.root_ == b.root_ && a.degree_ == b.degree_ &&
               a.branches_ == b.branches_;
    }

private:
    Letter root_;
    std::vector<BasicTree> branches_;
    int degree_;
    int size_;
    std::size_t hash_;
};

using PlanarTree = BasicTree<PlanarTag>;
using Tree = BasicTree<NonPlanarTag>;

extern template class BasicTree<PlanarTag>;
extern template class BasicTree<NonPlanarTag>;

/// Planar binary tree with decorated leaves; internal nodes carry no decoration.
class BinaryTree {
public:
    explicit BinaryTree(Letter leaf);
    BinaryTree(BinaryTree left, BinaryTree right);

    bool is_leaf() const { return children_.empty(); }
    Letter leaf() const { return leaf_; }
    const BinaryTree& left() const { return children_.at(0); }
    const BinaryTree& right() const { return children_.at(1); }
    int degree() const { return degree_; }
    int leaf_count() const { return leaves_; }
    std::size_t hash() const { return hash_; }

    friend bool operator==(const BinaryTree& a, const BinaryTree& b)
    {
        return a.hash_ == b.hash_ && a.degree_ == b.degree_ && a.is_leaf() == b.is_leaf() &&
               (a.is_leaf() ? a.leaf_ == b.leaf_ : a.children_ == b.children_);
    }

private:
    Letter leaf_{};
    std::vector<BinaryTree> children_;
    int degree_;
    int leaves_;
    std::size_t hash_;
};

/// Vertex address: child indices followed from the root.
using VertexPath = std::vector<int>;

template <class P>
BasicTree<P> b_plus(Letter root, std::vector<BasicTree<P>> branches)
{
    return BasicTree<P>(root, std::move(branches));
}

inline PlanarTree b_plus(const Generator& g, std::vector<PlanarTree> branches = {})
{
    return PlanarTree(g.letter(), std::move(branches));
}

template <class P>
int degree(const BasicTree<P>& t)
{
    return t.degree();
}
inline int degree(const BinaryTree& t) { return t.degree(); }

/// Number of branches at the root.
template <class P>
int branch_count(const BasicTree<P>& t)
{
    return static_cast<int>(t.branches().size());
}

template <class P>
bool is_ladder(const BasicTree<P>& t)
{
    const BasicTree<P>* v = &t;
    while (!v->branches().empty()) {
        if (v->branches().size() > 1)
            return false;
        v = &v->branches().front();
    }
    return true;
}

/// Ladder with the given decorations listed from the root upwards.
template <class P>
BasicTree<P> ladder(const std::vector<Letter>& bottom_up)
{
    std::vector<BasicTree<P>> top;
    for (auto it = bottom_up.rbegin(); it != bottom_up.rend(); ++it) {
        BasicTree<P> next(*it, std::move(top));
        top.clear();
        top.push_back(std::move(next));
    }
    return top.at(0);
}

/// True iff at every vertex successive branches are nondecreasing left to right.
bool has_nondecreasing_branches(const PlanarTree& t);

/// The projection pi: forget the branch order.
Tree forget_planarity(const PlanarTree& t);

/// The order-minimal planar preimage of t (its sorted representative).
PlanarTree s_min(const Tree& t);

/// Preorder list of vertex paths; the root is the empty path.
template <class P>
std::vector<VertexPath> vertex_paths(const BasicTree<P>& t);

template <class P>
const BasicTree<P>& subtree_at(const BasicTree<P>& t, const VertexPath& path);

/// Tree obtained by attaching `branch` as the leftmost branch of the vertex at
/// `path`. For non-planar trees the result is re-canonicalised.
template <class P>
BasicTree<P> attach_at(const BasicTree<P>& t, const VertexPath& path, const BasicTree<P>& branch);

/// Removes the subtree rooted at `path` (which must not be the root).
template <class P>
BasicTree<P> detach_at(const BasicTree<P>& t, const VertexPath& path);

} // namespace plgb

template <class P>
struct std::hash<plgb::BasicTree<P>> {
    std::size_t operator()(const plgb::BasicTree<P>& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<plgb::BinaryTree> {
    std::size_t operator()(const plgb::BinaryTree& t) const noexcept { return t.hash(); }
};
