#pragma once

#include "plgb/alphabet.hpp"
#include "plgb/rational.hpp"
#include "plgb/tree_algebra.hpp"
#include "plgb/trees.hpp"

#include <set>
#include <utility>
#include <vector>

namespace plgb {

/// All s' with t R s': write t = u ->_v u' and move the grafted subtree u
/// from v to one of the children of v in u'. Each pair is (t, s').
std::vector<std::pair<Tree, Tree>> relate_R(const Tree& t);

/// [t]_#: t together with everything reachable under R (R keeps the degree).
struct HashClass {
    Tree representative;
    std::set<Tree, Ascending<Tree>> members;

    bool contains(const Tree& s) const { return members.count(s) != 0; }
};

HashClass hash_class(const Tree& t);

/// The monomial basis map: Psi(a) = a, and Psi(t1 |> t2) = Psi(t1) -> Psi(t2)
/// where t1 is the order-minimal branch at the root of t and t2 the trunk.
TreePoly psi(const Tree& t);

/// Coefficient of s in Psi(t), computed by splitting s along its edges
/// instead of expanding Psi. Throws DegreeError when |s| != |t|.
Rational beta(const Tree& s, const Tree& t);

/// Psi(t) for every tree of degree n, in ascending order of t.
std::vector<TreePoly> prelie_monomial_basis(const Alphabet& alphabet, int n);

/// (minimal branch, trunk) decomposition used by Psi. Requires at least one branch.
std::pair<Tree, Tree> minimal_branch_split(const Tree& t);

} // namespace plgb
