#pragma once

#include "plgb/alphabet.hpp"
#include "plgb/ideal.hpp"
#include "plgb/linear_combination.hpp"
#include "plgb/trees.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plgb {

/// Word in the free associative algebra on the alphabet.
class NcWord {
public:
    NcWord() = default;
    explicit NcWord(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    int degree() const { return degree_; }
    std::size_t length() const { return letters_.size(); }

    friend NcWord operator*(const NcWord& a, const NcWord& b);
    friend bool operator==(const NcWord& a, const NcWord& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
    int degree_ = 0;
};

inline int degree(const NcWord& w) { return w.degree(); }

/// Degree first, then lexicographic on generator ranks.
std::strong_ordering monomial_compare(const NcWord& a, const NcWord& b);

/// Lie elements live inside this algebra as commutator polynomials.
using NcPoly = LinearCombination<NcWord>;

NcPoly letter_poly(Letter a);
NcPoly concat(const NcPoly& f, const NcPoly& g);
/// fg - gf
NcPoly bracket(const NcPoly& f, const NcPoly& g);

/// x |> y = (1/|x|) [x, y]. x must be homogeneous of positive degree
/// (DegreeError otherwise); a zero x gives zero.
NcPoly rhd(const NcPoly& x, const NcPoly& y);
/// x >> y = (|y| / (|x| + |y|)) [x, y], both homogeneous.
NcPoly black_rhd(const NcPoly& x, const NcPoly& y);
/// [x, y]_|> = x |> y - y |> x
NcPoly bracket_rhd(const NcPoly& x, const NcPoly& y);
/// Multiplies each homogeneous component by its degree.
NcPoly alpha(const NcPoly& x);
NcPoly alpha_inverse(const NcPoly& x);

/// [[..[g1, g2], ..], gm]
NcPoly left_normed_commutator(const std::vector<Letter>& letters);

/// The pre-Lie morphism (trees, ->) -> (L(E), |>) with a-vertex -> a.
///
/// For t = B+_a(t1 t2 ... tk) with t1 the minimal branch and
/// t' = B+_a(t2 ... tk): Phi(t) = Phi(t1) |> Phi(t') minus Phi(t1 ->_v t')
/// summed over the non-root vertices v of t'.
NcPoly phi(const Tree& t);
NcPoly phi(const TreePoly& f);

struct LieDimension {
    std::size_t via_trees = 0;        ///< rank of Phi over all degree-n trees
    std::size_t via_commutators = 0;  ///< rank of all left-normed commutators
};

LieDimension lie_dimension_oracles(const Alphabet& alphabet, int n);
/// dim L_n; throws RankDefect if the two oracles disagree.
std::size_t lie_dimension(const Alphabet& alphabet, int n);

struct LieBasisElement {
    Tree tree;       ///< element of O(I)_n
    NcPoly element;  ///< Phi(tree)
};

/// {Phi(t) : t in O(I)_n}; throws RankDefect unless the images are
/// independent and their number equals dim L_n.
std::vector<LieBasisElement> lie_monomial_basis(const Alphabet& alphabet, int n, const IdealBases<Tree>& bases);

struct KernelReport {
    bool rows_vanish = false;
    std::size_t tree_count = 0;
    std::size_t ideal_rank = 0;
    std::size_t lie_dim = 0;

    bool ok() const { return rows_vanish && tree_count - ideal_rank == lie_dim; }
};

/// I_n is contained in Ker Phi and has the right codimension.
KernelReport kernel_check(const IdealBases<Tree>& bases, const Alphabet& alphabet, int n);

/// Scales f so the coefficient of its largest word is 1.
NcPoly monic(const NcPoly& f);

/// "2*x*y - y*x" style rendering.
std::string format_words(const Alphabet& alphabet, const NcPoly& f);

/// For a ladder with vertices r (root), ..., u (top): the scalar c with
/// Phi(ladder) = c [[..[u, ..], r'], r] and the bracket string; nullopt for
/// other trees.
std::optional<std::pair<Rational, std::string>> ladder_bracket(const Alphabet& alphabet, const Tree& t);

} // namespace plgb
