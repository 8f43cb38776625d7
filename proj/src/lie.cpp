#include "plgb/lie.hpp"

#include "plgb/echelon.hpp"
#include "plgb/enumerate.hpp"
#include "plgb/error.hpp"
#include "plgb/tree_algebra.hpp"

#include <map>
#include <mutex>

namespace plgb {

NcWord::NcWord(std::vector<Letter> letters) : letters_(std::move(letters))
{
    for (const auto& l : letters_)
        degree_ += l.degree;
}

NcWord operator*(const NcWord& a, const NcWord& b)
{
    std::vector<Letter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return NcWord(std::move(out));
}

std::strong_ordering monomial_compare(const NcWord& a, const NcWord& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                                  b.letters().end());
}

NcPoly letter_poly(Letter a)
{
    return NcPoly(NcWord({a}));
}

NcPoly concat(const NcPoly& f, const NcPoly& g)
{
    return bilinear(f, g, [](const NcWord& a, const NcWord& b) { return a * b; });
}

NcPoly bracket(const NcPoly& f, const NcPoly& g)
{
    return concat(f, g) - concat(g, f);
}

namespace {

int homogeneous_degree_of(const NcPoly& x, const char* what)
{
    auto d = x.homogeneous_degree();
    if (!d || *d < 1)
        throw DegreeError(std::string(what) + ": argument must be homogeneous of positive degree");
    return *d;
}

} // namespace

NcPoly rhd(const NcPoly& x, const NcPoly& y)
{
    if (x.is_zero())
        return {};
    int d = homogeneous_degree_of(x, "rhd");
    return make_rational(1, d) * bracket(x, y);
}

NcPoly black_rhd(const NcPoly& x, const NcPoly& y)
{
    if (x.is_zero() || y.is_zero())
        return {};
    int dx = homogeneous_degree_of(x, "black_rhd");
    int dy = homogeneous_degree_of(y, "black_rhd");
    return make_rational(dy, dx + dy) * bracket(x, y);
}

NcPoly bracket_rhd(const NcPoly& x, const NcPoly& y)
{
    return rhd(x, y) - rhd(y, x);
}

NcPoly alpha(const NcPoly& x)
{
    NcPoly out;
    for (const auto& [w, c] : x)
        out.add_term(w, c * w.degree());
    return out;
}

NcPoly alpha_inverse(const NcPoly& x)
{
    NcPoly out;
    for (const auto& [w, c] : x) {
        if (w.degree() == 0)
            throw DegreeError("alpha_inverse: degree-zero component");
        out.add_term(w, c / w.degree());
    }
    return out;
}

NcPoly left_normed_commutator(const std::vector<Letter>& letters)
{
    if (letters.empty())
        throw DegreeError("left_normed_commutator: empty sequence");
    NcPoly out = letter_poly(letters.front());
    for (std::size_t i = 1; i < letters.size(); ++i)
        out = bracket(out, letter_poly(letters[i]));
    return out;
}

namespace {

std::mutex phi_mutex;
std::map<Tree, NcPoly, Ascending<Tree>> phi_cache;

} // namespace

NcPoly phi(const Tree& t)
{
    if (t.branches().empty())
        return letter_poly(t.root());
    {
        std::lock_guard lock(phi_mutex);
        if (auto it = phi_cache.find(t); it != phi_cache.end())
            return it->second;
    }
    const Tree& t1 = t.branches().front();
    std::vector<Tree> rest(t.branches().begin() + 1, t.branches().end());
    const Tree trunk(t.root(), std::move(rest));
    // t1 -> trunk = t + (grafts at non-root vertices); the latter have fewer
    // root branches, so the recursion terminates.
    NcPoly value = rhd(phi(t1), phi(trunk));
    for (const auto& v : vertex_paths(trunk))
        if (!v.empty())
            value -= phi(graft_at(t1, trunk, v));
    std::lock_guard lock(phi_mutex);
    phi_cache.emplace(t, value);
    return value;
}

NcPoly phi(const TreePoly& f)
{
    NcPoly out;
    for (const auto& [t, c] : f)
        out.add_scaled(phi(t), c);
    return out;
}

namespace {

void letter_sequences(const Alphabet& alphabet, int remaining, std::vector<Letter>& prefix,
                      std::vector<std::vector<Letter>>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (const auto& g : alphabet.generators()) {
        if (g.degree > remaining)
            continue;
        prefix.push_back(g.letter());
        letter_sequences(alphabet, remaining - g.degree, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

LieDimension lie_dimension_oracles(const Alphabet& alphabet, int n)
{
    if (n < 1)
        throw DegreeError("Lie dimension needs degree >= 1");
    LieDimension out;
    Echelon<NcWord> trees;
    for (const auto& t : enumerate_nonplanar(alphabet, n))
        trees.insert(phi(t));
    out.via_trees = trees.rank();

    std::vector<std::vector<Letter>> sequences;
    std::vector<Letter> prefix;
    letter_sequences(alphabet, n, prefix, sequences);
    Echelon<NcWord> commutators;
    for (const auto& s : sequences)
        commutators.insert(left_normed_commutator(s));
    out.via_commutators = commutators.rank();
    return out;
}

std::size_t lie_dimension(const Alphabet& alphabet, int n)
{
    auto d = lie_dimension_oracles(alphabet, n);
    if (d.via_trees != d.via_commutators)
        throw RankDefect("Lie dimension oracles disagree in degree " + std::to_string(n) + ": " +
                         std::to_string(d.via_trees) + " vs " + std::to_string(d.via_commutators));
    return d.via_trees;
}

std::vector<LieBasisElement> lie_monomial_basis(const Alphabet& alphabet, int n, const IdealBases<Tree>& bases)
{
    std::vector<LieBasisElement> out;
    Echelon<NcWord> span;
    for (const auto& t : complement(bases, n)) {
        NcPoly e = phi(t);
        if (!span.insert(e))
            throw RankDefect("image of " + format_tree(alphabet, t) + " is dependent on earlier basis elements");
        out.push_back({t, std::move(e)});
    }
    std::size_t dim = lie_dimension(alphabet, n);
    if (out.size() != dim)
        throw RankDefect("degree " + std::to_string(n) + ": " + std::to_string(out.size()) +
                         " basis elements but the Lie component has dimension " + std::to_string(dim));
    return out;
}

KernelReport kernel_check(const IdealBases<Tree>& bases, const Alphabet& alphabet, int n)
{
    KernelReport out;
    out.rows_vanish = true;
    for (const auto& row : bases[n].rows())
        if (!phi(row).is_zero())
            out.rows_vanish = false;
    out.tree_count = enumerate_nonplanar(alphabet, n).size();
    out.ideal_rank = bases[n].rank();
    out.lie_dim = lie_dimension(alphabet, n);
    return out;
}

NcPoly monic(const NcPoly& f)
{
    if (f.is_zero())
        return f;
    return f * (Rational(1) / f.leading_term().second);
}

std::string format_words(const Alphabet& alphabet, const NcPoly& f)
{
    return detail::format_sum(f, [&](const NcWord& w) {
        std::string out;
        for (std::size_t i = 0; i < w.letters().size(); ++i) {
            if (i > 0)
                out += '*';
            out += alphabet.name(w.letters()[i]);
        }
        return out.empty() ? std::string("1") : out;
    });
}

std::optional<std::pair<Rational, std::string>> ladder_bracket(const Alphabet& alphabet, const Tree& t)
{
    if (!is_ladder(t))
        return std::nullopt;
    std::vector<const Tree*> chain;  // root first
    for (const Tree* v = &t;; v = &v->branches().front()) {
        chain.push_back(v);
        if (v->branches().empty())
            break;
    }
    // Phi(l) = (1/|upper|) [Phi(upper), root] for the ladder upper above the root.
    Rational c(1);
    std::string text = alphabet.name(chain.back()->root());
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
        c /= (*it)->branches().front().degree();
        text = "[" + text + "," + alphabet.name((*it)->root()) + "]";
    }
    return std::make_pair(c, text);
}

} // namespace plgb
