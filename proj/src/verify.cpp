#include "plgb/verify.hpp"

#include "plgb/enumerate.hpp"
#include "plgb/lie.hpp"
#include "plgb/magma.hpp"
#include "plgb/order.hpp"
#include "plgb/prelie_basis.hpp"
#include "plgb/tree_algebra.hpp"

#include <algorithm>
#include <set>

namespace plgb {

namespace {

template <class M, class Enumerate>
std::vector<M> up_to(const Alphabet& alphabet, int max_degree, Enumerate enumerate)
{
    std::vector<M> out;
    for (int d = 1; d <= max_degree; ++d) {
        auto part = enumerate(alphabet, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Tree> trees_up_to(const Alphabet& alphabet, int max_degree)
{
    return up_to<Tree>(alphabet, max_degree, enumerate_nonplanar);
}

std::string show(const Alphabet& alphabet, const Tree& t)
{
    return format_tree(alphabet, t);
}

/// cmp(s, t) must survive multiplication by u on either side.
template <class M, class Cmp, class Mul, class Show>
void order_laws(CheckResult& r, const std::vector<M>& all, int max_total, Cmp cmp, Mul mul, Show show_m)
{
    for (const auto& s : all) {
        for (const auto& t : all) {
            OrderDecision d = cmp(s, t);
            ++r.cases;
            if (cmp(t, s).outcome != d.reversed().outcome)
                r.fail("antisymmetry: " + show_m(s) + " vs " + show_m(t));
            if (d.equal() != (s == t))
                r.fail("equality mismatch: " + show_m(s) + " vs " + show_m(t));
            if (!d.less())
                continue;
            for (const auto& u : all) {
                if (std::max(degree(s), degree(t)) + degree(u) > max_total)
                    break;  // `all` is sorted by degree
                ++r.cases;
                if (!cmp(mul(u, s), mul(u, t)).less())
                    r.fail("left multiplication by " + show_m(u) + " breaks " + show_m(s) + " < " + show_m(t));
                if (!cmp(mul(s, u), mul(t, u)).less())
                    r.fail("right multiplication by " + show_m(u) + " breaks " + show_m(s) + " < " + show_m(t));
            }
        }
    }
    // Transitivity on a prefix keeps the cubic loop small.
    std::size_t k = std::min<std::size_t>(all.size(), 80);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l)
                if (cmp(all[i], all[j]).less() && cmp(all[j], all[l]).less() && !cmp(all[i], all[l]).less())
                    r.fail("transitivity: " + show_m(all[i]) + ", " + show_m(all[j]) + ", " + show_m(all[l]));
}

NcPoly random_homogeneous(const Alphabet& alphabet, int degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> terms(1, 3);
    NcPoly out;
    int count = terms(rng);
    for (int k = 0; k < count; ++k) {
        std::vector<Letter> word;
        int remaining = degree;
        while (remaining > 0) {
            std::vector<Letter> fits;
            for (const auto& g : alphabet.generators())
                if (g.degree <= remaining)
                    fits.push_back(g.letter());
            if (fits.empty()) {  // dead end, restart the word
                word.clear();
                remaining = degree;
                continue;
            }
            std::uniform_int_distribution<std::size_t> pick(0, fits.size() - 1);
            word.push_back(fits[pick(rng)]);
            remaining -= word.back().degree;
        }
        out.add_term(NcWord(word), Rational(coef(rng)));
    }
    return out;
}

/// Degrees d for which some word of degree d exists.
std::vector<int> reachable_degrees(const Alphabet& alphabet, int max_degree)
{
    std::vector<bool> ok(static_cast<std::size_t>(max_degree) + 1, false);
    ok[0] = true;
    for (int d = 1; d <= max_degree; ++d)
        for (const auto& g : alphabet.generators())
            if (g.degree <= d && ok[static_cast<std::size_t>(d - g.degree)])
                ok[static_cast<std::size_t>(d)] = true;
    std::vector<int> out;
    for (int d = 1; d <= max_degree; ++d)
        if (ok[static_cast<std::size_t>(d)])
            out.push_back(d);
    return out;
}

template <class M>
LinearCombination<M> random_poly(const Carrier<M>& carrier, int max_degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_int_distribution<int> terms(1, 5);
    std::uniform_int_distribution<int> coef(-4, 4);
    LinearCombination<M> out;
    int count = terms(rng);
    for (int k = 0; k < count; ++k) {
        auto ms = carrier.monomials(deg(rng));
        if (ms.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
        out.add_term(ms[pick(rng)], make_rational(coef(rng), 1 + (k % 2)));
    }
    return out;
}

template <class M>
LinearCombination<M> random_member(const IdealBases<M>& bases, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(1, bases.max_degree());
    std::uniform_int_distribution<int> coef(-3, 3);
    LinearCombination<M> out;
    for (int k = 0; k < 3; ++k) {
        auto rows = bases[deg(rng)].rows();
        if (rows.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
        out.add_scaled(rows[pick(rng)], Rational(coef(rng)));
    }
    return out;
}

/// Membership decided by the echelon reduction, independent of can().
template <class M>
bool member_by_echelon(const LinearCombination<M>& f, const IdealBases<M>& bases)
{
    std::set<int> degrees;
    for (const auto& [m, c] : f)
        degrees.insert(degree(m));
    return std::all_of(degrees.begin(), degrees.end(),
                       [&](int d) { return bases[d].echelon.contains(f.component(d)); });
}

} // namespace

CheckResult check_prelie_graft(const Alphabet& alphabet, int max_total)
{
    CheckResult r{"pre-Lie law for grafting"};
    auto all = trees_up_to(alphabet, max_total);
    for (const auto& s : all)
        for (const auto& t : all)
            for (const auto& u : all) {
                if (s.degree() + t.degree() + u.degree() > max_total)
                    continue;
                ++r.cases;
                TreePoly S(s), T(t), U(u);
                TreePoly lhs = graft(graft(S, T), U) - graft(S, graft(T, U));
                TreePoly rhs = graft(graft(T, S), U) - graft(T, graft(S, U));
                if (lhs != rhs)
                    r.fail(show(alphabet, s) + ", " + show(alphabet, t) + ", " + show(alphabet, u));
            }
    return r;
}

CheckResult check_nap_butcher(const Alphabet& alphabet, int max_total)
{
    CheckResult r{"NAP law for the Butcher product"};
    auto all = trees_up_to(alphabet, max_total);
    for (const auto& s : all)
        for (const auto& s2 : all)
            for (const auto& t : all) {
                if (s.degree() + s2.degree() + t.degree() > max_total)
                    continue;
                ++r.cases;
                if (!(butcher(s, butcher(s2, t)) == butcher(s2, butcher(s, t))))
                    r.fail(show(alphabet, s) + ", " + show(alphabet, s2) + ", " + show(alphabet, t));
            }
    return r;
}

CheckResult check_rhd_prelie(const Alphabet& alphabet, int samples, int max_total, std::mt19937_64& rng)
{
    CheckResult r{"pre-Lie law for the weighted bracket"};
    auto degrees = reachable_degrees(alphabet, max_total);
    std::vector<std::tuple<int, int, int>> shapes;
    for (int a : degrees)
        for (int b : degrees)
            for (int c : degrees)
                if (a + b + c <= max_total)
                    shapes.emplace_back(a, b, c);
    if (shapes.empty()) {
        r.fail("no degree triple fits");
        return r;
    }
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    for (int k = 0; k < samples; ++k) {
        auto [a, b, c] = shapes[pick(rng)];
        NcPoly x = random_homogeneous(alphabet, a, rng);
        NcPoly y = random_homogeneous(alphabet, b, rng);
        NcPoly z = random_homogeneous(alphabet, c, rng);
        if (x.is_zero() || y.is_zero() || z.is_zero()) {
            --k;
            continue;
        }
        ++r.cases;
        NcPoly lhs = rhd(rhd(x, y), z) - rhd(x, rhd(y, z));
        NcPoly rhs = rhd(rhd(y, x), z) - rhd(y, rhd(x, z));
        if (lhs != rhs)
            r.fail("x = " + format_words(alphabet, x) + ", y = " + format_words(alphabet, y) +
                   ", z = " + format_words(alphabet, z));
    }
    return r;
}

CheckResult check_order_planar(const Alphabet& alphabet, int max_total)
{
    CheckResult r{"monomial order on planar trees"};
    auto all = up_to<PlanarTree>(alphabet, max_total, enumerate_planar);
    order_laws(r, all, max_total, cmp_planar,
               [](const PlanarTree& a, const PlanarTree& b) { return left_butcher(a, b); },
               [&](const PlanarTree& t) { return format_tree(alphabet, t); });
    return r;
}

CheckResult check_order_nonplanar(const Alphabet& alphabet, int max_total)
{
    CheckResult r{"monomial order on non-planar trees"};
    auto all = trees_up_to(alphabet, max_total);
    order_laws(r, all, max_total, cmp_nonplanar, [](const Tree& a, const Tree& b) { return butcher(a, b); },
               [&](const Tree& t) { return show(alphabet, t); });
    return r;
}

CheckResult check_order_binary(const Alphabet& alphabet, int max_total)
{
    CheckResult r{"monomial order on binary trees"};
    auto all = up_to<BinaryTree>(alphabet, max_total, enumerate_binary_by_degree);
    order_laws(r, all, max_total, cmp_binary, [](const BinaryTree& a, const BinaryTree& b) { return vee(a, b); },
               [&](const BinaryTree& t) { return format_binary(alphabet, t); });
    return r;
}

CheckResult check_complement_J(const Alphabet& alphabet, int max_degree, const Caps& caps)
{
    CheckResult r{"O(J) is the set of trees with nondecreasing branches"};
    auto bases = span_ideal(planar_ideal_J(alphabet), max_degree, caps);
    for (int n = 1; n <= max_degree; ++n) {
        auto got = complement(bases, n);
        std::vector<PlanarTree> want;
        for (const auto& t : enumerate_planar(alphabet, n))
            if (has_nondecreasing_branches(t))
                want.push_back(t);
        r.cases += want.size();
        if (!(got == want))
            r.fail("degree " + std::to_string(n) + ": " + std::to_string(got.size()) + " normal trees, expected " +
                   std::to_string(want.size()));
    }
    return r;
}

CheckResult check_complement_J_prime(const Alphabet& alphabet, int max_degree, const Caps& caps)
{
    CheckResult r{"O(J') consists of ladders"};
    auto bases = span_ideal(planar_ideal_J_prime(alphabet), max_degree, caps);
    for (int n = 1; n <= max_degree; ++n)
        for (const auto& t : complement(bases, n)) {
            ++r.cases;
            if (!is_ladder(t))
                r.fail("non-ladder normal tree " + format_tree(alphabet, t));
        }
    return r;
}

template <class M>
CheckResult check_can_contract(const std::string& name, const IdealBases<M>& bases, int samples,
                               std::mt19937_64& rng)
{
    CheckResult r{"Can contract for " + name};
    const auto& carrier = bases.carrier();
    const int top = bases.max_degree();
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int k = 0; k < samples; ++k) {
        ++r.cases;
        auto f = random_poly(carrier, top, rng);
        auto g = random_poly(carrier, top, rng);
        auto cf = can(f, bases);
        auto cg = can(g, bases);
        const std::string at = "sample " + std::to_string(k);
        if (!(can(cf, bases) == cf))
            r.fail(at + ": not idempotent");
        for (const auto& [m, c] : cf)
            if (bases[degree(m)].echelon.row_with_leading(m) != nullptr)
                r.fail(at + ": output contains a leading term of the ideal");
        Rational a(coef(rng)), b(coef(rng));
        if (!(can(a * f + b * g, bases) == a * cf + b * cg))
            r.fail(at + ": not linear");
        if (!member_by_echelon(f - cf, bases))
            r.fail(at + ": f - Can(f) is not in the ideal");
        if (cf.is_zero() != member_by_echelon(f, bases))
            r.fail(at + ": Can(f) = 0 disagrees with membership");
        auto h = random_member(bases, rng);
        if (!can(h, bases).is_zero())
            r.fail(at + ": ideal member with nonzero canonical form");
        if (!(can(f + h, bases) == cf))
            r.fail(at + ": Can(f + member) != Can(f)");
        if (!(can(f, bases, &rng) == cf))
            r.fail(at + ": depends on the choice of reducers");
    }
    return r;
}

template CheckResult check_can_contract(const std::string&, const IdealBases<PlanarTree>&, int, std::mt19937_64&);
template CheckResult check_can_contract(const std::string&, const IdealBases<Tree>&, int, std::mt19937_64&);
template CheckResult check_can_contract(const std::string&, const IdealBases<BinaryTree>&, int, std::mt19937_64&);

CheckResult check_can_contract_all(const Alphabet& alphabet, int max_degree, int samples, std::mt19937_64& rng,
                                   const Caps& caps)
{
    CheckResult r{"Can contract for J, J' and I"};
    for (auto part : {check_can_contract("J", span_ideal(planar_ideal_J(alphabet), max_degree, caps), samples, rng),
                      check_can_contract("J'", span_ideal(planar_ideal_J_prime(alphabet), max_degree, caps), samples,
                                         rng),
                      check_can_contract("I", span_ideal(nonplanar_ideal_I(alphabet), max_degree, caps), samples,
                                         rng)}) {
        r.cases += part.cases;
        if (!part.passed)
            r.fail(part.name + ": " + part.detail);
    }
    return r;
}

CheckResult check_psi_triangular(const Alphabet& alphabet, int max_degree)
{
    CheckResult r{"Psi is unitriangular with support in the hash class"};
    for (int n = 1; n <= max_degree; ++n) {
        auto all = enumerate_nonplanar(alphabet, n);
        for (const auto& t : all) {
            ++r.cases;
            TreePoly p = psi(t);
            auto [lead, lc] = p.leading_term();
            if (!(lead == t) || lc != 1)
                r.fail("leading term of Psi(" + show(alphabet, t) + ") is " + show(alphabet, lead));
            HashClass cls = hash_class(t);
            for (const auto& [s, c] : p)
                if (!cls.contains(s))
                    r.fail(show(alphabet, s) + " in Psi(" + show(alphabet, t) + ") lies outside the hash class");
            for (const auto& s : all)
                if (beta(s, t) != p.coefficient(s))
                    r.fail("beta(" + show(alphabet, s) + ", " + show(alphabet, t) + ") = " +
                           format_rational(beta(s, t)) + " but Psi has " + format_rational(p.coefficient(s)));
        }
    }
    return r;
}

CheckResult check_psi_fixed_points(const Alphabet& alphabet, int max_degree, const Caps& caps)
{
    CheckResult r{"Psi fixes the normal trees of I"};
    auto bases = span_ideal(nonplanar_ideal_I(alphabet), max_degree, caps);
    for (int n = 1; n <= max_degree; ++n)
        for (const auto& t : complement(bases, n)) {
            ++r.cases;
            if (!(psi(t) == TreePoly(t)))
                r.fail("Psi(" + show(alphabet, t) + ") = " + format_poly(alphabet, psi(t)));
        }
    return r;
}

CheckResult check_phi_morphism(const Alphabet& alphabet, int max_total)
{
    CheckResult r{"Phi is a pre-Lie morphism"};
    auto all = trees_up_to(alphabet, max_total - 1);
    for (const auto& s : all)
        for (const auto& t : all) {
            if (s.degree() + t.degree() > max_total)
                continue;
            ++r.cases;
            if (!(phi(graft(s, t)) == rhd(phi(s), phi(t))))
                r.fail(show(alphabet, s) + " -> " + show(alphabet, t));
        }
    return r;
}

CheckResult check_kernel(const Alphabet& alphabet, int max_degree, const Caps& caps)
{
    CheckResult r{"I is the kernel of Phi"};
    auto bases = span_ideal(nonplanar_ideal_I(alphabet), max_degree, caps);
    for (int n = 1; n <= max_degree; ++n) {
        ++r.cases;
        auto k = kernel_check(bases, alphabet, n);
        if (!k.ok())
            r.fail("degree " + std::to_string(n) + ": rows vanish " + (k.rows_vanish ? "yes" : "no") + ", " +
                   std::to_string(k.tree_count) + " - " + std::to_string(k.ideal_rank) + " vs dim " +
                   std::to_string(k.lie_dim));
    }
    return r;
}

CheckResult check_lie_basis(const Alphabet& alphabet, int max_degree, const Caps& caps)
{
    CheckResult r{"Phi(O(I)) is a basis of the Lie algebra"};
    auto bases = span_ideal(nonplanar_ideal_I(alphabet), max_degree, caps);
    for (int n = 1; n <= max_degree; ++n) {
        ++r.cases;
        try {
            lie_monomial_basis(alphabet, n, bases);
        } catch (const RankDefect& e) {
            r.fail(e.what());
        }
    }
    return r;
}

CheckResult check_gamma_morphism(const Alphabet& alphabet, int max_leaves)
{
    CheckResult r{"gamma turns . into *"};
    auto all = up_to<BinaryTree>(alphabet, max_leaves - 1, enumerate_binary);
    for (const auto& x : all)
        for (const auto& y : all) {
            if (x.leaf_count() + y.leaf_count() > max_leaves)
                continue;
            ++r.cases;
            BinaryPoly X(x), Y(y);
            if (!(gamma(dot(X, Y)) == star(gamma(X), gamma(Y))))
                r.fail(format_binary(alphabet, x) + " . " + format_binary(alphabet, y));
            if (!(gamma_inverse(gamma(dot(X, Y))) == dot(X, Y)))
                r.fail("gamma_inverse fails on " + format_binary(alphabet, vee(x, y)));
        }
    return r;
}

CheckResult check_binary_ideals_equal(const Alphabet& alphabet, int max_degree, const Caps& caps)
{
    CheckResult r{"Lie ideal for * equals pre-Lie ideal for ."};
    auto lie = span_ideal(binary_ideal_star_lie(alphabet), max_degree, caps);
    auto prelie = span_ideal(binary_ideal_dot_prelie(alphabet), max_degree, caps);
    for (int n = 1; n <= max_degree; ++n) {
        ++r.cases;
        if (!(lie[n].echelon == prelie[n].echelon))
            r.fail("degree " + std::to_string(n) + ": ranks " + std::to_string(lie[n].rank()) + " and " +
                   std::to_string(prelie[n].rank()));
    }
    return r;
}

CheckResult check_weight_f(const Alphabet& alphabet, int max_leaves)
{
    CheckResult r{"weight f agrees with the left-vertex product"};
    for (const auto& z : up_to<BinaryTree>(alphabet, max_leaves, enumerate_binary)) {
        ++r.cases;
        if (weight_f(z) != weight_f_by_left_vertices(z))
            r.fail(format_binary(alphabet, z));
    }
    return r;
}

std::vector<CheckResult> run_invariant_suite(const Alphabet& alphabet, const VerifyConfig& config)
{
    std::mt19937_64 rng(config.seed);
    const int n = config.max_degree;
    std::vector<CheckResult> out;
    out.push_back(check_prelie_graft(alphabet, n));
    out.push_back(check_nap_butcher(alphabet, n));
    out.push_back(check_rhd_prelie(alphabet, config.samples, std::max(3, n), rng));
    out.push_back(check_order_planar(alphabet, n));
    out.push_back(check_order_nonplanar(alphabet, n));
    out.push_back(check_order_binary(alphabet, n));
    out.push_back(check_complement_J(alphabet, n, config.caps));
    out.push_back(check_complement_J_prime(alphabet, n, config.caps));
    out.push_back(check_can_contract_all(alphabet, n, config.samples, rng, config.caps));
    out.push_back(check_psi_triangular(alphabet, n));
    out.push_back(check_psi_fixed_points(alphabet, n, config.caps));
    out.push_back(check_phi_morphism(alphabet, n));
    out.push_back(check_kernel(alphabet, n, config.caps));
    out.push_back(check_lie_basis(alphabet, n, config.caps));
    out.push_back(check_gamma_morphism(alphabet, std::min(n, 4)));
    out.push_back(check_binary_ideals_equal(alphabet, n, config.caps));
    out.push_back(check_weight_f(alphabet, std::min(n, 5)));
    return out;
}

} // namespace plgb
