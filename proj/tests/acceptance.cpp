// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "plgb/echelon.hpp"
#include "plgb/enumerate.hpp"
#include "plgb/error.hpp"
#include "plgb/ideal.hpp"
#include "plgb/lie.hpp"
#include "plgb/magma.hpp"
#include "plgb/prelie_basis.hpp"
#include "plgb/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace plgb;

namespace {

struct Verdict {
    bool passed = true;
    std::string detail;
    std::size_t cases = 0;

    void require(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
    void absorb(const CheckResult& r)
    {
        std::ostringstream s;
        cases += r.cases;
        require(r.cases > 0, r.name + ": no cases examined");
        s << r.name << ": " << r.failures << "/" << r.cases << " failed; " << r.detail;
        require(r.passed, s.str());
    }
};

const Alphabet one = Alphabet::single();
const Alphabet xy = Alphabet::uniform({"x", "y"});

Verdict counting()
{
    Verdict o;
    const std::size_t nonplanar[] = {1, 1, 2, 4, 9, 20, 48};
    const std::size_t planar[] = {1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 7; ++n)
        o.require(enumerate_nonplanar(one, n).size() == nonplanar[n - 1], "non-planar count at n=" + std::to_string(n));
    for (int n = 1; n <= 6; ++n)
        o.require(enumerate_planar(one, n).size() == planar[n - 1], "planar count at n=" + std::to_string(n));
    return o;
}

Verdict identities()
{
    Verdict o;
    o.absorb(check_prelie_graft(one, 6));
    o.absorb(check_nap_butcher(one, 6));
    std::mt19937_64 rng(2024);
    auto r = check_rhd_prelie(xy, 1000, 8, rng);
    o.require(r.cases >= 1000, "fewer than 1000 rhd triples");
    o.absorb(r);
    return o;
}

Verdict order_laws()
{
    Verdict o;
    for (const Alphabet* a : {&one, &xy}) {
        o.absorb(check_order_planar(*a, 5));
        o.absorb(check_order_nonplanar(*a, 5));
        o.absorb(check_order_binary(*a, 5));
    }
    return o;
}

Verdict complement_J()
{
    Verdict o;
    o.absorb(check_complement_J(one, 6));
    o.absorb(check_complement_J(xy, 5));
    return o;
}

Verdict complement_J_prime()
{
    Verdict o;
    o.absorb(check_complement_J_prime(one, 6));
    o.absorb(check_complement_J_prime(xy, 6));
    return o;
}

Verdict reduction_contract()
{
    Verdict o;
    std::mt19937_64 rng(7);
    o.absorb(check_can_contract_all(xy, 5, 500, rng));
    return o;
}

Verdict worked_example()
{
    Verdict o;
    auto g = Alphabet::graded(3);
    auto bases = span_ideal(planar_ideal_J_prime(g), 4);
    PlanarPoly f = parse_planar_poly(g, "a3(a1) + a1(a3) + a1(a2) + a1(a1,a2)");
    PlanarPoly h = can(f, bases);
    PlanarPoly expected = parse_planar_poly(g, "3/2*a1(a2(a1)) + 2/3*a3(a1) - 1/2*a2(a1)");
    o.require(h == expected, "Can(f, J') = " + format_poly(g, h));
    return o;
}

Verdict psi_triangular()
{
    Verdict o;
    o.absorb(check_psi_triangular(xy, 5));
    o.absorb(check_psi_triangular(Alphabet::graded(3), 5));
    return o;
}

Verdict psi_fixed_points()
{
    Verdict o;
    o.absorb(check_psi_fixed_points(xy, 5));
    o.absorb(check_psi_fixed_points(Alphabet::graded(3), 5));
    return o;
}

bool proportional(const NcPoly& a, const NcPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return false;
    return a == (a.leading_term().second / b.leading_term().second) * b;
}

Verdict lie_bases()
{
    Verdict o;
    auto bases = span_ideal(nonplanar_ideal_I(xy), 5);
    const std::size_t sizes[] = {2, 1, 2, 3, 6};
    for (int n = 1; n <= 5; ++n) {
        auto b = lie_monomial_basis(xy, n, bases);
        o.require(b.size() == sizes[n - 1], "#B_" + std::to_string(n) + " = " + std::to_string(b.size()));
        std::vector<NcPoly> v;
        for (const auto& e : b)
            v.push_back(e.element);
        o.require(rank_of(v) == lie_dimension(xy, n), "rank defect at n=" + std::to_string(n));
    }

    auto g = Alphabet::graded(4);
    auto gb = span_ideal(nonplanar_ideal_I(g), 4);
    auto L = [&](const char* s) { return letter_poly(g.letter(s)); };
    std::vector<std::vector<NcPoly>> displayed = {
        {L("a3"), bracket(L("a1"), L("a2"))},
        {L("a4"), bracket(L("a1"), L("a3")), bracket(bracket(L("a1"), L("a2")), L("a1"))},
    };
    for (int n = 1; n <= 4; ++n) {
        auto b = lie_monomial_basis(g, n, gb);
        std::vector<NcPoly> v;
        for (const auto& e : b)
            v.push_back(e.element);
        o.require(rank_of(v) == lie_dimension(g, n) && v.size() == rank_of(v),
                  "graded rank defect at n=" + std::to_string(n));
        if (n < 3)
            continue;
        const auto& want = displayed[static_cast<std::size_t>(n - 3)];
        o.require(v.size() == want.size(), "graded #B_" + std::to_string(n));
        std::vector<NcPoly> both = v;
        both.insert(both.end(), want.begin(), want.end());
        o.require(rank_of(both) == want.size(), "graded span mismatch at n=" + std::to_string(n));
        for (const auto& e : v) {
            int matches = 0;
            for (const auto& w : want)
                matches += proportional(e, w) ? 1 : 0;
            o.require(matches == 1, "graded element not proportional to a displayed bracket: " + format_words(g, e));
        }
    }
    return o;
}

Verdict kernel()
{
    Verdict o;
    o.absorb(check_kernel(xy, 5));
    o.absorb(check_kernel(Alphabet::graded(3), 5));
    return o;
}

Verdict weight_function()
{
    Verdict o;
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> deg(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int da = deg(rng), db = deg(rng), dc = deg(rng), dd = deg(rng), de = deg(rng);
        Alphabet a({{"a", da}, {"b", db}, {"c", dc}, {"d", dd}, {"e", de}});
        BinaryTree z = parse_binary(a, "(((a^b)^c)^(d^e))");
        Rational want(da * dd * (da + db) * (da + db + dc));
        o.require(weight_f(z) == want && weight_f_by_left_vertices(z) == want,
                  "f mismatch at trial " + std::to_string(trial));
    }
    o.absorb(check_weight_f(Alphabet({{"p", 2}, {"q", 3}, {"r", 5}}), 6));
    o.absorb(check_gamma_morphism(xy, 4));
    o.absorb(check_gamma_morphism(Alphabet::graded(3), 4));
    o.absorb(check_binary_ideals_equal(xy, 5));
    o.absorb(check_binary_ideals_equal(Alphabet::graded(3), 5));
    return o;
}

Verdict closing_identity()
{
    Verdict o;
    NcPoly x = letter_poly(xy.letter("x")), y = letter_poly(xy.letter("y"));
    NcPoly d = bracket(bracket(bracket(x, y), x), y) - bracket(bracket(bracket(x, y), y), x);
    o.require(d.is_zero(), "difference = " + format_words(xy, d));
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"01 tree counts", counting},
        {"02 pre-Lie, NAP and rhd identities", identities},
        {"03 monomial order laws", order_laws},
        {"04 O(J) is the nondecreasing-branch set", complement_J},
        {"05 O(J') consists of ladders", complement_J_prime},
        {"06 reduction contract", reduction_contract},
        {"07 worked reduction example", worked_example},
        {"08 Psi triangularity", psi_triangular},
        {"09 Psi fixes O(I)", psi_fixed_points},
        {"10 Lie monomial bases", lie_bases},
        {"11 I = Ker Phi", kernel},
        {"12 weight f, gamma and binary ideals", weight_function},
        {"13 [[[x,y],x],y] = [[[x,y],y],x]", closing_identity},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Verdict o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.passed ? "PASS " : "FAIL ") << name << " [" << o.cases << " cases, " << secs << " s]";
        if (!o.passed)
            std::cout << ": " << o.detail;
        std::cout << std::endl;
        failed += o.passed ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
