#pragma once

#include "plgb/alphabet.hpp"
#include "plgb/ideal.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace plgb {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    bool passed = true;
    std::size_t cases = 0;     ///< number of instances examined
    std::size_t failures = 0;
    std::string detail;        ///< first counterexample, if any

    void fail(std::string what)
    {
        if (failures++ == 0)
            detail = std::move(what);
        passed = false;
    }
};

// Exhaustive identity checks over all trees with total degree <= max_total.
CheckResult check_prelie_graft(const Alphabet& alphabet, int max_total);
CheckResult check_nap_butcher(const Alphabet& alphabet, int max_total);
/// Pre-Lie identity for x |> y = (1/|x|)[x, y] on random homogeneous
/// noncommutative polynomials whose degrees add up to at most max_total.
CheckResult check_rhd_prelie(const Alphabet& alphabet, int samples, int max_total, std::mt19937_64& rng);

/// s < t implies u.s < u.t and s.u < t.u for every product, plus totality
/// and antisymmetry, over all monomials within max_total.
CheckResult check_order_planar(const Alphabet& alphabet, int max_total);
CheckResult check_order_nonplanar(const Alphabet& alphabet, int max_total);
CheckResult check_order_binary(const Alphabet& alphabet, int max_total);

/// O(J)_n equals the trees with nondecreasing branches, n <= max_degree.
CheckResult check_complement_J(const Alphabet& alphabet, int max_degree, const Caps& caps = {});
/// O(J')_n consists of ladders, n <= max_degree.
CheckResult check_complement_J_prime(const Alphabet& alphabet, int max_degree, const Caps& caps = {});

/// Idempotence, linearity, vanishing exactly on the ideal and
/// reducer-choice independence of Can on random polynomials.
template <class M>
CheckResult check_can_contract(const std::string& name, const IdealBases<M>& bases, int samples,
                               std::mt19937_64& rng);
CheckResult check_can_contract_all(const Alphabet& alphabet, int max_degree, int samples, std::mt19937_64& rng,
                                   const Caps& caps = {});

/// T(Psi(t)) = t with coefficient 1, support inside [t]_#, and every
/// coefficient equal to beta(s, t).
CheckResult check_psi_triangular(const Alphabet& alphabet, int max_degree);
/// Psi(t) = t for t in O(I)_n.
CheckResult check_psi_fixed_points(const Alphabet& alphabet, int max_degree, const Caps& caps = {});

/// Phi(s -> t) = Phi(s) |> Phi(t) for all pairs within max_total.
CheckResult check_phi_morphism(const Alphabet& alphabet, int max_total);
/// Rows of I_n vanish under Phi and the codimension equals dim L_n.
CheckResult check_kernel(const Alphabet& alphabet, int max_degree, const Caps& caps = {});
/// Phi(O(I)_n) is independent and has dim L_n elements.
CheckResult check_lie_basis(const Alphabet& alphabet, int max_degree, const Caps& caps = {});

/// gamma(x . y) = gamma(x) * gamma(y) over binary trees with at most
/// max_leaves leaves in total.
CheckResult check_gamma_morphism(const Alphabet& alphabet, int max_leaves);
/// The Lie ideal for * and the pre-Lie ideal for . have the same echelon
/// basis in every degree <= max_degree.
CheckResult check_binary_ideals_equal(const Alphabet& alphabet, int max_degree, const Caps& caps = {});
/// f computed recursively equals the left-vertex product formula.
CheckResult check_weight_f(const Alphabet& alphabet, int max_leaves);

struct VerifyConfig {
    int max_degree = 4;
    std::uint64_t seed = 1;
    int samples = 200;
    Caps caps;
};

/// Every invariant suite above at the configured sizes.
std::vector<CheckResult> run_invariant_suite(const Alphabet& alphabet, const VerifyConfig& config);

} // namespace plgb
