#pragma once

#include "plgb/alphabet.hpp"
#include "plgb/linear_combination.hpp"
#include "plgb/trees.hpp"

#include <string>
#include <string_view>

namespace plgb {

using BinaryPoly = LinearCombination<BinaryTree>;

/// t1 v t2: new root with left child t1 and right child t2.
BinaryTree vee(const BinaryTree& t1, const BinaryTree& t2);

/// x * y = |x| (x v y), extended bilinearly. x must be homogeneous
/// (DegreeError otherwise).
BinaryPoly star(const BinaryPoly& x, const BinaryPoly& y);
BinaryPoly star(const BinaryTree& x, const BinaryTree& y);

/// Plain magma product x . y extended bilinearly.
BinaryPoly dot(const BinaryPoly& x, const BinaryPoly& y);

/// f(a) = 1, f(x v y) = |x| f(x) f(y).
Rational weight_f(const BinaryTree& z);

/// Product over all left vertices v (left children, leaves included) of the
/// total leaf degree above v.
Rational weight_f_by_left_vertices(const BinaryTree& z);

/// z -> f(z) z, extended linearly; the magma isomorphism (M, .) -> (M, *).
BinaryPoly gamma(const BinaryPoly& x);

/// Inverse of gamma.
BinaryPoly gamma_inverse(const BinaryPoly& x);

BinaryPoly parse_binary_poly(const Alphabet& alphabet, std::string_view text);
std::string format_poly(const Alphabet& alphabet, const BinaryPoly& f);

} // namespace plgb
