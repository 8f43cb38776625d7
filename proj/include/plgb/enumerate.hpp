#pragma once

#include "plgb/alphabet.hpp"
#include "plgb/trees.hpp"

#include <vector>

namespace plgb {

// All enumerations are complete and duplicate-free. Rooted trees come out in
// ascending tree order; binary trees in ascending cmp_binary order.
// n < 1 throws DegreeError.

std::vector<PlanarTree> enumerate_planar(const Alphabet& alphabet, int degree);
std::vector<Tree> enumerate_nonplanar(const Alphabet& alphabet, int degree);

/// Binary trees with exactly `leaves` leaves, any decorations.
std::vector<BinaryTree> enumerate_binary(const Alphabet& alphabet, int leaves);

/// Binary trees whose leaf decoration degrees sum to `degree`.
std::vector<BinaryTree> enumerate_binary_by_degree(const Alphabet& alphabet, int degree);

} // namespace plgb
