#pragma once

// Brute-force reference computations used by the acceptance harness.

#include <cstdint>
#include <set>
#include <array>

#include "chebolab/intmat.hpp"

namespace chebo::reference {

/// Reduced triples (x, y, den) with (A^nu - I)(x, y) = 0 mod N, N = |det(A^nu - I)|,
/// found by scanning all N^2 grid points.
std::set<std::array<std::int64_t, 3>> cat_fixed_points(const Mat2& a, int nu);

/// Dedekind sum s(h, k) scaled by 6k, an integer.
std::int64_t dedekind_sum_6k(std::int64_t h, std::int64_t k);

/// Rademacher function of a hyperbolic matrix from the Dedekind-sum formula.
/// Throws INVALID_ARGUMENT when the value is not an integer.
std::int64_t rademacher_dedekind(const Mat2& m);

}  // namespace chebo::reference
