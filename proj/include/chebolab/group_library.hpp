#pragma once

// Constructions of small groups, and the fixed library used by exhaustive sweeps.

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "chebolab/fingroup.hpp"

namespace chebo {

FiniteGroup cyclic(int n);

/// (g, h) is stored at index g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Z/n x| Z/m with b a b^-1 = a^k; requires k^m = 1 mod n. a^i b^j at index j*n + i.
FiniteGroup metacyclic(int n, int m, int k);

/// Dicyclic group of order 4n: <a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>.
FiniteGroup dicyclic(int n);

/// N x| Z/m where the generator acts on N by the automorphism `phi`
/// (a permutation of element indices with phi^m = id). (x, j) at index j*|N| + x.
FiniteGroup extension_by_automorphism(const FiniteGroup& n, const std::vector<int>& phi, int m);

/// Group generated by permutations of {0..d-1}; elements indexed in sorted order.
FiniteGroup permutation_group(const std::vector<std::vector<int>>& generators, std::string label);

/// SL_2(F_p), or PSL_2(F_p) when projective.
struct MatrixGroup {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<Mat2> elements;
  std::int64_t p = 0;
  bool projective = false;

  /// Index of the reduction of `m` (mod p, and mod +-1 when projective).
  int index_of(const Mat2& m) const;

 private:
  friend MatrixGroup special_linear(std::int64_t p, bool projective);
  std::map<std::array<std::int64_t, 4>, int> lookup_;
  std::array<std::int64_t, 4> key(const Mat2& m) const;
};

MatrixGroup special_linear(std::int64_t p, bool projective);

/// All 42 groups of order <= 16 and twelve groups of order 24, each validated.
/// Returned in order of increasing group order.
const std::vector<std::shared_ptr<const FiniteGroup>>& group_library();

/// Library groups with order <= bound.
std::vector<std::shared_ptr<const FiniteGroup>> library_up_to(int order_bound);

}  // namespace chebo
