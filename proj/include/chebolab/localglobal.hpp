#pragma once

// Abelianized local-global checks over F_p: linking matrices as longitude
// data, restriction to peripheral pairs, reciprocity and local duality.
// Indices are 0-based throughout.

#include <cstdint>
#include <span>
#include <vector>

#include "chebolab/intmat.hpp"

namespace chebo {

using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;

/// Symmetric with zero diagonal.
class LinkingMatrix {
 public:
  /// Throws INVALID_ARGUMENT unless square, symmetric, zero-diagonal.
  explicit LinkingMatrix(IntMatrix entries);

  Eigen::Index n() const { return entries_.rows(); }
  const IntMatrix& entries() const { return entries_; }
  std::int64_t operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

 private:
  IntMatrix entries_;
};

/// Uniform entries in [-bound, bound] above the diagonal, mirrored below.
LinkingMatrix synthetic_linking_model(int n, int bound, std::uint64_t seed);

/// Rows 2k and 2k+1 are e_i^T and Lambda_i^T mod p for i = S[k].
/// Throws NOT_PRIME or INDEX_OUT_OF_RANGE.
IntMatrix restriction_map(const LinkingMatrix& lambda, std::int64_t p, std::span<const int> s);

/// Kernel dimension of the restriction to the complement of `excluded`.
Eigen::Index injectivity_check(const LinkingMatrix& lambda, std::int64_t p, std::span<const int> excluded);

struct SurjectivityResult {
  bool surjective = false;
  Eigen::Index rank = 0;
};

SurjectivityResult surjectivity_check(const LinkingMatrix& lambda, std::int64_t p, std::span<const int> s);

struct LocalPair {
  std::int64_t a = 0;  // value on the meridian
  std::int64_t b = 0;  // value on the longitude
};

/// a1 b2 - b1 a2 mod p
std::int64_t local_pairing(LocalPair x, LocalPair y, std::int64_t p);

/// sum_i <(phi_i, (L phi)_i), (psi_i, (L psi)_i)> mod p for an arbitrary
/// square matrix L; vanishes when L is symmetric.
std::int64_t reciprocity_defect(const IntMatrix& raw, std::int64_t p, const IntVector& phi, const IntVector& psi);

struct ReciprocityReport {
  std::int64_t p = 0;
  Eigen::Index n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int violations = 0;
};

/// Random phi, psi in F_p^n. Throws INVALID_ARGUMENT for trials < 1.
ReciprocityReport reciprocity_check(const LinkingMatrix& lambda, std::int64_t p, int trials, std::uint64_t seed);

struct OrthogonalityReport {
  std::int64_t p = 0;
  std::size_t unramified_size = 0;
  std::size_t complement_size = 0;
  bool self_orthogonal = false;
  bool complement_equals = false;

  bool holds() const { return self_orthogonal && complement_equals; }
};

/// Exhaustive over F_p^2 x F_p^2 for the line {a = 0}.
OrthogonalityReport unramified_orthogonality(std::int64_t p);

struct ResidueTable {
  std::int64_t modulus = 1;
  std::vector<std::size_t> counts;
  std::size_t total = 0;

  double frequency(std::int64_t r) const;
  /// max_r |frequency(r) - 1/modulus|
  double max_deviation() const;
};

/// Throws INVALID_ARGUMENT for n < 1.
ResidueTable linking_mod_distribution(std::span<const std::int64_t> values, std::int64_t n);

struct LgpExperiment {
  std::uint64_t seed = 0;
  std::int64_t p = 0;
  int n = 0;
  std::vector<int> s;
  Eigen::Index rank = 0;
  Eigen::Index kernel_dim = 0;
  bool surjective = false;
  bool injective = false;
  bool unlink_surjective = false;
};

struct LgpSummary {
  std::uint64_t seed = 0;
  int trials = 0;
  int injective = 0;
  int surjective = 0;
  int unlink_surjective = 0;
  std::vector<LgpExperiment> experiments;
};

/// Per trial: a synthetic matrix seeded from (seed, trial), a random S of the
/// given size, injectivity away from S, surjectivity onto S, and the same
/// surjectivity check for the unlink.
LgpSummary local_global_trials(int trials, int n, int bound, std::int64_t p, int s_size, std::uint64_t seed);

}  // namespace chebo
