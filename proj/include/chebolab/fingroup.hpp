#pragma once

// Finite groups stored as explicit multiplication tables.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chebolab/intmat.hpp"

namespace chebo {

/// Groups above this order are rejected by make_group.
inline constexpr int kMaxGroupOrder = 256;

/// Default order bound for normal-subgroup enumeration.
inline constexpr int kNormalSubgroupBound = 64;

/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<int>;

class FiniteGroup {
 public:
  int order() const { return order_; }
  int identity() const { return identity_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int pow(int a, std::int64_t k) const;
  int element_order(int a) const;
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  /// Row-major multiplication table.
  std::span<const int> table() const { return table_; }

  friend FiniteGroup make_group(std::vector<int> table, int order, std::string label, int order_bound);

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string label_;
};

/// Validates group axioms exhaustively. Throws INVALID_TABLE, NON_ASSOCIATIVE,
/// NO_IDENTITY, NO_INVERSE or GROUP_TOO_LARGE.
FiniteGroup make_group(std::vector<int> table, int order, std::string label = {},
                       int order_bound = kMaxGroupOrder);
FiniteGroup make_group(const std::vector<std::vector<int>>& table, std::string label = {},
                       int order_bound = kMaxGroupOrder);

struct ConjClass {
  int representative = 0;
  ElementSet members;

  std::size_t size() const { return members.size(); }
  bool contains(int g) const;
  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

/// Classes sorted by representative; each representative is the minimal member.
std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g);

/// element -> position in the class list.
std::vector<int> class_index(const std::vector<ConjClass>& classes, int order);

ElementSet subgroup_generated(const FiniteGroup& g, std::span<const int> gens);

bool is_subgroup(const FiniteGroup& g, const ElementSet& h);
bool is_normal(const FiniteGroup& g, const ElementSet& n);

/// All normal subgroups, ordered by size then lexicographically.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, int order_bound = kNormalSubgroupBound);

struct QuotientGroup {
  FiniteGroup group;
  /// element of G -> coset index in G/N
  std::vector<int> projection;
};

QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& n);

ElementSet intersect(const ElementSet& a, const ElementSet& b);

// --- Quotient targets for link-group models ---

enum class SourceModel { SemidirectZ2Z, FreeProdZ2Z3, FreeAbelian };

std::string_view to_string(SourceModel model);

/// A homomorphism from a link-group model onto an explicit finite group,
/// recorded by the images of the model's generators.
///  SemidirectZ2Z: generators (x, y, t) of Z^2 x|_A Z, t v t^-1 = A v.
///  FreeProdZ2Z3:  generators (sigma, tau) of Z/2 * Z/3.
///  FreeAbelian:   generators e_1..e_k of Z^k.
struct QuotientMap {
  SourceModel source_model = SourceModel::FreeAbelian;
  std::vector<int> generator_images;
  std::shared_ptr<const FiniteGroup> target;
  std::optional<Mat2> monodromy;
};

bool satisfies_relations(const QuotientMap& q);
bool is_surjective(const QuotientMap& q);

/// (Z/m)^2 x| <A mod m> as a quotient of Z^2 x|_A Z.
/// Element (v, k) is stored at index k*m^2 + v0*m + v1.
struct SemidirectQuotient {
  std::int64_t modulus = 0;
  int monodromy_order = 0;
  Mat2 monodromy;
  QuotientMap map;

  const FiniteGroup& group() const { return *map.target; }
  int encode(std::int64_t v0, std::int64_t v1, std::int64_t k) const;
};

/// Throws MODULUS_TOO_SMALL for m < 2.
SemidirectQuotient semidirect_quotient(std::int64_t m, const Mat2& a);

/// All (sigma, tau) with sigma^2 = tau^3 = e generating G; optionally one per
/// simultaneous-conjugation orbit (the lexicographically least pair).
std::vector<QuotientMap> enumerate_pairs_23(std::shared_ptr<const FiniteGroup> g, bool dedup);

}  // namespace chebo
