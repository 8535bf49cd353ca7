#pragma once

// Decomposition and inertia data for finite covers presented by quotient
// data, with subcover components, composita and split-class sets.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chebolab/fingroup.hpp"

namespace chebo {

/// Images of the meridian and longitude of a boundary torus.
struct PeripheralImage {
  std::shared_ptr<const FiniteGroup> target;
  int mu = 0;
  int lambda = 0;
};

/// Throws NONCOMMUTING_PERIPHERAL or INDEX_OUT_OF_RANGE.
PeripheralImage make_peripheral(std::shared_ptr<const FiniteGroup> target, int mu, int lambda);

struct SubcoverComponent {
  int id = 0;
  int e = 1;
  int f = 1;
  /// Coset indices (into left_cosets) in this D-orbit.
  std::vector<int> cosets;
};

struct SplittingData {
  int e = 1;
  int f = 1;
  int g = 1;
  ElementSet decomposition;
  ElementSet inertia;
  /// Only set for unramified knots.
  std::optional<ConjClass> frobenius;
  std::vector<SubcoverComponent> components;
};

SplittingData splitting_data(const PeripheralImage& p);

/// Left cosets xH, ordered by their least element.
std::vector<ElementSet> left_cosets(const FiniteGroup& g, const ElementSet& h);

/// Orbits of D on G/H by left multiplication. Throws NOT_A_SUBGROUP.
std::vector<SubcoverComponent> subcover_components(const PeripheralImage& p, const ElementSet& h);

bool is_totally_split(const PeripheralImage& p);

enum class LengthConvention { DecompOrder, CoveringDegree };

std::string_view to_string(LengthConvention convention);

/// |D| * base or f * base.
double induced_length(double base, const SplittingData& data, LengthConvention convention);

/// N1 ∩ N2. Throws NOT_NORMAL.
ElementSet compositum(const FiniteGroup& g, const ElementSet& n1, const ElementSet& n2);

/// Classes contained in N. Throws NOT_NORMAL.
std::vector<ConjClass> split_class_set(const FiniteGroup& g, const ElementSet& n);

struct SweepRow {
  std::string group;
  int order = 0;
  ElementSet n1;
  ElementSet n2;
  bool distinguished = true;
};

struct SweepReport {
  int order_bound = 0;
  std::size_t groups = 0;
  std::size_t counterexamples = 0;
  std::vector<SweepRow> rows;
};

/// Every pair of distinct normal subgroups of every library group up to the
/// bound. Throws GROUP_TOO_LARGE above order 64.
SweepReport split_rigidity_sweep(int order_bound);
SweepReport split_rigidity_sweep(const std::vector<std::shared_ptr<const FiniteGroup>>& groups, int order_bound);

struct TowerCheck {
  int f_total = 1;
  int f_quotient = 1;
  int f_intermediate = 1;
  bool holds = false;
};

/// f in G against f in G/N times |D ∩ N| / |I ∩ N|. Throws NOT_NORMAL.
TowerCheck multiplicativity_check(const PeripheralImage& p, const ElementSet& n);

}  // namespace chebo
