#pragma once

// The two planetary-link families: periodic orbits of a hyperbolic toral
// automorphism (the cat map) and primitive closed modular geodesics.

#include <cstdint>
#include <string>
#include <vector>

#include "chebolab/fingroup.hpp"
#include "chebolab/group_library.hpp"
#include "chebolab/intmat.hpp"

namespace chebo {

/// Exact point (x/den, y/den) of the torus [0,1)^2 in lowest terms.
struct RationalPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t den = 1;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Lexicographic order on (x, y) as rationals.
bool lex_less(const RationalPoint& a, const RationalPoint& b);

struct CatOrbit {
  int period = 0;
  /// Lexicographically least point of the orbit.
  RationalPoint base_point;
  /// A^period * x + (-x) for the lift x of base_point in [0,1)^2.
  Vec2 translation = Vec2::Zero();
  bool primitive = true;
  std::size_t index = 0;
  double length = 0.0;
};

struct GeodesicClass {
  /// [a1, b1, ..., ak, bk] for R^a1 L^b1 ... R^ak L^bk, all >= 1.
  std::vector<int> exponents;
  std::int64_t trace = 0;
  double geo_length = 0.0;
  std::size_t index = 0;

  int letters() const;
  /// Canonical word as a string over {R, L}.
  std::string word() const;
};

enum class LengthScheme { PrimeNumber, Geometric };

std::string_view to_string(LengthScheme scheme);

struct LengthAssignment {
  LengthScheme scheme = LengthScheme::PrimeNumber;
  /// Indexed by ordering position.
  std::vector<double> lengths;
  std::vector<double> norms;

  std::size_t size() const { return lengths.size(); }
};

/// Throws NOT_ANOSOV unless |tr A| > 2, and INVALID_ARGUMENT unless det A = 1.
void require_anosov(const Mat2& a);

/// Fix(A^period) enumerated through the Smith form of A^period - I.
std::vector<RationalPoint> cat_fixed_points(const Mat2& a, int period);

/// |det(A^period - I)|
std::int64_t cat_fixed_point_count(const Mat2& a, int period);

struct CatOrbitOptions {
  /// The origin is the fixed zero section, i.e. the knot the link winds around.
  bool include_origin = false;
};

/// Primitive orbits of period 1..max_period, ordered by order_knots.
std::vector<CatOrbit> cat_primitive_orbits(const Mat2& a, int max_period, CatOrbitOptions options = {});

/// Primitive cyclic R/L words containing both letters, of total length <= max_word_length.
std::vector<GeodesicClass> modular_geodesics(int max_word_length);

Mat2 word_matrix(const std::vector<int>& exponents);

/// 2 arccosh(trace / 2)
double geodesic_length(std::int64_t trace);

/// Expanding eigenvalue of a hyperbolic matrix.
double expanding_eigenvalue(const Mat2& a);

LengthAssignment assign_lengths(const std::vector<CatOrbit>& orbits, LengthScheme scheme, const Mat2& a);
LengthAssignment assign_lengths(const std::vector<GeodesicClass>& geodesics, LengthScheme scheme);
/// ln p_1, ..., ln p_count
LengthAssignment prime_lengths(std::size_t count);

/// Period, then least base point. Reassigns indices.
void order_knots(std::vector<CatOrbit>& orbits);
/// Letter count, then trace, then canonical word. Reassigns indices.
void order_knots(std::vector<GeodesicClass>& geodesics);

/// Image of the orbit's free homotopy class (translation, period) under q.
/// Requires SEMIDIRECT_Z2_Z, else MODEL_MISMATCH.
int frobenius_element(const CatOrbit& orbit, const QuotientMap& q);
/// Image of R^a1 L^b1 ... with R -> sigma tau, L -> sigma tau^2.
/// Requires FREE_PROD_Z2_Z3, else MODEL_MISMATCH.
int frobenius_element(const GeodesicClass& geodesic, const QuotientMap& q);
/// Same word evaluated from explicit images of R and L.
int frobenius_element(const GeodesicClass& geodesic, const FiniteGroup& g, int r_image, int l_image);

template <typename Knot>
ConjClass frobenius_class(const Knot& knot, const QuotientMap& q) {
  const int x = frobenius_element(knot, q);
  for (auto& c : conjugacy_classes(*q.target))
    if (c.contains(x)) return c;
  throw Error(ErrorCode::InvalidArgument, "element outside target");
}

/// Class index (into conjugacy_classes(target)) for every knot, in order.
template <typename Knot>
std::vector<int> frobenius_tags(const std::vector<Knot>& knots, const QuotientMap& q) {
  const auto index = class_index(conjugacy_classes(*q.target), q.target->order());
  std::vector<int> tags;
  tags.reserve(knots.size());
  for (const auto& k : knots) tags.push_back(index[frobenius_element(k, q)]);
  return tags;
}

/// Reduction PSL_2(Z) -> PSL_2(F_p) as a (2,3)-quotient: sigma = S, tau = S T.
QuotientMap modular_reduction(const MatrixGroup& target);

/// Sum of R-exponents minus sum of L-exponents.
std::int64_t rademacher(const GeodesicClass& geodesic);
std::int64_t rademacher(const std::vector<int>& exponents);

}  // namespace chebo
