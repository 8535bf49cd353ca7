#pragma once

// Serialization of groups, orbit streams, reports and matrices.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "chebolab/covers.hpp"
#include "chebolab/density.hpp"
#include "chebolab/fingroup.hpp"
#include "chebolab/localglobal.hpp"
#include "chebolab/orbitgen.hpp"

namespace chebo {

using Json = nlohmann::ordered_json;

/// Fixed formatting used by every CSV writer.
std::string format_real(double x);

// --- groups ---

/// {label, order, table}
Json group_to_json(const FiniteGroup& g);
/// Throws CONFIG_INVALID on malformed input and the make_group codes on bad tables.
FiniteGroup group_from_json(const Json& j);
/// One table row per line, comma separated; blank lines and '#' comments skipped.
FiniteGroup group_from_csv(std::istream& in, std::string label = {});
void group_to_csv(std::ostream& out, const FiniteGroup& g);

// --- orbit streams ---

/// One line of the JSON-lines orbit stream.
struct OrbitRecord {
  std::string family;  // "cat" or "modular"
  std::size_t index = 0;
  /// cat: period; modular: word over {R, L}
  Json period_or_word;
  /// cat: [t0, t1]; modular: trace
  Json translation_or_trace;
  double length_prime = 0.0;
  double length_geometric = 0.0;
  /// cat only: [x, y, den]
  std::optional<RationalPoint> base_point;

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

std::vector<OrbitRecord> orbit_records(const std::vector<CatOrbit>& orbits, const Mat2& a);
std::vector<OrbitRecord> orbit_records(const std::vector<GeodesicClass>& geodesics);

Json to_json(const OrbitRecord& r);
OrbitRecord orbit_record_from_json(const Json& j);

void write_orbits_jsonl(std::ostream& out, const std::vector<OrbitRecord>& records);
/// Throws CONFIG_INVALID on a malformed line and DATASET_EMPTY when no records are read.
std::vector<OrbitRecord> read_orbits_jsonl(std::istream& in);

CatOrbit to_cat_orbit(const OrbitRecord& r);
GeodesicClass to_geodesic(const OrbitRecord& r);
/// Lengths of the records under one scheme, norms exp(length).
LengthAssignment lengths_of(const std::vector<OrbitRecord>& records, LengthScheme scheme);

// --- density ---

Json to_json(const DensityReport& r);
/// class_rep, class_size, count, natural, dirichlet at each s, dirichlet_extrapolated,
/// truncation_sensitivity, expected
void write_density_csv(std::ostream& out, const DensityReport& r);
/// nu followed by one running-frequency column per class.
void write_density_series_csv(std::ostream& out, const std::vector<RunningDensity>& per_class);

// --- covers ---

Json to_json(const SplittingData& d);
void write_sweep_csv(std::ostream& out, const SweepReport& r);

// --- local-global ---

void write_matrix_csv(std::ostream& out, const IntMatrix& m);
IntMatrix read_matrix_csv(std::istream& in);
Json to_json(const LgpExperiment& e);
Json to_json(const LgpSummary& s);
Json to_json(const ReciprocityReport& r);
Json to_json(const OrthogonalityReport& r);

/// Scope note carried in every local-global report header.
inline constexpr const char* kLocalGlobalScope =
    "abelianized F_p shadow with trivial action; profinite statements are not computed";

}  // namespace chebo
