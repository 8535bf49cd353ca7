#include "chebolab/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "chebolab/error.hpp"

namespace chebo {

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorCode::ConfigInvalid, what); }

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_input(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad_input(std::string("field '") + key + "': " + e.what());
  }
}

std::string element_set(const ElementSet& s) {
  std::string out;
  for (int x : s) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    bad_input("not an integer: '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size()) bad_input("not an integer: '" + text + "'");
  return v;
}

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<int> parse_word(const std::string& word) {
  std::vector<int> exponents;
  std::size_t i = 0;
  while (i < word.size()) {
    const char want = exponents.size() % 2 == 0 ? 'R' : 'L';
    int run = 0;
    while (i < word.size() && word[i] == want) ++run, ++i;
    if (run == 0) bad_input("malformed R/L word '" + word + "'");
    exponents.push_back(run);
  }
  if (exponents.empty() || exponents.size() % 2 != 0) bad_input("word must start with R and end with L: '" + word + "'");
  return exponents;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json group_to_json(const FiniteGroup& g) {
  return Json{{"label", g.label()}, {"order", g.order()}, {"table", std::vector<int>(g.table().begin(), g.table().end())}};
}

FiniteGroup group_from_json(const Json& j) {
  const auto order = field<int>(j, "order");
  auto table = field<std::vector<int>>(j, "table");
  const auto label = j.contains("label") ? field<std::string>(j, "label") : std::string{};
  return make_group(std::move(table), order, label);
}

FiniteGroup group_from_csv(std::istream& in, std::string label) {
  std::vector<int> flat;
  std::size_t rows = 0, width = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    const auto cells = split(line, ',');
    if (rows == 0) width = cells.size();
    if (cells.size() != width) bad_input("ragged multiplication table at row " + std::to_string(rows + 1));
    for (const auto& c : cells) flat.push_back(static_cast<int>(parse_int(c)));
    ++rows;
  }
  if (rows != width) throw Error(ErrorCode::InvalidTable, "multiplication table is not square");
  return make_group(std::move(flat), static_cast<int>(rows), std::move(label));
}

void group_to_csv(std::ostream& out, const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) out << (b ? "," : "") << g.mul(a, b);
    out << '\n';
  }
}

std::vector<OrbitRecord> orbit_records(const std::vector<CatOrbit>& orbits, const Mat2& a) {
  const auto prime = assign_lengths(orbits, LengthScheme::PrimeNumber, a);
  const auto geo = assign_lengths(orbits, LengthScheme::Geometric, a);
  std::vector<OrbitRecord> out;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& o = orbits[i];
    out.push_back({"cat", o.index, o.period, Json::array({o.translation(0), o.translation(1)}), prime.lengths[i],
                   geo.lengths[i], o.base_point});
  }
  return out;
}

std::vector<OrbitRecord> orbit_records(const std::vector<GeodesicClass>& geodesics) {
  const auto prime = assign_lengths(geodesics, LengthScheme::PrimeNumber);
  std::vector<OrbitRecord> out;
  for (std::size_t i = 0; i < geodesics.size(); ++i) {
    const auto& g = geodesics[i];
    out.push_back({"modular", g.index, g.word(), g.trace, prime.lengths[i], g.geo_length, std::nullopt});
  }
  return out;
}

Json to_json(const OrbitRecord& r) {
  Json j{{"family", r.family},
         {"index", r.index},
         {"period_or_word", r.period_or_word},
         {"translation_or_trace", r.translation_or_trace},
         {"length_prime", r.length_prime},
         {"length_geometric", r.length_geometric}};
  if (r.base_point) j["base_point"] = Json::array({r.base_point->x, r.base_point->y, r.base_point->den});
  return j;
}

OrbitRecord orbit_record_from_json(const Json& j) {
  OrbitRecord r;
  r.family = field<std::string>(j, "family");
  r.index = field<std::size_t>(j, "index");
  r.period_or_word = field<Json>(j, "period_or_word");
  r.translation_or_trace = field<Json>(j, "translation_or_trace");
  r.length_prime = field<double>(j, "length_prime");
  r.length_geometric = field<double>(j, "length_geometric");
  if (r.family == "cat") {
    if (!r.period_or_word.is_number_integer()) bad_input("cat record needs an integer period");
    const auto t = field<std::vector<std::int64_t>>(j, "translation_or_trace");
    if (t.size() != 2) bad_input("cat translation must have two entries");
    if (j.contains("base_point")) {
      const auto p = field<std::vector<std::int64_t>>(j, "base_point");
      if (p.size() != 3 || p[2] < 1) bad_input("base_point must be [x, y, den] with den >= 1");
      r.base_point = RationalPoint{p[0], p[1], p[2]};
    }
  } else if (r.family == "modular") {
    if (!r.period_or_word.is_string()) bad_input("modular record needs a word");
    parse_word(r.period_or_word.get<std::string>());
    if (!r.translation_or_trace.is_number_integer()) bad_input("modular record needs an integer trace");
  } else {
    bad_input("unknown family '" + r.family + "'");
  }
  return r;
}

void write_orbits_jsonl(std::ostream& out, const std::vector<OrbitRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

std::vector<OrbitRecord> read_orbits_jsonl(std::istream& in) {
  std::vector<OrbitRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      bad_input("line " + std::to_string(number) + ": " + e.what());
    }
    out.push_back(orbit_record_from_json(j));
  }
  if (out.empty()) throw Error(ErrorCode::DatasetEmpty, "orbit stream contains no records");
  return out;
}

CatOrbit to_cat_orbit(const OrbitRecord& r) {
  if (r.family != "cat") throw Error(ErrorCode::ModelMismatch, "record is not a cat orbit");
  CatOrbit o;
  o.period = r.period_or_word.get<int>();
  o.translation = Vec2(r.translation_or_trace[0].get<std::int64_t>(), r.translation_or_trace[1].get<std::int64_t>());
  if (r.base_point) o.base_point = *r.base_point;
  o.index = r.index;
  o.length = r.length_prime;
  return o;
}

GeodesicClass to_geodesic(const OrbitRecord& r) {
  if (r.family != "modular") throw Error(ErrorCode::ModelMismatch, "record is not a modular geodesic");
  GeodesicClass g;
  g.exponents = parse_word(r.period_or_word.get<std::string>());
  g.trace = r.translation_or_trace.get<std::int64_t>();
  g.geo_length = r.length_geometric;
  g.index = r.index;
  return g;
}

LengthAssignment lengths_of(const std::vector<OrbitRecord>& records, LengthScheme scheme) {
  LengthAssignment a;
  a.scheme = scheme;
  for (const auto& r : records) {
    const double l = scheme == LengthScheme::PrimeNumber ? r.length_prime : r.length_geometric;
    a.lengths.push_back(l);
    // Prime norms are integers; undo the rounding of exp(log p).
    a.norms.push_back(scheme == LengthScheme::PrimeNumber ? std::round(std::exp(l)) : std::exp(l));
  }
  return a;
}

Json to_json(const DensityReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.per_class) {
    classes.push_back({{"representative", c.cls.representative},
                       {"size", c.cls.size()},
                       {"members", c.cls.members},
                       {"count", c.count},
                       {"natural_freq", c.natural_freq},
                       {"dirichlet_ratios", c.dirichlet.ratios},
                       {"dirichlet_estimate", c.dirichlet.extrapolated},
                       {"dirichlet_slope", c.dirichlet.slope},
                       {"truncation_sensitivity", c.dirichlet.truncation_sensitivity},
                       {"expected", c.expected}});
  }
  return Json{{"quotient_label", r.quotient_label},
              {"group_order", r.group_order},
              {"scheme", to_string(r.scheme)},
              {"s_grid", r.s_grid},
              {"total_knots", r.total_knots},
              {"truncation", r.truncation},
              {"skip_first", r.skip_first},
              {"max_deviation_from_expected", r.max_deviation_from_expected()},
              {"per_class", classes}};
}

void write_density_csv(std::ostream& out, const DensityReport& r) {
  out << "class_rep,class_size,count,natural";
  for (double s : r.s_grid) out << ",dirichlet_s" << format_real(s);
  out << ",dirichlet_extrapolated,truncation_sensitivity,expected\n";
  for (const auto& c : r.per_class) {
    out << c.cls.representative << ',' << c.cls.size() << ',' << c.count << ',' << format_real(c.natural_freq);
    for (double v : c.dirichlet.ratios) out << ',' << format_real(v);
    out << ',' << format_real(c.dirichlet.extrapolated) << ',' << format_real(c.dirichlet.truncation_sensitivity)
        << ',' << format_real(c.expected) << '\n';
  }
}

void write_density_series_csv(std::ostream& out, const std::vector<RunningDensity>& per_class) {
  out << "nu";
  for (std::size_t c = 0; c < per_class.size(); ++c) out << ",class_" << c;
  out << '\n';
  const std::size_t rows = per_class.empty() ? 0 : per_class.front().series.size();
  for (std::size_t i = 0; i < rows; ++i) {
    out << i + 1;
    for (const auto& d : per_class) out << ',' << format_real(d.series[i]);
    out << '\n';
  }
}

Json to_json(const SplittingData& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back({{"id", c.id}, {"e", c.e}, {"f", c.f}, {"cosets", c.cosets}});
  Json frob = nullptr;
  if (d.frobenius) frob = {{"representative", d.frobenius->representative}, {"members", d.frobenius->members}};
  return Json{{"e", d.e},
              {"f", d.f},
              {"g", d.g},
              {"decomposition", d.decomposition},
              {"inertia", d.inertia},
              {"frobenius", frob},
              {"components", comps}};
}

void write_sweep_csv(std::ostream& out, const SweepReport& r) {
  out << "group,order,n1,n2,verdict\n";
  for (const auto& row : r.rows)
    out << '"' << row.group << "\"," << row.order << ",{" << element_set(row.n1) << "},{" << element_set(row.n2)
        << "}," << (row.distinguished ? "DISTINGUISHED" : "COUNTEREXAMPLE") << '\n';
}

void write_matrix_csv(std::ostream& out, const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
    out << '\n';
  }
}

IntMatrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::vector<std::int64_t> row;
    for (const auto& c : split(line, ',')) row.push_back(parse_int(c));
    if (!rows.empty() && row.size() != rows.front().size()) bad_input("ragged matrix");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::DatasetEmpty, "matrix file contains no rows");
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

Json to_json(const LgpExperiment& e) {
  return Json{{"seed", e.seed},
              {"p", e.p},
              {"n", e.n},
              {"S", e.s},
              {"rank", e.rank},
              {"verdict", e.surjective ? "SURJECTIVE" : "NOT_SURJECTIVE"},
              {"kernel_dim", e.kernel_dim},
              {"unlink_surjective", e.unlink_surjective}};
}

Json to_json(const LgpSummary& s) {
  Json experiments = Json::array();
  for (const auto& e : s.experiments) experiments.push_back(to_json(e));
  return Json{{"scope", kLocalGlobalScope},
              {"seed", s.seed},
              {"trials", s.trials},
              {"injective", s.injective},
              {"surjective", s.surjective},
              {"unlink_surjective", s.unlink_surjective},
              {"experiments", experiments}};
}

Json to_json(const ReciprocityReport& r) {
  return Json{{"scope", kLocalGlobalScope}, {"p", r.p},       {"n", r.n},
              {"trials", r.trials},         {"seed", r.seed}, {"violations", r.violations}};
}

Json to_json(const OrthogonalityReport& r) {
  return Json{{"scope", kLocalGlobalScope},
              {"p", r.p},
              {"unramified_size", r.unramified_size},
              {"complement_size", r.complement_size},
              {"self_orthogonal", r.self_orthogonal},
              {"complement_equals", r.complement_equals}};
}

}  // namespace chebo
