// chebolab: generate orbit datasets and run the density, zeta, splitting,
// sweep, local-global and acceptance pipelines.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "chebolab/acceptance.hpp"
#include "chebolab/covers.hpp"
#include "chebolab/density.hpp"
#include "chebolab/error.hpp"
#include "chebolab/group_library.hpp"
#include "chebolab/io.hpp"
#include "chebolab/localglobal.hpp"
#include "chebolab/orbitgen.hpp"

namespace fs = std::filesystem;
using namespace chebo;

namespace {

enum Exit { kPass = 0, kUsage = 1, kViolation = 2, kTolerance = 3 };

// --- argument helpers ---

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream cell(item);
    T v{};
    if (!(cell >> v) || !(cell >> std::ws).eof())
      throw Error(ErrorCode::ConfigInvalid, std::string("bad ") + what + " entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Mat2 parse_matrix(const std::string& text) {
  const auto v = parse_list<std::int64_t>(text, "matrix");
  if (v.size() != 4) throw Error(ErrorCode::ConfigInvalid, "matrix needs four entries a,b,c,d");
  return make_mat2(v[0], v[1], v[2], v[3]);
}

LengthScheme parse_scheme(const std::string& s) {
  if (s == "prime") return LengthScheme::PrimeNumber;
  if (s == "geometric") return LengthScheme::Geometric;
  throw Error(ErrorCode::ConfigInvalid, "unknown length scheme '" + s + "'");
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + (dir / name).string());
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + (dir / name).string());
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  return in;
}

/// Machine-readable report for an invariant violation; returns exit code 2.
int violation(const fs::path& dir, const std::string& what, const Json& data) {
  const Json report{{"violation", what}, {"data", data}};
  write_file(dir, "violation.json", report.dump(2) + "\n");
  std::cerr << report.dump() << '\n';
  return kViolation;
}

// --- knot datasets ---

struct DatasetOptions {
  std::string family = "cat";
  std::string matrix = "2,1,1,1";
  int numax = 8;
  int maxlen = 12;
  bool include_origin = false;
  std::string input;
};

struct Dataset {
  std::string family;
  Mat2 matrix = make_mat2(2, 1, 1, 1);
  std::vector<CatOrbit> cat;
  std::vector<GeodesicClass> modular;
  std::vector<OrbitRecord> records;
  bool imported = false;

  std::size_t size() const { return family == "cat" ? cat.size() : modular.size(); }
};

void add_dataset_options(CLI::App* cmd, DatasetOptions& o, bool with_input) {
  cmd->add_option("--family", o.family, "cat, modular" + std::string(with_input ? " or import" : ""));
  cmd->add_option("--matrix", o.matrix, "cat monodromy as a,b,c,d");
  cmd->add_option("--numax", o.numax, "largest cat period");
  cmd->add_option("--maxlen", o.maxlen, "largest modular word length");
  cmd->add_flag("--include-origin", o.include_origin, "keep the fixed point at the origin");
  if (with_input) cmd->add_option("--input", o.input, "orbit JSON-lines file for --family import");
}

Dataset load_dataset(const DatasetOptions& o) {
  Dataset d;
  d.matrix = parse_matrix(o.matrix);
  if (o.family == "cat") {
    d.family = "cat";
    d.cat = cat_primitive_orbits(d.matrix, o.numax, CatOrbitOptions{o.include_origin});
    d.records = orbit_records(d.cat, d.matrix);
  } else if (o.family == "modular") {
    d.family = "modular";
    d.modular = modular_geodesics(o.maxlen);
    d.records = orbit_records(d.modular);
  } else if (o.family == "import") {
    if (o.input.empty()) throw Error(ErrorCode::ConfigInvalid, "--family import needs --input");
    auto in = open_input(o.input);
    d.records = read_orbits_jsonl(in);
    d.imported = true;
    d.family = d.records.front().family;
    for (const auto& r : d.records) {
      if (r.family != d.family) throw Error(ErrorCode::ConfigInvalid, "orbit stream mixes families");
      if (d.family == "cat")
        d.cat.push_back(to_cat_orbit(r));
      else
        d.modular.push_back(to_geodesic(r));
    }
  } else {
    throw Error(ErrorCode::ConfigInvalid, "unknown family '" + o.family + "'");
  }
  if (d.size() == 0) throw Error(ErrorCode::DatasetEmpty, "no knots in the dataset");
  return d;
}

// --- quotients ---

struct QuotientOptions {
  std::int64_t mod = 2;
  std::string group_file;
  std::string images;
};

void add_quotient_options(CLI::App* cmd, QuotientOptions& o) {
  cmd->add_option("--mod", o.mod, "cat: (Z/m)^2 x| Z/r; modular: SL2(F_2) or PSL2(F_p)");
  cmd->add_option("--group", o.group_file, "group JSON file {label, order, table}");
  cmd->add_option("--images", o.images, "generator images: x,y,t (cat) or sigma,tau (modular)");
}

QuotientMap load_quotient(const QuotientOptions& o, const Dataset& d) {
  if (!o.group_file.empty()) {
    auto in = open_input(o.group_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ConfigInvalid, std::string("group file: ") + e.what());
    }
    QuotientMap q;
    q.target = std::make_shared<const FiniteGroup>(group_from_json(j));
    q.generator_images = parse_list<int>(o.images, "image");
    if (d.family == "cat") {
      q.source_model = SourceModel::SemidirectZ2Z;
      q.monodromy = d.matrix;
    } else {
      q.source_model = SourceModel::FreeProdZ2Z3;
    }
    for (int x : q.generator_images)
      if (x < 0 || x >= q.target->order()) throw Error(ErrorCode::ConfigInvalid, "image outside the group");
    if (!satisfies_relations(q)) throw Error(ErrorCode::ConfigInvalid, "images do not satisfy the relations");
    return q;
  }
  if (d.family == "cat") return semidirect_quotient(o.mod, d.matrix).map;
  if (!is_prime(o.mod)) throw Error(ErrorCode::NotPrime, std::to_string(o.mod) + " is not prime");
  return modular_reduction(special_linear(o.mod, o.mod > 2));
}

std::vector<int> tags_of(const Dataset& d, const QuotientMap& q) {
  return d.family == "cat" ? frobenius_tags(d.cat, q) : frobenius_tags(d.modular, q);
}

LengthAssignment lengths_for(const Dataset& d, LengthScheme scheme) {
  if (d.imported) return lengths_of(d.records, scheme);
  return d.family == "cat" ? assign_lengths(d.cat, scheme, d.matrix) : assign_lengths(d.modular, scheme);
}

// --- subcommands ---

int cmd_orbits(const DatasetOptions& o, const fs::path& out) {
  const auto d = load_dataset(o);
  std::ostringstream jsonl;
  write_orbits_jsonl(jsonl, d.records);
  write_file(out, "orbits.jsonl", jsonl.str());
  Json summary{{"family", d.family}, {"knots", d.size()}};
  if (d.family == "cat") {
    std::vector<std::int64_t> counts;
    std::vector<std::size_t> per_period(static_cast<std::size_t>(o.numax) + 1, 0);
    for (int nu = 1; nu <= o.numax; ++nu) counts.push_back(cat_fixed_point_count(d.matrix, nu));
    for (const auto& c : d.cat) ++per_period[static_cast<std::size_t>(c.period)];
    per_period.erase(per_period.begin());
    summary["fixed_point_counts"] = counts;
    summary["orbits_per_period"] = per_period;
  } else {
    std::vector<std::size_t> per_length(static_cast<std::size_t>(o.maxlen) + 1, 0);
    for (const auto& g : d.modular) ++per_length[static_cast<std::size_t>(g.letters())];
    per_length.erase(per_length.begin());
    summary["words_per_length"] = per_length;
  }
  std::cout << Json{{"summary", summary}}.dump() << '\n';
  return kPass;
}

struct DensityOptions {
  std::string scheme = "prime";
  std::string s_grid = "1.2,1.1,1.05,1.02";
  std::size_t skip = 0;
  double tolerance = kDensityTolerance;
  bool check = false;
};

int cmd_density(const DatasetOptions& o, const QuotientOptions& qo, const DensityOptions& opt, const fs::path& out) {
  const auto d = load_dataset(o);
  const auto q = load_quotient(qo, d);
  const auto tags = tags_of(d, q);
  const auto lengths = lengths_for(d, parse_scheme(opt.scheme));
  const auto report = density_report(*q.target, tags, lengths, parse_list<double>(opt.s_grid, "s"), opt.skip);

  std::ostringstream csv, series;
  write_density_csv(csv, report);
  std::vector<RunningDensity> running;
  for (std::size_t c = 0; c < report.per_class.size(); ++c)
    running.push_back(natural_density(tags, static_cast<int>(c), opt.skip));
  write_density_series_csv(series, running);
  Json j = to_json(report);
  const auto cmp = density_equivalence_report(report);
  j["max_natural_dirichlet_discrepancy"] = cmp.max_discrepancy;
  j["tolerance"] = opt.tolerance;
  if (report.scheme == LengthScheme::Geometric)
    j["note"] = "natural/Dirichlet equivalence is not asserted for GEOMETRIC lengths";
  write_file(out, "density.csv", csv.str());
  write_file(out, "density.json", j.dump(2) + "\n");
  write_file(out, "density_series.csv", series.str());

  double expected_sum = 0;
  std::size_t count_sum = 0;
  for (const auto& c : report.per_class) {
    expected_sum += c.expected;
    count_sum += c.count;
  }
  if (count_sum != report.total_knots || std::abs(expected_sum - 1.0) > 1e-9)
    return violation(out, "density report counts or expected values do not sum correctly",
                     {{"count_sum", count_sum}, {"expected_sum", expected_sum}});
  std::cout << "density: " << report.quotient_label << ", " << report.total_knots
            << " knots, max |natural - |C|/|G|| = " << format_real(report.max_deviation_from_expected())
            << ", max |natural - Dirichlet| = " << format_real(cmp.max_discrepancy) << '\n';
  if (opt.check && (report.max_deviation_from_expected() > opt.tolerance || cmp.max_discrepancy > opt.tolerance)) {
    std::cerr << "TOLERANCE_FAIL: density outside tolerance " << format_real(opt.tolerance) << '\n';
    return kTolerance;
  }
  return kPass;
}

struct ZetaOptions {
  std::string scheme = "prime";
  std::string s_values = "1.05,1.1,1.2";
  std::size_t truncation = 0;
  std::size_t skip = 0;
};

int cmd_zeta(const DatasetOptions& o, const QuotientOptions& qo, const ZetaOptions& opt, const fs::path& out) {
  const auto d = load_dataset(o);
  const auto q = load_quotient(qo, d);
  const auto tags = tags_of(d, q);
  const auto lengths = lengths_for(d, parse_scheme(opt.scheme));
  const std::size_t truncation = opt.truncation == 0 ? lengths.size() : opt.truncation;
  const auto classes = conjugacy_classes(*q.target);
  Json rows = Json::array();
  double worst = 0;
  for (double s : parse_list<double>(opt.s_values, "s")) {
    const double whole = zeta_partial(lengths, s, truncation, opt.skip);
    Json per_class = Json::array();
    double product = 1;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const double z = zeta_relative(lengths, tags, static_cast<int>(c), s, truncation, opt.skip);
      product *= z;
      per_class.push_back({{"representative", classes[c].representative}, {"zeta_relative", z}});
    }
    const double err = std::abs(product - whole) / whole;
    worst = std::max(worst, err);
    rows.push_back({{"s", s}, {"zeta_partial", whole}, {"per_class", per_class}, {"partition_relative_error", err}});
  }
  const Json j{{"quotient_label", q.target->label()},
               {"scheme", to_string(lengths.scheme)},
               {"truncation", truncation},
               {"skip_first", opt.skip},
               {"values", rows}};
  write_file(out, "zeta.json", j.dump(2) + "\n");
  if (worst > 1e-12) return violation(out, "zeta partition identity", {{"max_relative_error", worst}});
  std::cout << "zeta: partition identity holds, max relative error " << format_real(worst) << '\n';
  return kPass;
}

struct SplitOptions {
  std::string group_file;
  std::string library_label;
  int mu = 0;
  int lambda = 0;
  std::string subgroup;
  std::string normal;
  double length = 1.0;
};

std::shared_ptr<const FiniteGroup> load_group(const std::string& file, const std::string& label) {
  if (!file.empty()) {
    auto in = open_input(file);
    try {
      return std::make_shared<const FiniteGroup>(group_from_json(Json::parse(in)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ConfigInvalid, std::string("group file: ") + e.what());
    }
  }
  for (const auto& g : group_library())
    if (g->label() == label) return g;
  throw Error(ErrorCode::ConfigInvalid, "no library group labelled '" + label + "'");
}

ElementSet parse_set(const std::string& text) {
  auto v = parse_list<int>(text, "element");
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int cmd_split(const SplitOptions& opt, const fs::path& out) {
  const auto g = load_group(opt.group_file, opt.library_label);
  const auto p = make_peripheral(g, opt.mu, opt.lambda);
  auto data = splitting_data(p);
  if (!opt.subgroup.empty()) data.components = subcover_components(p, parse_set(opt.subgroup));
  Json j = to_json(data);
  j["group"] = g->label();
  j["mu"] = opt.mu;
  j["lambda"] = opt.lambda;
  j["totally_split"] = is_totally_split(p);
  j["induced_length"] = {{"base", opt.length},
                         {"DECOMP_ORDER", induced_length(opt.length, data, LengthConvention::DecompOrder)},
                         {"COVERING_DEGREE", induced_length(opt.length, data, LengthConvention::CoveringDegree)}};
  if (!opt.normal.empty()) {
    const auto t = multiplicativity_check(p, parse_set(opt.normal));
    j["tower"] = {{"f_total", t.f_total}, {"f_quotient", t.f_quotient}, {"f_intermediate", t.f_intermediate},
                  {"holds", t.holds}};
    if (!t.holds) {
      write_file(out, "splitting.json", j.dump(2) + "\n");
      return violation(out, "residue degree multiplicativity", j["tower"]);
    }
  }
  write_file(out, "splitting.json", j.dump(2) + "\n");
  if (data.e * data.f * data.g != g->order())
    return violation(out, "e f g = |G|", {{"e", data.e}, {"f", data.f}, {"g", data.g}});
  std::cout << "split: e=" << data.e << " f=" << data.f << " g=" << data.g << '\n';
  return kPass;
}

int cmd_sweep(int order_bound, const fs::path& out) {
  const auto r = split_rigidity_sweep(order_bound);
  std::ostringstream csv;
  write_sweep_csv(csv, r);
  write_file(out, "sweep.csv", csv.str());
  std::cout << "sweep: " << r.groups << " groups, " << r.rows.size() << " pairs, " << r.counterexamples
            << " counterexamples\n";
  if (r.counterexamples > 0)
    return violation(out, "split-set rigidity", {{"counterexamples", r.counterexamples}});
  return kPass;
}

struct LgpOptions {
  int trials = 200;
  int n = 50;
  int bound = 10;
  std::int64_t p = 3;
  int s_size = 3;
  std::uint64_t seed = 1;
  double threshold = 0.9;
  std::string matrix_file;
  std::string s_list;
  bool check = false;
};

int cmd_lgp(const LgpOptions& opt, const fs::path& out) {
  Json j;
  if (!opt.matrix_file.empty()) {
    auto in = open_input(opt.matrix_file);
    const LinkingMatrix lambda(read_matrix_csv(in));
    const auto s = parse_list<int>(opt.s_list, "index");
    const auto surj = surjectivity_check(lambda, opt.p, s);
    j = {{"scope", kLocalGlobalScope},
         {"seed", opt.seed},
         {"p", opt.p},
         {"n", lambda.n()},
         {"S", s},
         {"rank", surj.rank},
         {"verdict", surj.surjective ? "SURJECTIVE" : "NOT_SURJECTIVE"},
         {"kernel_dim", injectivity_check(lambda, opt.p, s)},
         {"reciprocity", to_json(reciprocity_check(lambda, opt.p, 100, opt.seed))}};
    write_file(out, "lgp.json", j.dump(2) + "\n");
    if (j["reciprocity"]["violations"] != 0) return violation(out, "reciprocity", j["reciprocity"]);
    std::cout << "lgp: rank " << surj.rank << ", " << (surj.surjective ? "surjective" : "not surjective") << '\n';
    return kPass;
  }
  const auto s = local_global_trials(opt.trials, opt.n, opt.bound, opt.p, opt.s_size, opt.seed);
  j = to_json(s);
  j["p"] = opt.p;
  j["n"] = opt.n;
  j["bound"] = opt.bound;
  j["reciprocity"] = to_json(reciprocity_check(synthetic_linking_model(opt.n, opt.bound, opt.seed), opt.p, 100, opt.seed));
  j["orthogonality"] = to_json(unramified_orthogonality(opt.p));
  write_file(out, "lgp.json", j.dump(2) + "\n");
  if (j["reciprocity"]["violations"] != 0) return violation(out, "reciprocity", j["reciprocity"]);
  if (!unramified_orthogonality(opt.p).holds()) return violation(out, "unramified orthogonality", j["orthogonality"]);
  std::cout << "lgp: injective " << s.injective << "/" << s.trials << ", surjective " << s.surjective << "/"
            << s.trials << ", unlink surjective " << s.unlink_surjective << "/" << s.trials << '\n';
  const double need = opt.threshold * s.trials;
  if (opt.check && (s.injective < need || s.surjective < need || s.unlink_surjective > 0)) {
    std::cerr << "TOLERANCE_FAIL: local-global rates below " << format_real(opt.threshold) << '\n';
    return kTolerance;
  }
  return kPass;
}

int cmd_verify(const std::string& criteria, double tolerance, const fs::path& out) {
  std::vector<int> ids;
  if (criteria.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  else
    ids = parse_list<int>(criteria, "criterion");
  AcceptanceConfig config;
  config.density_tolerance = tolerance;
  bool violated = false, tolerance_failed = false;
  Json results = Json::array();
  for (int id : ids) {
    const auto r = run_criterion(id, config);
    std::cout << format_result(r) << std::endl;
    results.push_back({{"id", r.id}, {"verdict", r.verdict()}, {"detail", r.detail}});
    if (!r.passed) (r.statistical ? tolerance_failed : violated) = true;
  }
  write_file(out, "verify.json", Json{{"tolerance", tolerance}, {"results", results}}.dump(2) + "\n");
  return violated ? kViolation : tolerance_failed ? kTolerance : kPass;
}

// --- configuration file ---

// Expands `--config FILE` into `--key value` pairs placed right after the
// subcommand, so explicit flags (parsed later, last one wins) override them.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> from_file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      continue;
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot read config " + path);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::ConfigInvalid, path + ":" + std::to_string(number) + ": expected key=value");
      auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
      };
      const auto key = trim(line.substr(0, eq));
      const auto value = trim(line.substr(eq + 1));
      if (key.empty()) throw Error(ErrorCode::ConfigInvalid, path + ":" + std::to_string(number) + ": empty key");
      if (value == "true") {
        from_file.push_back("--" + key);
      } else if (value != "false") {
        from_file.push_back("--" + key);
        from_file.push_back(value);
      }
    }
    --i;
  }
  std::size_t at = 0;
  while (at < args.size() && args[at].rfind("-", 0) == 0) {
    if (args[at] == "--out" && at + 1 < args.size()) ++at;
    ++at;
  }
  if (at < args.size()) ++at;  // after the subcommand name
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), from_file.begin(), from_file.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chebolab: Frobenius statistics and local-global checks for link families"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string out_dir = ".";
  std::string config_path;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--config", config_path, "key=value file; command-line flags take precedence");

  DatasetOptions dataset;
  QuotientOptions quotient;
  DensityOptions density;
  ZetaOptions zeta;
  SplitOptions split;
  LgpOptions lgp;
  int sweep_bound = 16;
  std::string criteria;
  double verify_tolerance = kDensityTolerance;

  auto* orbits_cmd = app.add_subcommand("orbits", "write the orbit stream as JSON-lines");
  add_dataset_options(orbits_cmd, dataset, false);

  auto* density_cmd = app.add_subcommand("density", "per-class natural and Dirichlet densities");
  add_dataset_options(density_cmd, dataset, true);
  add_quotient_options(density_cmd, quotient);
  density_cmd->add_option("--scheme", density.scheme, "prime or geometric");
  density_cmd->add_option("--s-grid", density.s_grid, "decreasing s values > 1");
  density_cmd->add_option("--skip", density.skip, "knots excluded from the front");
  density_cmd->add_option("--tolerance", density.tolerance, "absolute tolerance for --check");
  density_cmd->add_flag("--check", density.check, "exit 3 when densities miss the tolerance");

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta partial products and the class partition identity");
  add_dataset_options(zeta_cmd, dataset, true);
  add_quotient_options(zeta_cmd, quotient);
  zeta_cmd->add_option("--scheme", zeta.scheme, "prime or geometric");
  zeta_cmd->add_option("--s", zeta.s_values, "s values > 1");
  zeta_cmd->add_option("--truncation", zeta.truncation, "knots used (0 = all)");
  zeta_cmd->add_option("--skip", zeta.skip, "knots excluded from the front");

  auto* split_cmd = app.add_subcommand("split", "decomposition and inertia data for one peripheral pair");
  split_cmd->add_option("--group", split.group_file, "group JSON file");
  split_cmd->add_option("--library", split.library_label, "library group label, e.g. S4");
  split_cmd->add_option("--mu", split.mu, "meridian image");
  split_cmd->add_option("--lambda", split.lambda, "longitude image");
  split_cmd->add_option("--subgroup", split.subgroup, "H as comma-separated elements");
  split_cmd->add_option("--normal", split.normal, "N for the tower check G -> G/N");
  split_cmd->add_option("--length", split.length, "base length for induced lengths");

  auto* sweep_cmd = app.add_subcommand("sweep", "split-set rigidity over the group library");
  sweep_cmd->add_option("--order-bound", sweep_bound, "largest group order (<= 64)");

  auto* lgp_cmd = app.add_subcommand("lgp", "local-global experiments over F_p");
  lgp_cmd->add_option("--trials", lgp.trials);
  lgp_cmd->add_option("--n", lgp.n, "knots per synthetic matrix");
  lgp_cmd->add_option("--bound", lgp.bound, "entries uniform in [-bound, bound]");
  lgp_cmd->add_option("--p", lgp.p, "prime");
  lgp_cmd->add_option("--s-size", lgp.s_size, "|S|");
  lgp_cmd->add_option("--seed", lgp.seed);
  lgp_cmd->add_option("--threshold", lgp.threshold, "success rate required by --check");
  lgp_cmd->add_option("--matrix", lgp.matrix_file, "linking matrix CSV instead of synthetic trials");
  lgp_cmd->add_option("--S", lgp.s_list, "0-based indices for --matrix");
  lgp_cmd->add_flag("--check", lgp.check, "exit 3 when rates miss the threshold");

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");
  verify_cmd->add_option("--criteria", criteria, "comma-separated ids (default all)");
  verify_cmd->add_option("--tolerance", verify_tolerance, "density tolerance");

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const fs::path out = out_dir;
    if (*orbits_cmd) return cmd_orbits(dataset, out);
    if (*density_cmd) return cmd_density(dataset, quotient, density, out);
    if (*zeta_cmd) return cmd_zeta(dataset, quotient, zeta, out);
    if (*split_cmd) return cmd_split(split, out);
    if (*sweep_cmd) return cmd_sweep(sweep_bound, out);
    if (*lgp_cmd) return cmd_lgp(lgp, out);
    if (*verify_cmd) return cmd_verify(criteria, verify_tolerance, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
