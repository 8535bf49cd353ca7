#include "chebolab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "chebolab/covers.hpp"
#include "chebolab/density.hpp"
#include "chebolab/error.hpp"
#include "chebolab/group_library.hpp"
#include "chebolab/io.hpp"
#include "chebolab/localglobal.hpp"
#include "chebolab/orbitgen.hpp"
#include "chebolab/reference.hpp"

namespace chebo {

namespace {

const Mat2 kCat = make_mat2(2, 1, 1, 1);

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

struct Run {
  std::string label;
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> tags;
  LengthAssignment lengths;
};

Run cat_run(int max_period) {
  const auto orbits = cat_primitive_orbits(kCat, max_period);
  const auto q = semidirect_quotient(2, kCat);
  return {"cat mod 2", q.map.target, frobenius_tags(orbits, q.map),
          assign_lengths(orbits, LengthScheme::PrimeNumber, kCat)};
}

Run modular_run(int max_len) {
  const auto knots = modular_geodesics(max_len);
  const auto target = special_linear(2, false);
  return {"modular mod 2", target.group, frobenius_tags(knots, modular_reduction(target)),
          assign_lengths(knots, LengthScheme::PrimeNumber)};
}

const DensityReport& modular_report() {
  static const DensityReport report = [] {
    const auto run = modular_run(18);
    return density_report(*run.group, run.tags, run.lengths);
  }();
  return report;
}

Outcome fixed_points(const AcceptanceConfig&) {
  const std::int64_t expected[] = {1, 5, 16, 45, 121};
  std::string detail;
  bool ok = true;
  for (int nu = 1; nu <= 5; ++nu) {
    const auto pts = cat_fixed_points(kCat, nu);
    const auto brute = reference::cat_fixed_points(kCat, nu);
    std::set<std::array<std::int64_t, 3>> ours;
    for (const auto& p : pts) ours.insert({p.x, p.y, p.den});
    const bool match = static_cast<std::int64_t>(pts.size()) == expected[nu - 1] &&
                       cat_fixed_point_count(kCat, nu) == expected[nu - 1] && ours == brute;
    ok = ok && match;
    detail += (nu > 1 ? "," : "counts ") + std::to_string(pts.size());
  }
  return {ok, detail};
}

Outcome class_frequencies(const DensityReport& r, double tolerance) {
  std::string detail;
  for (const auto& c : r.per_class)
    detail += (detail.empty() ? "" : "; ") + std::string("|C|=") + std::to_string(c.cls.size()) + " " +
              fmt("%.4f", c.natural_freq) + " vs " + fmt("%.4f", c.expected);
  const double worst = r.max_deviation_from_expected();
  return {worst <= tolerance, detail + "; max deviation " + fmt("%.4f", worst)};
}

Outcome chebotarev_cat(const AcceptanceConfig& config) {
  const auto run = cat_run(16);
  return class_frequencies(density_report(*run.group, run.tags, run.lengths), config.density_tolerance);
}

Outcome modular_identity(const AcceptanceConfig& config) {
  const auto& r = modular_report();
  const int identity = special_linear(2, false).group->identity();
  for (const auto& c : r.per_class)
    if (c.cls.contains(identity)) {
      const double dev = std::abs(c.natural_freq - 1.0 / 6.0);
      return {dev <= config.density_tolerance, "identity frequency " + fmt("%.4f", c.natural_freq) + " over " +
                                            std::to_string(r.total_knots) + " words, deviation " +
                                            fmt("%.4f", dev)};
    }
  return {false, "identity class not found"};
}

Outcome density_equivalence(const AcceptanceConfig& config) {
  const auto cmp = density_equivalence_report(modular_report());
  std::string detail;
  for (std::size_t i = 0; i < cmp.natural.size(); ++i)
    detail += (i ? "; " : "") + fmt("%.4f", cmp.natural[i]) + " vs " + fmt("%.4f", cmp.dirichlet[i]);
  return {cmp.max_discrepancy <= config.density_tolerance, detail + "; max discrepancy " + fmt("%.4f", cmp.max_discrepancy)};
}

Outcome partition_identity(const AcceptanceConfig&) {
  double worst = 0;
  for (const auto& run : {cat_run(12), modular_run(14)}) {
    const int classes = static_cast<int>(conjugacy_classes(*run.group).size());
    for (double s : {1.05, 1.1, 1.2})
      for (std::size_t skip : {std::size_t{0}, std::size_t{10}}) {
        double product = 1;
        for (int c = 0; c < classes; ++c)
          product *= zeta_relative(run.lengths, run.tags, c, s, run.lengths.size(), skip);
        const double whole = zeta_partial(run.lengths, s, run.lengths.size(), skip);
        worst = std::max(worst, std::abs(product - whole) / whole);
      }
  }
  return {worst <= 1e-12, "max relative error " + fmt("%.3g", worst)};
}

Outcome hilbert_identities(const AcceptanceConfig&) {
  std::size_t pairs = 0, failures = 0;
  for (const auto& g : library_up_to(24))
    for (int mu = 0; mu < g->order(); ++mu)
      for (int lambda = 0; lambda < g->order(); ++lambda) {
        if (!g->commute(mu, lambda)) continue;
        ++pairs;
        const auto d = splitting_data(PeripheralImage{g, mu, lambda});
        const bool ok = d.e * d.f * d.g == g->order() && static_cast<int>(d.inertia.size()) == d.e &&
                        static_cast<int>(d.decomposition.size()) == d.e * d.f &&
                        std::includes(d.decomposition.begin(), d.decomposition.end(), d.inertia.begin(),
                                      d.inertia.end());
        failures += !ok;
      }
  return {failures == 0, std::to_string(pairs) + " commuting pairs, " + std::to_string(failures) + " failures"};
}

Outcome multiplicativity(const AcceptanceConfig&) {
  std::size_t towers = 0, failures = 0;
  for (const auto& g : library_up_to(24)) {
    const auto ns = normal_subgroups(*g);
    for (int mu = 0; mu < g->order(); ++mu)
      for (int lambda = 0; lambda < g->order(); ++lambda) {
        if (!g->commute(mu, lambda)) continue;
        for (const auto& n : ns) {
          ++towers;
          failures += !multiplicativity_check(PeripheralImage{g, mu, lambda}, n).holds;
        }
      }
  }
  return {failures == 0, std::to_string(towers) + " towers, " + std::to_string(failures) + " failures"};
}

Outcome rigidity(const AcceptanceConfig&) {
  const auto r = split_rigidity_sweep(16);
  return {r.counterexamples == 0, std::to_string(r.groups) + " groups, " + std::to_string(r.rows.size()) +
                                      " pairs, " + std::to_string(r.counterexamples) + " counterexamples"};
}

Outcome reciprocity(const AcceptanceConfig&) {
  int violations = 0, configs = 0;
  for (std::int64_t p : {2, 3, 5})
    for (int n = 1; n <= 40; ++n) {
      ++configs;
      const auto lambda = synthetic_linking_model(n, 10, static_cast<std::uint64_t>(100 * p + n));
      violations += reciprocity_check(lambda, p, 100, static_cast<std::uint64_t>(n)).violations;
    }
  bool orth = true;
  for (std::int64_t p : {2, 3, 5, 7}) orth = orth && unramified_orthogonality(p).holds();
  return {violations == 0 && orth, std::to_string(configs) + " configurations x 100 pairs, " +
                                       std::to_string(violations) + " violations; orthogonality " +
                                       (orth ? "holds" : "fails") + " for p in {2,3,5,7}"};
}

Outcome local_global(const AcceptanceConfig&) {
  const auto s = local_global_trials(200, 50, 10, 3, 3, 20240601);
  const bool ok = s.injective >= 180 && s.surjective >= 180 && s.unlink_surjective == 0;
  return {ok, "injective " + std::to_string(s.injective) + "/200, surjective " + std::to_string(s.surjective) +
                  "/200, unlink surjective " + std::to_string(s.unlink_surjective) + "/200"};
}

Outcome rademacher_words(const AcceptanceConfig&) {
  std::size_t words = 0, failures = 0;
  const Mat2 r = make_mat2(1, 1, 0, 1), l = make_mat2(1, 0, 1, 1);
  for (int len = 2; len <= 10; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      if (bits == 0 || bits == (1u << len) - 1) continue;  // R^n and L^n are parabolic
      ++words;
      Mat2 m = Mat2::Identity();
      std::int64_t sum = 0;
      for (int i = 0; i < len; ++i) {
        const bool is_l = bits >> i & 1;
        m = m * (is_l ? l : r);
        sum += is_l ? -1 : 1;
      }
      // Rotate to R^a1 L^b1 ... form for the library routine.
      int start = 0;
      while (!((bits >> start & 1) == 0 && (bits >> ((start + len - 1) % len) & 1) == 1)) ++start;
      std::vector<int> exponents;
      int prev = -1;
      for (int i = 0; i < len; ++i) {
        const int letter = bits >> ((start + i) % len) & 1;
        if (letter == prev)
          ++exponents.back();
        else
          exponents.push_back(1);
        prev = letter;
      }
      const auto oracle = reference::rademacher_dedekind(m);
      failures += rademacher(exponents) != oracle || sum != oracle;
    }
  return {failures == 0, std::to_string(words) + " words, " + std::to_string(failures) + " mismatches"};
}

std::string deterministic_bundle() {
  std::ostringstream out;
  const auto run = modular_run(12);
  out << to_json(density_report(*run.group, run.tags, run.lengths)).dump() << '\n';
  write_orbits_jsonl(out, orbit_records(cat_primitive_orbits(kCat, 8), kCat));
  out << to_json(local_global_trials(20, 30, 10, 3, 3, 7)).dump() << '\n';
  out << to_json(reciprocity_check(synthetic_linking_model(20, 10, 5), 5, 50, 11)).dump() << '\n';
  write_sweep_csv(out, split_rigidity_sweep(8));
  return out.str();
}

Outcome determinism(const AcceptanceConfig&) {
  const auto first = deterministic_bundle();
  const auto second = deterministic_bundle();
  return {first == second, std::to_string(first.size()) + " bytes, " + (first == second ? "identical" : "different")};
}

struct Criterion {
  const char* title;
  double time_limit;
  bool statistical;
  Outcome (*check)(const AcceptanceConfig&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"cat fixed-point counts 1,5,16,45,121 against brute force", 1.0, false, fixed_points},
    {"cat orbits, period <= 16, in (Z/2)^2 x| Z/3: class frequencies within tolerance of |C|/12", 60.0, true, chebotarev_cat},
    {"modular mod 2, words <= 18: identity frequency within tolerance of 1/6", 60.0, true, modular_identity},
    {"modular mod 2: natural vs Dirichlet within tolerance per class", 0.0, true, density_equivalence},
    {"zeta partition identity to 1e-12, both families", 0.0, false, partition_identity},
    {"Hilbert identities over every commuting pair, order <= 24", 120.0, false, hilbert_identities},
    {"residue-degree multiplicativity over all towers, order <= 24", 0.0, false, multiplicativity},
    {"split-set rigidity sweep, order <= 16", 0.0, false, rigidity},
    {"reciprocity and unramified self-orthogonality", 0.0, false, reciprocity},
    {"local-global shadows on synthetic linking matrices", 0.0, true, local_global},
    {"Rademacher word sum equals Dedekind-sum value, length <= 10", 0.0, false, rademacher_words},
    {"repeated seeded runs are byte-identical", 0.0, false, determinism},
};

}  // namespace

std::string CriterionResult::verdict() const {
  if (passed) return "PASS";
  return statistical ? "TOLERANCE_FAIL" : "INVARIANT_VIOLATION";
}

CriterionResult run_criterion(int id, const AcceptanceConfig& config) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
  const auto& c = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.time_limit = c.time_limit;
  r.statistical = c.statistical;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto outcome = c.check(config);
    r.passed = outcome.passed;
    r.detail = outcome.detail;
  } catch (const Error& e) {
    r.passed = false;
    r.detail = std::string(to_string(e.code())) + ": " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.time_limit > 0 && r.seconds > r.time_limit) {
    r.passed = false;
    r.detail += "; exceeded " + fmt("%.0f", r.time_limit) + " s";
  }
  return r;
}

std::string format_result(const CriterionResult& r) {
  char head[32];
  std::snprintf(head, sizeof head, "%s [%2d] ", r.verdict().c_str(), r.id);
  return head + r.title + " (" + fmt("%.2f", r.seconds) + " s): " + r.detail;
}

}  // namespace chebo
