#include "chebolab/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chebolab/error.hpp"

namespace chebo {

namespace {

void require_s(double s) {
  if (!(s > 1.0)) throw Error(ErrorCode::SOutOfRange, "s must exceed 1, got " + std::to_string(s));
}

void require_range(const LengthAssignment& assignment, std::size_t begin, std::size_t end) {
  if (end > assignment.size() || begin > end)
    throw Error(ErrorCode::IndexOutOfRange, "truncation " + std::to_string(end) + " exceeds " +
                                                std::to_string(assignment.size()) + " enumerated knots");
}

void require_tags(const LengthAssignment& assignment, std::span<const int> class_tags) {
  if (class_tags.size() != assignment.size())
    throw Error(ErrorCode::MismatchedClasses, "class tags and length assignment differ in size");
}

// Least-squares line through (s - 1, ratio); returns {value at s = 1, slope}.
std::pair<double, double> extrapolate(const std::vector<double>& s_grid, const std::vector<double>& ratios) {
  const std::size_t n = s_grid.size();
  if (n == 1) return {ratios[0], 0.0};
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += s_grid[i] - 1.0;
    my += ratios[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = s_grid[i] - 1.0 - mx;
    sxx += dx * dx;
    sxy += dx * (ratios[i] - my);
  }
  const double slope = sxy / sxx;
  return {my - slope * mx, slope};
}

std::vector<double> dirichlet_ratios(const LengthAssignment& assignment, std::span<const char> subset,
                                     const std::vector<double>& s_grid, std::size_t end) {
  std::vector<double> out;
  out.reserve(s_grid.size());
  for (double s : s_grid) {
    CompensatedSum part, all;
    for (std::size_t i = 0; i < end; ++i) {
      const double w = std::exp(-s * assignment.lengths[i]);
      all.add(w);
      if (subset[i]) part.add(w);
    }
    out.push_back(all.value() > 0 ? part.value() / all.value() : 0.0);
  }
  return out;
}

}  // namespace

RunningDensity natural_density(std::span<const int> class_tags, int target_class, std::size_t skip_first) {
  if (class_tags.empty()) throw Error(ErrorCode::EmptyStream, "natural_density on an empty stream");
  RunningDensity out;
  out.nu_max = class_tags.size();
  out.series.reserve(class_tags.size());
  std::size_t hits = 0;
  for (std::size_t nu = 1; nu <= class_tags.size(); ++nu) {
    if (nu > skip_first && class_tags[nu - 1] == target_class) ++hits;
    out.series.push_back(static_cast<double>(hits) / static_cast<double>(nu));
  }
  out.final_value = out.series.back();
  return out;
}

CountingFunctions::CountingFunctions(const LengthAssignment& assignment, std::span<const int> class_tags) {
  require_tags(assignment, class_tags);
  entries_.reserve(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i)
    entries_.push_back({assignment.norms[i], assignment.lengths[i], class_tags[i]});
  std::stable_sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) { return a.norm < b.norm; });
}

std::size_t CountingFunctions::pi(double x) const {
  return static_cast<std::size_t>(
      std::upper_bound(entries_.begin(), entries_.end(), x, [](double v, const Entry& e) { return v < e.norm; }) -
      entries_.begin());
}

std::size_t CountingFunctions::pi(double x, int cls) const {
  std::size_t count = 0;
  for (const auto& e : entries_) {
    if (e.norm > x) break;
    count += e.cls == cls;
  }
  return count;
}

double CountingFunctions::psi(double x) const { return psi_impl(x, -1); }
double CountingFunctions::psi(double x, int cls) const { return psi_impl(x, cls); }

double CountingFunctions::psi_impl(double x, int cls) const {
  CompensatedSum total;
  for (const auto& e : entries_) {
    if (e.norm > x) break;
    if (cls >= 0 && e.cls != cls) continue;
    // Largest n with N^n <= x; the log estimate is corrected against pow.
    auto n = static_cast<long>(std::floor(std::log(x) / std::log(e.norm)));
    while (n > 1 && std::pow(e.norm, static_cast<double>(n)) > x) --n;
    while (std::pow(e.norm, static_cast<double>(n + 1)) <= x) ++n;
    total.add(static_cast<double>(n) * e.length);
  }
  return total.value();
}

std::vector<CountingFunctions::Jump> CountingFunctions::psi_jumps(double x_max, int cls) const {
  std::vector<Jump> out;
  for (const auto& e : entries_) {
    if (e.norm > x_max) break;
    if (cls >= 0 && e.cls != cls) continue;
    for (double at = e.norm; at <= x_max; at *= e.norm) out.push_back({at, e.length, e.cls});
  }
  std::stable_sort(out.begin(), out.end(), [](const Jump& a, const Jump& b) { return a.at < b.at; });
  return out;
}

double mellin_psi(const CountingFunctions& f, double s, double x_max, int cls) {
  require_s(s);
  const auto jumps = f.psi_jumps(x_max, cls);
  // psi is constant on [jump_k, jump_{k+1}); integrate x^(-s-1) exactly on each piece.
  CompensatedSum total;
  double level = 0.0;
  for (std::size_t k = 0; k < jumps.size(); ++k) {
    level += jumps[k].weight;
    const double a = jumps[k].at;
    const double b = k + 1 < jumps.size() ? jumps[k + 1].at : x_max;
    if (b > a) total.add(level * (std::pow(a, -s) - std::pow(b, -s)));
  }
  return total.value();
}

double log_derivative_terms(const LengthAssignment& assignment, std::span<const int> class_tags, double s,
                            double x_max, int cls) {
  require_s(s);
  require_tags(assignment, class_tags);
  CompensatedSum total;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (cls >= 0 && class_tags[i] != cls) continue;
    const double l = assignment.lengths[i];
    for (double at = assignment.norms[i]; at <= x_max; at *= assignment.norms[i]) total.add(l * std::pow(at, -s));
  }
  return total.value();
}

double log_zeta_partial(const LengthAssignment& assignment, std::span<const int> class_tags, int cls, double s,
                        std::size_t begin, std::size_t end) {
  require_s(s);
  require_range(assignment, begin, end);
  if (cls >= 0) require_tags(assignment, class_tags);
  CompensatedSum total;
  for (std::size_t i = begin; i < end; ++i) {
    if (cls >= 0 && class_tags[i] != cls) continue;
    total.add(-std::log1p(-std::exp(-s * assignment.lengths[i])));
  }
  return total.value();
}

double zeta_partial(const LengthAssignment& assignment, double s, std::size_t truncation, std::size_t skip_first) {
  return std::exp(log_zeta_partial(assignment, {}, -1, s, std::min(skip_first, truncation), truncation));
}

double zeta_relative(const LengthAssignment& assignment, std::span<const int> class_tags, int cls, double s,
                     std::size_t truncation, std::size_t skip_first) {
  if (cls < 0) throw Error(ErrorCode::InvalidArgument, "class index must be non-negative");
  return std::exp(log_zeta_partial(assignment, class_tags, cls, s, std::min(skip_first, truncation), truncation));
}

DirichletEstimate dirichlet_density(const LengthAssignment& assignment, std::span<const char> subset,
                                    const std::vector<double>& s_grid) {
  if (s_grid.empty()) throw Error(ErrorCode::SOutOfRange, "empty s grid");
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    require_s(s_grid[i]);
    if (i > 0 && !(s_grid[i] < s_grid[i - 1]))
      throw Error(ErrorCode::SOutOfRange, "s grid must be strictly decreasing");
  }
  if (subset.size() != assignment.size())
    throw Error(ErrorCode::MismatchedClasses, "subset mask and length assignment differ in size");
  DirichletEstimate out;
  out.s_grid = s_grid;
  out.ratios = dirichlet_ratios(assignment, subset, s_grid, assignment.size());
  std::tie(out.extrapolated, out.slope) = extrapolate(s_grid, out.ratios);
  const auto half = dirichlet_ratios(assignment, subset, s_grid, assignment.size() / 2);
  out.truncation_sensitivity = std::abs(out.extrapolated - extrapolate(s_grid, half).first);
  return out;
}

double DensityReport::max_deviation_from_expected() const {
  double worst = 0.0;
  for (const auto& c : per_class) worst = std::max(worst, std::abs(c.natural_freq - c.expected));
  return worst;
}

DensityReport density_report(const FiniteGroup& g, std::span<const int> class_tags, const LengthAssignment& assignment,
                             const std::vector<double>& s_grid, std::size_t skip_first) {
  require_tags(assignment, class_tags);
  if (class_tags.size() <= skip_first) throw Error(ErrorCode::EmptyStream, "no knots beyond the skipped prefix");
  const auto classes = conjugacy_classes(g);
  DensityReport report;
  report.quotient_label = g.label();
  report.group_order = static_cast<std::size_t>(g.order());
  report.scheme = assignment.scheme;
  report.s_grid = s_grid;
  report.truncation = class_tags.size();
  report.skip_first = skip_first;
  report.total_knots = class_tags.size() - skip_first;

  LengthAssignment tail;
  tail.scheme = assignment.scheme;
  tail.lengths.assign(assignment.lengths.begin() + static_cast<std::ptrdiff_t>(skip_first), assignment.lengths.end());
  tail.norms.assign(assignment.norms.begin() + static_cast<std::ptrdiff_t>(skip_first), assignment.norms.end());

  for (std::size_t c = 0; c < classes.size(); ++c) {
    ClassDensity cd;
    cd.cls = classes[c];
    std::vector<char> mask(tail.size());
    for (std::size_t i = 0; i < tail.size(); ++i) {
      const int tag = class_tags[skip_first + i];
      if (tag < 0 || static_cast<std::size_t>(tag) >= classes.size())
        throw Error(ErrorCode::MismatchedClasses, "class tag " + std::to_string(tag) + " out of range");
      mask[i] = tag == static_cast<int>(c);
      cd.count += mask[i];
    }
    cd.natural_freq = static_cast<double>(cd.count) / static_cast<double>(report.total_knots);
    cd.dirichlet = dirichlet_density(tail, mask, s_grid);
    cd.expected = static_cast<double>(cd.cls.size()) / static_cast<double>(g.order());
    report.per_class.push_back(std::move(cd));
  }
  return report;
}

DensityComparison density_equivalence_report(const std::vector<double>& natural, const std::vector<double>& dirichlet) {
  if (natural.size() != dirichlet.size())
    throw Error(ErrorCode::MismatchedClasses, "natural and Dirichlet estimates cover different class lists");
  DensityComparison out{natural, dirichlet, {}, 0.0};
  for (std::size_t i = 0; i < natural.size(); ++i) {
    out.discrepancy.push_back(std::abs(natural[i] - dirichlet[i]));
    out.max_discrepancy = std::max(out.max_discrepancy, out.discrepancy.back());
  }
  return out;
}

DensityComparison density_equivalence_report(const DensityReport& report) {
  std::vector<double> natural, dirichlet;
  for (const auto& c : report.per_class) {
    natural.push_back(c.natural_freq);
    dirichlet.push_back(c.dirichlet.extrapolated);
  }
  return density_equivalence_report(natural, dirichlet);
}

}  // namespace chebo
