#pragma once

// Counting functions, natural and Dirichlet density estimators, and finite
// zeta partial products over an ordered knot sequence.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "chebolab/fingroup.hpp"
#include "chebolab/orbitgen.hpp"

namespace chebo {

/// Neumaier's variant of compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Default s values, approaching 1 from above.
inline const std::vector<double> kDefaultSGrid{1.2, 1.1, 1.05, 1.02};

/// Default absolute tolerance for statistical density checks.
inline constexpr double kDensityTolerance = 0.05;

struct RunningDensity {
  /// series[nu - 1] = #{skip < j <= nu : tag_j = C} / nu
  std::vector<double> series;
  double final_value = 0.0;
  std::size_t nu_max = 0;
};

/// Throws EMPTY_STREAM for an empty stream.
RunningDensity natural_density(std::span<const int> class_tags, int target_class, std::size_t skip_first = 0);

/// pi, pi_C, psi, psi_C as exact step functions of the knot norms.
class CountingFunctions {
 public:
  CountingFunctions(const LengthAssignment& assignment, std::span<const int> class_tags);

  std::size_t pi(double x) const;
  std::size_t pi(double x, int cls) const;
  /// sum over n >= 1 and knots with N^n <= x of the knot length
  double psi(double x) const;
  double psi(double x, int cls) const;

  struct Jump {
    double at;
    double weight;
    int cls;
  };
  /// Discontinuities of psi up to x_max, sorted by position.
  std::vector<Jump> psi_jumps(double x_max, int cls = -1) const;

 private:
  struct Entry {
    double norm;
    double length;
    int cls;
  };
  double psi_impl(double x, int cls) const;
  std::vector<Entry> entries_;  // sorted by norm
};

/// s * integral_1^x_max psi_C(x) x^(-s-1) dx, integrated exactly between jumps.
double mellin_psi(const CountingFunctions& f, double s, double x_max, int cls = -1);

/// -zeta'/zeta restricted to prime-power terms N^n <= x_max.
double log_derivative_terms(const LengthAssignment& assignment, std::span<const int> class_tags, double s,
                            double x_max, int cls = -1);

/// prod_{skip <= i < truncation} 1 / (1 - N_i^-s). Throws S_OUT_OF_RANGE for s <= 1.
double zeta_partial(const LengthAssignment& assignment, double s, std::size_t truncation, std::size_t skip_first = 0);

/// The same product restricted to knots tagged `cls`.
double zeta_relative(const LengthAssignment& assignment, std::span<const int> class_tags, int cls, double s,
                     std::size_t truncation, std::size_t skip_first = 0);

double log_zeta_partial(const LengthAssignment& assignment, std::span<const int> class_tags, int cls, double s,
                        std::size_t begin, std::size_t end);

struct DirichletEstimate {
  std::vector<double> s_grid;
  /// sum_{subset} N^-s / sum_{all} N^-s at each s
  std::vector<double> ratios;
  /// Least-squares line in (s - 1), evaluated at s = 1.
  double extrapolated = 0.0;
  double slope = 0.0;
  /// |extrapolated(full) - extrapolated(first half of the knots)|
  double truncation_sensitivity = 0.0;
};

/// `subset[i]` marks membership. Throws S_OUT_OF_RANGE unless the grid is
/// strictly decreasing with every s > 1.
DirichletEstimate dirichlet_density(const LengthAssignment& assignment, std::span<const char> subset,
                                    const std::vector<double>& s_grid = kDefaultSGrid);

struct ClassDensity {
  ConjClass cls;
  std::size_t count = 0;
  double natural_freq = 0.0;
  DirichletEstimate dirichlet;
  double expected = 0.0;
};

struct DensityReport {
  std::string quotient_label;
  std::size_t group_order = 0;
  LengthScheme scheme = LengthScheme::PrimeNumber;
  std::vector<double> s_grid;
  std::size_t total_knots = 0;
  std::size_t truncation = 0;
  std::size_t skip_first = 0;
  std::vector<ClassDensity> per_class;

  double max_deviation_from_expected() const;
};

/// Per-class counts over knots (skip_first, truncation], with natural
/// frequency count / total_knots and Dirichlet estimates over the same knots.
DensityReport density_report(const FiniteGroup& g, std::span<const int> class_tags, const LengthAssignment& assignment,
                             const std::vector<double>& s_grid = kDefaultSGrid, std::size_t skip_first = 0);

struct DensityComparison {
  std::vector<double> natural;
  std::vector<double> dirichlet;
  std::vector<double> discrepancy;
  double max_discrepancy = 0.0;
};

/// Throws MISMATCHED_CLASSES when the inputs cover different class lists.
DensityComparison density_equivalence_report(const std::vector<double>& natural, const std::vector<double>& dirichlet);
DensityComparison density_equivalence_report(const DensityReport& report);

}  // namespace chebo
