#include "chebolab/localglobal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "chebolab/error.hpp"

namespace chebo {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

void require_indices(Eigen::Index n, std::span<const int> s) {
  for (int i : s)
    if (i < 0 || i >= n)
      throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
}

// Mixes the trial number into the base seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

LinkingMatrix::LinkingMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw Error(ErrorCode::InvalidArgument, "linking matrix must be square");
  if (entries_ != entries_.transpose()) throw Error(ErrorCode::InvalidArgument, "linking matrix must be symmetric");
  if ((entries_.diagonal().array() != 0).any())
    throw Error(ErrorCode::InvalidArgument, "linking matrix must have zero diagonal");
}

LinkingMatrix synthetic_linking_model(int n, int bound, std::uint64_t seed) {
  if (n < 1 || bound < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and bound >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> entry(-bound, bound);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
  return LinkingMatrix(std::move(m));
}

IntMatrix restriction_map(const LinkingMatrix& lambda, std::int64_t p, std::span<const int> s) {
  require_prime(p);
  require_indices(lambda.n(), s);
  IntMatrix r = IntMatrix::Zero(2 * static_cast<Eigen::Index>(s.size()), lambda.n());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(2 * k);
    r(row, s[k]) = 1 % p;
    r.row(row + 1) = lambda.entries().row(s[k]).unaryExpr([p](std::int64_t x) { return mod(x, p); });
  }
  return r;
}

Eigen::Index injectivity_check(const LinkingMatrix& lambda, std::int64_t p, std::span<const int> excluded) {
  require_prime(p);
  require_indices(lambda.n(), excluded);
  std::vector<int> s;
  for (int i = 0; i < lambda.n(); ++i)
    if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) s.push_back(i);
  return lambda.n() - rank_mod_p(restriction_map(lambda, p, s), p);
}

SurjectivityResult surjectivity_check(const LinkingMatrix& lambda, std::int64_t p, std::span<const int> s) {
  const IntMatrix r = restriction_map(lambda, p, s);
  SurjectivityResult out;
  out.rank = r.rows() == 0 ? 0 : rank_mod_p(r, p);
  out.surjective = out.rank == r.rows();
  return out;
}

std::int64_t local_pairing(LocalPair x, LocalPair y, std::int64_t p) { return mod(x.a * y.b - x.b * y.a, p); }

std::int64_t reciprocity_defect(const IntMatrix& raw, std::int64_t p, const IntVector& phi, const IntVector& psi) {
  const IntVector lphi = (raw * phi).unaryExpr([p](std::int64_t x) { return mod(x, p); });
  const IntVector lpsi = (raw * psi).unaryExpr([p](std::int64_t x) { return mod(x, p); });
  std::int64_t total = 0;
  for (Eigen::Index i = 0; i < raw.rows(); ++i)
    total = mod(total + local_pairing({phi(i), lphi(i)}, {psi(i), lpsi(i)}, p), p);
  return total;
}

ReciprocityReport reciprocity_check(const LinkingMatrix& lambda, std::int64_t p, int trials, std::uint64_t seed) {
  require_prime(p);
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
  ReciprocityReport report{p, lambda.n(), trials, seed, 0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> digit(0, p - 1);
  IntVector phi(lambda.n()), psi(lambda.n());
  for (int t = 0; t < trials; ++t) {
    for (Eigen::Index i = 0; i < lambda.n(); ++i) {
      phi(i) = digit(rng);
      psi(i) = digit(rng);
    }
    if (reciprocity_defect(lambda.entries(), p, phi, psi) != 0) ++report.violations;
  }
  return report;
}

OrthogonalityReport unramified_orthogonality(std::int64_t p) {
  require_prime(p);
  OrthogonalityReport r;
  r.p = p;
  r.self_orthogonal = true;
  r.complement_equals = true;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b) {
      const bool unramified = a == 0;
      r.unramified_size += unramified;
      bool orthogonal_to_all = true;
      for (std::int64_t b2 = 0; b2 < p; ++b2) {
        const bool zero = local_pairing({a, b}, {0, b2}, p) == 0;
        if (unramified && !zero) r.self_orthogonal = false;
        orthogonal_to_all = orthogonal_to_all && zero;
      }
      r.complement_size += orthogonal_to_all;
      if (orthogonal_to_all != unramified) r.complement_equals = false;
    }
  return r;
}

double ResidueTable::frequency(std::int64_t r) const {
  return total == 0 ? 0.0 : static_cast<double>(counts[static_cast<std::size_t>(mod(r, modulus))]) / total;
}

double ResidueTable::max_deviation() const {
  double worst = 0;
  for (std::int64_t r = 0; r < modulus; ++r)
    worst = std::max(worst, std::abs(frequency(r) - 1.0 / static_cast<double>(modulus)));
  return worst;
}

ResidueTable linking_mod_distribution(std::span<const std::int64_t> values, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 1");
  ResidueTable t;
  t.modulus = n;
  t.counts.assign(static_cast<std::size_t>(n), 0);
  for (auto v : values) ++t.counts[static_cast<std::size_t>(mod(v, n))];
  t.total = values.size();
  return t;
}

LgpSummary local_global_trials(int trials, int n, int bound, std::int64_t p, int s_size, std::uint64_t seed) {
  require_prime(p);
  if (trials < 1 || s_size < 0 || s_size > n)
    throw Error(ErrorCode::InvalidArgument, "need trials >= 1 and 0 <= |S| <= n");
  LgpSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  const LinkingMatrix unlink(IntMatrix::Zero(n, n));
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  for (int t = 0; t < trials; ++t) {
    LgpExperiment e;
    e.seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    e.p = p;
    e.n = n;
    const auto lambda = synthetic_linking_model(n, bound, e.seed);
    std::mt19937_64 rng(e.seed ^ 0x5bd1e995ULL);
    std::vector<int> pool = all;
    for (int k = 0; k < s_size; ++k) {
      std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(k), pool.size() - 1);
      std::swap(pool[static_cast<std::size_t>(k)], pool[pick(rng)]);
    }
    e.s.assign(pool.begin(), pool.begin() + s_size);
    std::sort(e.s.begin(), e.s.end());
    const auto surj = surjectivity_check(lambda, p, e.s);
    e.rank = surj.rank;
    e.surjective = surj.surjective;
    e.kernel_dim = injectivity_check(lambda, p, e.s);
    e.injective = e.kernel_dim == 0;
    e.unlink_surjective = surjectivity_check(unlink, p, e.s).surjective;
    summary.injective += e.injective;
    summary.surjective += e.surjective;
    summary.unlink_surjective += e.unlink_surjective;
    summary.experiments.push_back(std::move(e));
  }
  return summary;
}

}  // namespace chebo
