#pragma once

// Independent brute-force references used only by the test suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "chebolab/fingroup.hpp"
#include "chebolab/intmat.hpp"

namespace oracle {

using chebo::FiniteGroup;
using chebo::Mat2;

/// Symmetric group S_3 from composition of permutations of {0,1,2}.
inline FiniteGroup s3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> table;
  for (const auto& a : perms)
    for (const auto& b : perms) {
      std::vector<int> ab{a[b[0]], a[b[1]], a[b[2]]};
      table.push_back(static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin()));
    }
  return chebo::make_group(std::move(table), 6, "S3");
}

/// Class sizes from conjugating every x by every g.
inline std::multiset<std::size_t> class_sizes(const FiniteGroup& g) {
  std::set<std::set<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    std::set<int> c;
    for (int h = 0; h < g.order(); ++h) c.insert(g.mul(g.mul(h, x), g.inv(h)));
    classes.insert(c);
  }
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  return sizes;
}

/// Closure of gens under all pairwise products until stable.
inline std::set<int> closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> s{g.identity()};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

/// Normal subgroups as unions of classes closed under multiplication.
inline std::set<std::vector<int>> normal_subgroups_by_subsets(const FiniteGroup& g) {
  const auto classes = chebo::conjugacy_classes(g);
  std::vector<int> nonidentity;
  int id_class = -1;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].contains(g.identity()))
      id_class = static_cast<int>(i);
    else
      nonidentity.push_back(static_cast<int>(i));
  }
  std::set<std::vector<int>> out;
  const std::uint64_t count = std::uint64_t{1} << nonidentity.size();
  std::vector<char> in(g.order());
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::fill(in.begin(), in.end(), 0);
    std::vector<int> members(classes[id_class].members);
    for (std::size_t b = 0; b < nonidentity.size(); ++b)
      if (mask >> b & 1) members.insert(members.end(), classes[nonidentity[b]].members.begin(),
                                        classes[nonidentity[b]].members.end());
    if (g.order() % members.size() != 0) continue;
    for (int x : members) in[x] = 1;
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i)
      for (std::size_t j = 0; j < members.size() && closed; ++j) closed = in[g.mul(members[i], members[j])];
    if (!closed) continue;
    std::sort(members.begin(), members.end());
    out.insert(members);
  }
  return out;
}

inline Mat2 power(const Mat2& a, int k) {
  Mat2 r = Mat2::Identity();
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Multiplicative order of A mod m by direct iteration.
inline int order_mod(const Mat2& a, std::int64_t m) {
  Mat2 cur = a;
  for (int k = 1;; ++k) {
    bool identity = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) identity = identity && chebo::mod<std::int64_t>(cur(i, j) - (i == j), m) == 0;
    if (identity) return k;
    cur = (cur * a).unaryExpr([m](std::int64_t x) { return chebo::mod(x, m); });
  }
}

/// Points (a/N, b/N), N = |det(A^nu - I)|, with (A^nu - I)(a,b) = 0 mod N, as reduced triples.
inline std::set<std::array<std::int64_t, 3>> fixed_points_brute(const Mat2& a, int nu) {
  const Mat2 b = power(a, nu) - Mat2::Identity();
  const std::int64_t n = std::abs(b.determinant());
  std::set<std::array<std::int64_t, 3>> pts;
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      if (chebo::mod(b(0, 0) * x + b(0, 1) * y, n) == 0 && chebo::mod(b(1, 0) * x + b(1, 1) * y, n) == 0) {
        const std::int64_t g = std::gcd(std::gcd(x, y), n);
        pts.insert({x / g, y / g, n / g});
      }
  return pts;
}

/// Number of fixed points by solving the first congruence for y and testing the second.
inline std::int64_t fixed_point_count_congruence(const Mat2& a, int nu) {
  const Mat2 b = power(a, nu) - Mat2::Identity();
  const std::int64_t n = std::abs(b.determinant());
  const std::int64_t c = chebo::mod(b(0, 1), n);
  const std::int64_t g = std::gcd(c, n);
  const std::int64_t step = n / g;
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < n; ++x) {
    const std::int64_t rhs = chebo::mod<std::int64_t>(-b(0, 0) % n * x, n);
    if (rhs % g != 0) continue;
    const std::int64_t y0 =
        step == 1 ? 0 : static_cast<std::int64_t>(static_cast<__int128>(rhs / g) * chebo::inverse_mod(c / g, step) % step);
    for (std::int64_t t = 0; t < g; ++t) {
      const std::int64_t y = y0 + t * step;
      if (chebo::mod<std::int64_t>(static_cast<std::int64_t>((static_cast<__int128>(b(1, 0)) * x + static_cast<__int128>(b(1, 1)) * y) % n), n) == 0)
        ++count;
    }
  }
  return count;
}

/// Conjugation-invariant Rademacher function from the Dedekind-sum formula:
/// Psi(A) = (a+d)/c - 12 sign(c) s(a,|c|) - 3 sign(c(a+d)), and b/d when c = 0.
inline std::int64_t rademacher_dedekind(const Mat2& m) {
  const std::int64_t a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  auto sign = [](std::int64_t x) { return (x > 0) - (x < 0); };
  if (c == 0) return b * d;  // d = +-1
  const std::int64_t k = std::abs(c);
  // 4 k^2 s(a, k) = sum_r (2r - k)(2(ar mod k) - k)
  std::int64_t s4 = 0;
  for (std::int64_t r = 1; r < k; ++r) s4 += (2 * r - k) * (2 * chebo::mod(a * r, k) - k);
  const std::int64_t numerator = 4 * (a + d) * sign(c) * k - 12 * sign(c) * s4 - 12 * k * k * sign(c * (a + d));
  const std::int64_t denominator = 4 * k * k;
  if (numerator % denominator != 0) throw std::logic_error("Rademacher value is not an integer");
  return numerator / denominator;
}

}  // namespace oracle
