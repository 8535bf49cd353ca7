#include "chebolab/reference.hpp"

#include <numeric>

#include "chebolab/error.hpp"

namespace chebo::reference {

std::set<std::array<std::int64_t, 3>> cat_fixed_points(const Mat2& a, int nu) {
  const Mat2 b = checked_power(a, nu) - Mat2::Identity();
  const std::int64_t n = std::abs(b.determinant());
  std::set<std::array<std::int64_t, 3>> pts;
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      if (mod(b(0, 0) * x + b(0, 1) * y, n) == 0 && mod(b(1, 0) * x + b(1, 1) * y, n) == 0) {
        const std::int64_t g = std::gcd(std::gcd(x, y), n);
        pts.insert({x / g, y / g, n / g});
      }
  return pts;
}

std::int64_t dedekind_sum_6k(std::int64_t h, std::int64_t k) {
  // 6k s(h,k) = (6/4k) sum_{r=1}^{k-1} (2r - k)(2(hr mod k) - k)
  std::int64_t s = 0;
  for (std::int64_t r = 1; r < k; ++r) s += (2 * r - k) * (2 * mod(h * r, k) - k);
  if (6 * s % (4 * k) != 0) throw Error(ErrorCode::InvalidArgument, "Dedekind sum scaling is not integral");
  return 6 * s / (4 * k);
}

std::int64_t rademacher_dedekind(const Mat2& m) {
  const std::int64_t a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  auto sign = [](std::int64_t x) -> std::int64_t { return (x > 0) - (x < 0); };
  if (c == 0) return b * d;
  const std::int64_t k = std::abs(c);
  // Psi = (a + d)/c - 12 sign(c) s(a, |c|) - 3 sign(c (a + d)), over the common denominator k.
  const std::int64_t numerator = (a + d) * sign(c) - 2 * sign(c) * dedekind_sum_6k(a, k) - 3 * k * sign(c * (a + d));
  if (numerator % k != 0) throw Error(ErrorCode::InvalidArgument, "Rademacher value is not an integer");
  return numerator / k;
}

}  // namespace chebo::reference
