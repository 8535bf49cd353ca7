#include "chebolab/orbitgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chebolab/primes.hpp"

namespace chebo {
namespace {

RationalPoint reduced_point(std::int64_t x, std::int64_t y, std::int64_t den) {
  const std::int64_t g = std::gcd(std::gcd(x, y), den);
  return {x / g, y / g, den / g};
}

Mat2 adjugate(const Mat2& m) { return make_mat2(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)); }

// Fix(A^period) as the group V * (Z/d1 x Z/d2), with all points over the common denominator d2.
struct FixedPointLattice {
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;
  Mat2 v;
  Mat2 v_inverse;
  Mat2 shift;  // A^period - I

  std::int64_t size() const { return d1 * d2; }

  // (i, j) -> numerators over d2
  std::pair<std::int64_t, std::int64_t> point(std::int64_t i, std::int64_t j) const {
    const std::int64_t u = i * (d2 / d1);
    return {mod<std::int64_t>(v(0, 0) * u + v(0, 1) * j, d2), mod<std::int64_t>(v(1, 0) * u + v(1, 1) * j, d2)};
  }

  std::int64_t slot(std::int64_t a, std::int64_t b) const {
    const std::int64_t u = mod<std::int64_t>(v_inverse(0, 0) * a + v_inverse(0, 1) * b, d2);
    const std::int64_t j = mod<std::int64_t>(v_inverse(1, 0) * a + v_inverse(1, 1) * b, d2);
    return (u / (d2 / d1)) * d2 + j;
  }
};

FixedPointLattice fixed_point_lattice(const Mat2& a, int period) {
  require_anosov(a);
  if (period < 1) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  FixedPointLattice lat;
  lat.shift = checked_power(a, period) - Mat2::Identity();
  const auto snf = smith_normal_form(lat.shift);
  lat.d1 = snf.D(0, 0);
  lat.d2 = snf.D(1, 1);
  if (lat.d1 == 0 || lat.d2 == 0) throw Error(ErrorCode::NotAnosov, "A^period - I is singular");
  lat.v = snf.V;
  const std::int64_t det_v = lat.v.determinant() > 0 ? 1 : -1;
  lat.v_inverse = adjugate(lat.v) * det_v;
  // Entry products below are bounded by d2 * |V|; keep them inside 64 bits.
  const std::int64_t vmax = std::max<std::int64_t>(1, lat.v.cwiseAbs().maxCoeff());
  if (vmax > std::numeric_limits<std::int64_t>::max() / 4 / lat.d2)
    throw Error(ErrorCode::Overflow, "fixed-point lattice too large");
  return lat;
}

// Lyndon words over {0 = R, 1 = L} of length 2..n, in Duval order.
template <typename Visit>
void for_each_lyndon(int n, Visit&& visit) {
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    const std::size_t m = w.size();
    if (m >= 2) visit(w);
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
  }
}

std::vector<int> expand(const std::vector<int>& exponents) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < exponents.size(); ++i) letters.insert(letters.end(), exponents[i], static_cast<int>(i % 2));
  return letters;
}

}  // namespace

bool lex_less(const RationalPoint& a, const RationalPoint& b) {
  const __int128 ax = static_cast<__int128>(a.x) * b.den, bx = static_cast<__int128>(b.x) * a.den;
  if (ax != bx) return ax < bx;
  return static_cast<__int128>(a.y) * b.den < static_cast<__int128>(b.y) * a.den;
}

int GeodesicClass::letters() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::string GeodesicClass::word() const {
  std::string s;
  for (int letter : expand(exponents)) s.push_back(letter == 0 ? 'R' : 'L');
  return s;
}

std::string_view to_string(LengthScheme scheme) {
  return scheme == LengthScheme::PrimeNumber ? "PRIME_NUMBER" : "GEOMETRIC";
}

void require_anosov(const Mat2& a) {
  if (a.determinant() != 1) throw Error(ErrorCode::InvalidArgument, "monodromy must have determinant 1");
  if (std::abs(a.trace()) <= 2) throw Error(ErrorCode::NotAnosov, "|trace| must exceed 2");
}

std::int64_t cat_fixed_point_count(const Mat2& a, int period) {
  require_anosov(a);
  const Mat2 b = checked_power(a, period) - Mat2::Identity();
  return std::abs(narrow_checked(static_cast<__int128>(b(0, 0)) * b(1, 1) - static_cast<__int128>(b(0, 1)) * b(1, 0)));
}

std::vector<RationalPoint> cat_fixed_points(const Mat2& a, int period) {
  const auto lat = fixed_point_lattice(a, period);
  std::vector<RationalPoint> points;
  points.reserve(static_cast<std::size_t>(lat.size()));
  for (std::int64_t i = 0; i < lat.d1; ++i)
    for (std::int64_t j = 0; j < lat.d2; ++j) {
      const auto [x, y] = lat.point(i, j);
      points.push_back(reduced_point(x, y, lat.d2));
    }
  std::sort(points.begin(), points.end(), lex_less);
  return points;
}

std::vector<CatOrbit> cat_primitive_orbits(const Mat2& a, int max_period, CatOrbitOptions options) {
  require_anosov(a);
  std::vector<CatOrbit> orbits;
  for (int period = 1; period <= max_period; ++period) {
    const auto lat = fixed_point_lattice(a, period);
    const std::int64_t den = lat.d2;
    std::vector<bool> visited(static_cast<std::size_t>(lat.size()), false);
    for (std::int64_t i = 0; i < lat.d1; ++i)
      for (std::int64_t j = 0; j < lat.d2; ++j) {
        auto [x, y] = lat.point(i, j);
        if (visited[lat.slot(x, y)]) continue;
        // Walk the A-orbit, tracking its length and least point.
        std::int64_t bx = x, by = y;
        int length = 0;
        std::int64_t cx = x, cy = y;
        do {
          visited[lat.slot(cx, cy)] = true;
          ++length;
          if (cx < bx || (cx == bx && cy < by)) {
            bx = cx;
            by = cy;
          }
          const std::int64_t nx = mod<std::int64_t>(a(0, 0) * cx + a(0, 1) * cy, den);
          const std::int64_t ny = mod<std::int64_t>(a(1, 0) * cx + a(1, 1) * cy, den);
          cx = nx;
          cy = ny;
        } while (cx != x || cy != y);
        if (length != period) continue;
        if (bx == 0 && by == 0 && !options.include_origin) continue;

        const Vec2 shifted = checked_product(lat.shift, Vec2(bx, by));
        if (shifted(0) % den != 0 || shifted(1) % den != 0)
          throw Error(ErrorCode::InvalidArgument, "orbit point is not periodic");
        CatOrbit orbit;
        orbit.period = period;
        orbit.base_point = reduced_point(bx, by, den);
        orbit.translation = shifted / den;
        orbit.primitive = true;
        orbits.push_back(orbit);
      }
  }
  order_knots(orbits);
  return orbits;
}

Mat2 word_matrix(const std::vector<int>& exponents) {
  Mat2 m = Mat2::Identity();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const std::int64_t e = exponents[i];
    m = checked_product(m, i % 2 == 0 ? make_mat2(1, e, 0, 1) : make_mat2(1, 0, e, 1));
  }
  return m;
}

double geodesic_length(std::int64_t trace) { return 2.0 * std::acosh(static_cast<double>(trace) / 2.0); }

double expanding_eigenvalue(const Mat2& a) {
  const double t = std::abs(static_cast<double>(a.trace()));
  return (t + std::sqrt(t * t - 4.0)) / 2.0;
}

std::vector<GeodesicClass> modular_geodesics(int max_word_length) {
  if (max_word_length < 2) throw Error(ErrorCode::InvalidArgument, "max_word_length must be at least 2");
  std::vector<GeodesicClass> out;
  for_each_lyndon(max_word_length, [&](const std::vector<int>& w) {
    GeodesicClass g;
    int run = 0;
    int letter = 0;
    for (int c : w) {
      if (c != letter) {
        g.exponents.push_back(run);
        run = 0;
        letter = c;
      }
      ++run;
    }
    g.exponents.push_back(run);
    g.trace = word_matrix(g.exponents).trace();
    g.geo_length = geodesic_length(g.trace);
    out.push_back(std::move(g));
  });
  order_knots(out);
  return out;
}

LengthAssignment prime_lengths(std::size_t count) {
  LengthAssignment out;
  out.scheme = LengthScheme::PrimeNumber;
  for (std::int64_t p : first_primes(count)) {
    out.norms.push_back(static_cast<double>(p));
    out.lengths.push_back(std::log(static_cast<double>(p)));
  }
  return out;
}

LengthAssignment assign_lengths(const std::vector<CatOrbit>& orbits, LengthScheme scheme, const Mat2& a) {
  if (scheme == LengthScheme::PrimeNumber) return prime_lengths(orbits.size());
  LengthAssignment out;
  out.scheme = scheme;
  const double log_stretch = std::log(expanding_eigenvalue(a));
  for (const auto& o : orbits) {
    out.lengths.push_back(o.period * log_stretch);
    out.norms.push_back(std::exp(out.lengths.back()));
  }
  return out;
}

LengthAssignment assign_lengths(const std::vector<GeodesicClass>& geodesics, LengthScheme scheme) {
  if (scheme == LengthScheme::PrimeNumber) return prime_lengths(geodesics.size());
  LengthAssignment out;
  out.scheme = scheme;
  for (const auto& g : geodesics) {
    out.lengths.push_back(g.geo_length);
    out.norms.push_back(std::exp(g.geo_length));
  }
  return out;
}

void order_knots(std::vector<CatOrbit>& orbits) {
  std::sort(orbits.begin(), orbits.end(), [](const CatOrbit& a, const CatOrbit& b) {
    if (a.period != b.period) return a.period < b.period;
    return lex_less(a.base_point, b.base_point);
  });
  for (std::size_t i = 0; i < orbits.size(); ++i) orbits[i].index = i;
}

void order_knots(std::vector<GeodesicClass>& geodesics) {
  std::sort(geodesics.begin(), geodesics.end(), [](const GeodesicClass& a, const GeodesicClass& b) {
    const int la = a.letters(), lb = b.letters();
    if (la != lb) return la < lb;
    if (a.trace != b.trace) return a.trace < b.trace;
    return expand(a.exponents) < expand(b.exponents);
  });
  for (std::size_t i = 0; i < geodesics.size(); ++i) geodesics[i].index = i;
}

int frobenius_element(const CatOrbit& orbit, const QuotientMap& q) {
  if (q.source_model != SourceModel::SemidirectZ2Z || q.generator_images.size() != 3)
    throw Error(ErrorCode::ModelMismatch, "cat orbits need a SEMIDIRECT_Z2_Z quotient");
  const FiniteGroup& g = *q.target;
  const auto& im = q.generator_images;
  return g.mul(g.mul(g.pow(im[0], orbit.translation(0)), g.pow(im[1], orbit.translation(1))),
               g.pow(im[2], orbit.period));
}

int frobenius_element(const GeodesicClass& geodesic, const FiniteGroup& g, int r_image, int l_image) {
  int x = g.identity();
  for (std::size_t i = 0; i < geodesic.exponents.size(); ++i)
    x = g.mul(x, g.pow(i % 2 == 0 ? r_image : l_image, geodesic.exponents[i]));
  return x;
}

int frobenius_element(const GeodesicClass& geodesic, const QuotientMap& q) {
  if (q.source_model != SourceModel::FreeProdZ2Z3 || q.generator_images.size() != 2)
    throw Error(ErrorCode::ModelMismatch, "modular geodesics need a FREE_PROD_Z2_Z3 quotient");
  const FiniteGroup& g = *q.target;
  const int sigma = q.generator_images[0], tau = q.generator_images[1];
  return frobenius_element(geodesic, g, g.mul(sigma, tau), g.mul(sigma, g.mul(tau, tau)));
}

QuotientMap modular_reduction(const MatrixGroup& target) {
  QuotientMap q;
  q.source_model = SourceModel::FreeProdZ2Z3;
  q.target = target.group;
  q.generator_images = {target.index_of(make_mat2(0, -1, 1, 0)), target.index_of(make_mat2(0, -1, 1, 1))};
  if (!satisfies_relations(q))
    throw Error(ErrorCode::ModelMismatch, "S and ST do not satisfy the (2,3) relations in " + target.group->label());
  return q;
}

std::int64_t rademacher(const std::vector<int>& exponents) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) sum += (i % 2 == 0 ? 1 : -1) * exponents[i];
  return sum;
}

std::int64_t rademacher(const GeodesicClass& geodesic) { return rademacher(geodesic.exponents); }

}  // namespace chebo
