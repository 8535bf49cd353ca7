#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "chebolab/orbitgen.hpp"
#include "oracles.hpp"

using namespace chebo;

namespace {

const Mat2 kCat = make_mat2(2, 1, 1, 1);

std::set<std::array<std::int64_t, 3>> as_triples(const std::vector<RationalPoint>& pts) {
  std::set<std::array<std::int64_t, 3>> s;
  for (const auto& p : pts) s.insert({p.x, p.y, p.den});
  return s;
}

std::vector<int> letters_of(const GeodesicClass& g) {
  std::vector<int> w;
  for (char c : g.word()) w.push_back(c == 'R' ? 0 : 1);
  return w;
}

int evaluate_letters(const FiniteGroup& g, const std::vector<int>& w, int r, int l) {
  int x = g.identity();
  for (int c : w) x = g.mul(x, c == 0 ? r : l);
  return x;
}

// Primitive cyclic classes with both letters, counted by brute-force rotation.
std::map<int, int> necklace_counts(int max_len) {
  std::map<int, int> out;
  for (int n = 2; n <= max_len; ++n)
    for (int bits = 0; bits < (1 << n); ++bits) {
      if (bits == 0 || bits == (1 << n) - 1) continue;
      bool least = true, primitive = true;
      for (int r = 1; r < n; ++r) {
        const int rot = ((bits << r) | (bits >> (n - r))) & ((1 << n) - 1);
        if (rot < bits) least = false;
        if (rot == bits) primitive = false;
      }
      if (least && primitive) ++out[n];
    }
  return out;
}

}  // namespace

TEST_CASE("cat_fixed_points counts match |det(A^nu - I)|") {
  CHECK(cat_fixed_points(kCat, 1).size() == 1);
  CHECK(cat_fixed_points(kCat, 1)[0] == RationalPoint{0, 0, 1});
  CHECK(cat_fixed_points(kCat, 2).size() == 5);
  CHECK(cat_fixed_points(kCat, 3).size() == 16);
  CHECK(oracle::power(kCat, 2) == make_mat2(5, 3, 3, 2));
  CHECK(oracle::power(kCat, 3) == make_mat2(13, 8, 8, 5));
}

TEST_CASE("cat_fixed_points equal the brute-force rational point set") {
  for (const Mat2& a : {kCat, make_mat2(3, 1, 2, 1), make_mat2(0, -1, 1, 3), make_mat2(-3, 1, -1, 0)})
    for (int nu = 1; nu <= 4; ++nu) {
      CAPTURE(nu);
      CHECK(as_triples(cat_fixed_points(a, nu)) == oracle::fixed_points_brute(a, nu));
    }
}

TEST_CASE("fixed-point counts agree with the congruence oracle up to period 12") {
  for (int nu = 1; nu <= 12; ++nu) {
    CAPTURE(nu);
    const std::int64_t expected = oracle::fixed_point_count_congruence(kCat, nu);
    CHECK(cat_fixed_point_count(kCat, nu) == expected);
    CHECK(static_cast<std::int64_t>(cat_fixed_points(kCat, nu).size()) == expected);
  }
  for (int nu = 1; nu <= 6; ++nu) {
    const Mat2 a = make_mat2(3, 1, 2, 1);
    CHECK(static_cast<std::int64_t>(cat_fixed_points(a, nu).size()) == oracle::fixed_point_count_congruence(a, nu));
  }
}

TEST_CASE("non-Anosov matrices are rejected") {
  CHECK_THROWS_AS(cat_fixed_points(make_mat2(1, 1, 0, 1), 1), Error);
  try {
    cat_primitive_orbits(make_mat2(0, -1, 1, 0), 3);
    FAIL("expected NOT_ANOSOV");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnosov);
  }
}

TEST_CASE("cat_primitive_orbits") {
  SUBCASE("period 1 only holds the excluded origin") { CHECK(cat_primitive_orbits(kCat, 1).empty()); }
  SUBCASE("two orbits of period 2, five of period 3") {
    const auto orbits = cat_primitive_orbits(kCat, 3);
    std::map<int, int> by_period;
    for (const auto& o : orbits) ++by_period[o.period];
    CHECK(by_period == std::map<int, int>{{2, 2}, {3, 5}});
  }
  SUBCASE("orbit data is self-consistent") {
    for (const auto& o : cat_primitive_orbits(kCat, 7)) {
      CHECK(o.primitive);
      // A^nu * base = base + translation, exactly.
      const Mat2 an = oracle::power(kCat, o.period);
      const Vec2 lifted = an * Vec2(o.base_point.x, o.base_point.y);
      CHECK(lifted(0) == o.base_point.x + o.translation(0) * o.base_point.den);
      CHECK(lifted(1) == o.base_point.y + o.translation(1) * o.base_point.den);
      CHECK_FALSE((o.base_point.x == 0 && o.base_point.y == 0));
    }
  }
  SUBCASE("divisor sum of primitive orbit counts recovers Fix(A^nu)") {
    for (const Mat2& a : {kCat, make_mat2(3, 1, 2, 1)}) {
      const int max_period = a == kCat ? 12 : 8;
      const auto orbits = cat_primitive_orbits(a, max_period, {.include_origin = true});
      std::map<int, std::int64_t> count;
      for (const auto& o : orbits) ++count[o.period];
      for (int nu = 1; nu <= max_period; ++nu) {
        std::int64_t total = 0;
        for (int d = 1; d <= nu; ++d)
          if (nu % d == 0) total += d * count[d];
        CHECK(total == cat_fixed_point_count(a, nu));
      }
    }
  }
  SUBCASE("fixed-point counts for periods 1..5") {
    std::vector<std::int64_t> counts;
    for (int nu = 1; nu <= 5; ++nu) counts.push_back(cat_fixed_point_count(kCat, nu));
    CHECK(counts == std::vector<std::int64_t>{1, 5, 16, 45, 121});
  }
}

TEST_CASE("modular_geodesics") {
  SUBCASE("length 2 is the single class RL") {
    const auto g = modular_geodesics(2);
    REQUIRE(g.size() == 1);
    CHECK(g[0].word() == "RL");
    CHECK(g[0].trace == 3);
    CHECK(g[0].geo_length == doctest::Approx(2.0 * std::log((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-14));
    CHECK(g[0].geo_length == doctest::Approx(1.92485).epsilon(1e-5));
  }
  SUBCASE("length 3 adds RRL and RLL, both trace 4") {
    const auto g = modular_geodesics(3);
    REQUIRE(g.size() == 3);
    CHECK(g[1].word() == "RRL");
    CHECK(g[2].word() == "RLL");
    CHECK(g[1].trace == 4);
    CHECK(g[2].trace == 4);
  }
  SUBCASE("counts match brute-force necklace enumeration") {
    const auto counts = necklace_counts(14);
    std::map<int, int> got;
    for (const auto& g : modular_geodesics(14)) ++got[g.letters()];
    CHECK(got == counts);
  }
  SUBCASE("every class is hyperbolic, primitive and has the recomputed trace") {
    for (const auto& g : modular_geodesics(12)) {
      CHECK(g.trace >= 3);
      CHECK(g.geo_length > 0.0);
      CHECK(g.exponents.size() % 2 == 0);
      for (int e : g.exponents) CHECK(e >= 1);
      CHECK(g.trace == word_matrix(g.exponents).trace());
      Mat2 product = Mat2::Identity();
      for (char c : g.word()) product = product * (c == 'R' ? make_mat2(1, 1, 0, 1) : make_mat2(1, 0, 1, 1));
      CHECK(product.trace() == g.trace);
      const std::string w = g.word();
      for (std::size_t r = 1; r < w.size(); ++r) CHECK(w.substr(r) + w.substr(0, r) != w);
    }
  }
  SUBCASE("minimum length is enforced") { CHECK_THROWS_AS(modular_geodesics(1), Error); }
}

TEST_CASE("assign_lengths") {
  const auto geodesics = modular_geodesics(3);
  const auto prime = assign_lengths(geodesics, LengthScheme::PrimeNumber);
  REQUIRE(prime.size() == 3);
  CHECK(prime.lengths[0] == doctest::Approx(std::log(2.0)));
  CHECK(prime.lengths[1] == doctest::Approx(std::log(3.0)));
  CHECK(prime.lengths[2] == doctest::Approx(std::log(5.0)));
  CHECK(prime.norms == std::vector<double>{2.0, 3.0, 5.0});

  const auto geometric = assign_lengths(geodesics, LengthScheme::Geometric);
  CHECK(geometric.lengths[0] == doctest::Approx(1.92485).epsilon(1e-5));
  CHECK(geometric.norms[0] == doctest::Approx(std::exp(geometric.lengths[0])));

  CHECK(assign_lengths(std::vector<GeodesicClass>{}, LengthScheme::PrimeNumber).size() == 0);

  const auto orbits = cat_primitive_orbits(kCat, 4);
  const auto cat_geo = assign_lengths(orbits, LengthScheme::Geometric, kCat);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    CHECK(cat_geo.lengths[i] == doctest::Approx(orbits[i].period * std::log((3.0 + std::sqrt(5.0)) / 2.0)));

  const auto many = prime_lengths(5000);
  for (std::size_t i = 1; i < many.size(); ++i) CHECK(many.lengths[i] > many.lengths[i - 1]);
  CHECK(many.norms.back() == 48611.0);
}

TEST_CASE("order_knots") {
  SUBCASE("period-2 cat orbits are ordered by least base point") {
    const auto orbits = cat_primitive_orbits(kCat, 2);
    REQUIRE(orbits.size() == 2);
    CHECK(lex_less(orbits[0].base_point, orbits[1].base_point));
    CHECK(orbits[0].index == 0);
    CHECK(orbits[1].index == 1);
  }
  SUBCASE("shorter words first") {
    auto g = modular_geodesics(5);
    std::reverse(g.begin(), g.end());
    order_knots(g);
    CHECK(g[0].word() == "RL");
    CHECK(g[1].word() == "RRL");
  }
  SUBCASE("deterministic") {
    const auto a = cat_primitive_orbits(kCat, 6);
    auto b = a;
    std::reverse(b.begin(), b.end());
    order_knots(b);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].base_point == b[i].base_point);
      CHECK(a[i].index == b[i].index);
    }
  }
}

TEST_CASE("frobenius classes of modular words") {
  const auto sl2 = special_linear(2, false);
  const auto q = modular_reduction(sl2);
  const FiniteGroup& g = *q.target;

  SUBCASE("RL maps to [[0,1],[1,1]], a 3-cycle") {
    const auto rl = modular_geodesics(2)[0];
    const int x = frobenius_element(rl, q);
    CHECK(x == sl2.index_of(make_mat2(0, 1, 1, 1)));
    CHECK(g.element_order(x) == 3);
    CHECK(frobenius_class(rl, q).size() == 2);
  }
  SUBCASE("(sigma, tau) route equals direct reduction of R and L") {
    for (std::int64_t p : {2, 3, 5}) {
      const auto target = special_linear(p, true);
      const auto map = modular_reduction(target);
      const int r = target.index_of(make_mat2(1, 1, 0, 1));
      const int l = target.index_of(make_mat2(1, 0, 1, 1));
      for (const auto& geo : modular_geodesics(10)) {
        CHECK(frobenius_element(geo, map) == frobenius_element(geo, *target.group, r, l));
        CHECK(frobenius_element(geo, map) == target.index_of(word_matrix(geo.exponents)));
      }
    }
  }
  SUBCASE("class is invariant under cyclic rotation of the word") {
    const auto target = special_linear(5, true);
    const auto map = modular_reduction(target);
    const int r = target.index_of(make_mat2(1, 1, 0, 1));
    const int l = target.index_of(make_mat2(1, 0, 1, 1));
    for (const auto& geo : modular_geodesics(9)) {
      const auto cls = frobenius_class(geo, map);
      auto w = letters_of(geo);
      for (std::size_t k = 0; k < w.size(); ++k) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        CHECK(cls.contains(evaluate_letters(*target.group, w, r, l)));
      }
    }
  }
  SUBCASE("cat quotient is rejected") {
    const auto cat = semidirect_quotient(2, kCat);
    CHECK_THROWS_AS(frobenius_element(modular_geodesics(2)[0], cat.map), Error);
  }
  SUBCASE("SL2(F3) does not receive (S, ST)") { CHECK_THROWS_AS(modular_reduction(special_linear(3, false)), Error); }
}

TEST_CASE("frobenius classes of cat orbits") {
  const auto quotient = semidirect_quotient(2, kCat);
  const FiniteGroup& g = quotient.group();

  SUBCASE("generator evaluation equals the direct (v, nu) encoding") {
    for (std::int64_t m : {2, 3, 4}) {
      const auto sq = semidirect_quotient(m, kCat);
      for (const auto& o : cat_primitive_orbits(kCat, 8))
        CHECK(frobenius_element(o, sq.map) == sq.encode(o.translation(0), o.translation(1), o.period));
    }
  }
  SUBCASE("even translation with period divisible by 3 is the identity") {
    CatOrbit o;
    o.period = 3;
    o.translation = Vec2(2, -4);
    CHECK(frobenius_element(o, quotient.map) == g.identity());
    CHECK(frobenius_class(o, quotient.map).size() == 1);
  }
  SUBCASE("period-2 orbits land in the class of (v mod 2, 2)") {
    for (const auto& o : cat_primitive_orbits(kCat, 2)) {
      const auto cls = frobenius_class(o, quotient.map);
      CHECK(cls.contains(quotient.encode(o.translation(0), o.translation(1), 2)));
      CHECK(cls.size() == 4);
    }
  }
  SUBCASE("class does not depend on the orbit point or lift") {
    for (std::int64_t m : {2, 3}) {
      const auto sq = semidirect_quotient(m, kCat);
      const auto classes = conjugacy_classes(sq.group());
      const auto index = class_index(classes, sq.group().order());
      for (const auto& o : cat_primitive_orbits(kCat, 6)) {
        const int expected = index[frobenius_element(o, sq.map)];
        const Mat2 shift = oracle::power(kCat, o.period) - Mat2::Identity();
        Vec2 point(o.base_point.x, o.base_point.y);
        for (int step = 0; step < o.period; ++step) {
          point = kCat * point;
          for (std::int64_t u0 : {-1, 0, 2}) {
            // Lift A^step x + u, with u an integer vector scaled to the denominator.
            const Vec2 lift = point + Vec2(u0, 1 - u0) * o.base_point.den;
            const Vec2 moved = shift * lift;
            CatOrbit other = o;
            other.translation = moved / o.base_point.den;
            CHECK(moved(0) % o.base_point.den == 0);
            CHECK(index[frobenius_element(other, sq.map)] == expected);
          }
        }
      }
    }
  }
  SUBCASE("modular quotient is rejected") {
    const auto q = modular_reduction(special_linear(2, false));
    CHECK_THROWS_AS(frobenius_element(cat_primitive_orbits(kCat, 2)[0], q), Error);
  }
}

TEST_CASE("rademacher") {
  CHECK(rademacher(std::vector<int>{1}) == 1);
  CHECK(rademacher(std::vector<int>{1, 1}) == 0);
  CHECK(rademacher(std::vector<int>{2, 1}) == 1);
  CHECK(oracle::rademacher_dedekind(make_mat2(1, 1, 0, 1)) == 1);
  CHECK(oracle::rademacher_dedekind(make_mat2(1, 0, 1, 1)) == -1);
  CHECK(oracle::rademacher_dedekind(make_mat2(2, 1, 1, 1)) == 0);
  CHECK(oracle::rademacher_dedekind(make_mat2(3, 2, 1, 1)) == 1);
}

TEST_CASE("rademacher matches the Dedekind-sum oracle on hyperbolic words up to length 10") {
  for (const auto& g : modular_geodesics(10)) {
    CAPTURE(g.word());
    CHECK(rademacher(g) == oracle::rademacher_dedekind(word_matrix(g.exponents)));
  }
}
