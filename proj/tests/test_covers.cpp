#include "doctest.h"

#include <cmath>
#include <numeric>
#include <set>

#include "chebolab/covers.hpp"
#include "chebolab/density.hpp"
#include "chebolab/error.hpp"
#include "chebolab/group_library.hpp"
#include "chebolab/orbitgen.hpp"
#include "oracles.hpp"

using namespace chebo;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::shared_ptr<const FiniteGroup> shared(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

int first_of_order(const FiniteGroup& g, int k) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return x;
  return -1;
}

ElementSet as_set(const std::set<int>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("splitting_data examples") {
  SUBCASE("Z/2 with ramified meridian") {
    const auto d = splitting_data(make_peripheral(shared(cyclic(2)), 1, 0));
    CHECK(d.e == 2);
    CHECK(d.f == 1);
    CHECK(d.g == 1);
    CHECK_FALSE(d.frobenius.has_value());
  }
  SUBCASE("S3 with trivial meridian and a 3-cycle longitude") {
    const auto s3 = shared(oracle::s3());
    const int c3 = first_of_order(*s3, 3);
    const auto d = splitting_data(make_peripheral(s3, s3->identity(), c3));
    CHECK(d.e == 1);
    CHECK(d.f == 3);
    CHECK(d.g == 2);
    REQUIRE(d.frobenius.has_value());
    CHECK(d.frobenius->contains(c3));
    CHECK(d.frobenius->size() == 2);
    CHECK(as_set(oracle::closure(*s3, {c3})) == d.decomposition);
  }
  SUBCASE("Z/6 with mu = 3, lambda = 2") {
    const auto z6 = shared(cyclic(6));
    const auto d = splitting_data(make_peripheral(z6, 3, 2));
    CHECK(d.decomposition.size() == 6);
    CHECK(as_set(oracle::closure(*z6, {3, 2})) == d.decomposition);
    CHECK(d.e == 2);
    CHECK(d.f == 3);
    CHECK(d.g == 1);
  }
  SUBCASE("noncommuting images are rejected") {
    const auto s3 = shared(oracle::s3());
    const int c2 = first_of_order(*s3, 2);
    const int c3 = first_of_order(*s3, 3);
    CHECK(code_of([&] { make_peripheral(s3, c2, c3); }) == ErrorCode::NoncommutingPeripheral);
    CHECK(code_of([&] { splitting_data(PeripheralImage{s3, c2, c3}); }) == ErrorCode::NoncommutingPeripheral);
    CHECK(code_of([&] { make_peripheral(s3, 6, 0); }) == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("Hilbert identities over every commuting pair in the library") {
  for (const auto& g : library_up_to(24)) {
    CAPTURE(g->label());
    const auto classes = conjugacy_classes(*g);
    for (int mu = 0; mu < g->order(); ++mu)
      for (int lambda = 0; lambda < g->order(); ++lambda) {
        if (!g->commute(mu, lambda)) continue;
        const PeripheralImage p{g, mu, lambda};
        const auto d = splitting_data(p);
        const auto inertia = oracle::closure(*g, {mu});
        const auto decomposition = oracle::closure(*g, {mu, lambda});
        CHECK(d.e * d.f * d.g == g->order());
        CHECK(static_cast<int>(d.inertia.size()) == d.e);
        CHECK(static_cast<int>(d.decomposition.size()) == d.e * d.f);
        CHECK(std::includes(d.decomposition.begin(), d.decomposition.end(), d.inertia.begin(), d.inertia.end()));
        CHECK(as_set(inertia) == d.inertia);
        CHECK(as_set(decomposition) == d.decomposition);
        CHECK(d.frobenius.has_value() == (d.e == 1));
        CHECK(is_totally_split(p) == (d.g == g->order()));
        // Regular cover: g components, each carrying (e, f).
        CHECK(static_cast<int>(d.components.size()) == d.g);
        for (const auto& c : d.components) {
          CHECK(c.e == d.e);
          CHECK(c.f == d.f);
        }
      }
  }
}

TEST_CASE("subcover_components") {
  SUBCASE("S3 over a transposition subgroup") {
    const auto s3 = shared(oracle::s3());
    const int c2 = first_of_order(*s3, 2);
    const int c3 = first_of_order(*s3, 3);
    const auto comps = subcover_components(make_peripheral(s3, s3->identity(), c3), {s3->identity(), c2});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].e == 1);
    CHECK(comps[0].f == 3);
    CHECK(comps[0].cosets.size() == 3);
  }
  SUBCASE("H = G gives the trivial cover") {
    const auto z6 = shared(cyclic(6));
    const auto comps = subcover_components(make_peripheral(z6, 3, 2), {0, 1, 2, 3, 4, 5});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].e == 1);
    CHECK(comps[0].f == 1);
  }
  SUBCASE("not a subgroup") {
    const auto z6 = shared(cyclic(6));
    CHECK(code_of([&] { subcover_components(make_peripheral(z6, 0, 0), {0, 1}); }) == ErrorCode::NotASubgroup);
  }
  SUBCASE("degree identity over all subgroups of library groups") {
    for (const auto& g : library_up_to(24)) {
      CAPTURE(g->label());
      // All 2-generated subgroups.
      std::set<ElementSet> subgroups;
      for (int a = 0; a < g->order(); ++a)
        for (int b = a; b < g->order(); ++b) {
          const int gens[] = {a, b};
          subgroups.insert(subgroup_generated(*g, gens));
        }
      for (int mu = 0; mu < g->order(); ++mu)
        for (int lambda = 0; lambda < g->order(); ++lambda) {
          if (!g->commute(mu, lambda)) continue;
          const PeripheralImage p{g, mu, lambda};
          for (const auto& h : subgroups) {
            const auto comps = subcover_components(p, h);
            int degree = 0;
            std::set<int> seen;
            for (const auto& c : comps) {
              degree += c.e * c.f;
              for (int x : c.cosets) CHECK(seen.insert(x).second);
            }
            CHECK(degree * static_cast<int>(h.size()) == g->order());
          }
        }
    }
  }
}

TEST_CASE("is_totally_split") {
  const auto z4 = shared(cyclic(4));
  CHECK(is_totally_split(make_peripheral(z4, 0, 0)));
  CHECK_FALSE(is_totally_split(make_peripheral(z4, 0, 1)));
  CHECK_FALSE(is_totally_split(make_peripheral(z4, 2, 0)));
}

TEST_CASE("induced_length") {
  const auto z6 = shared(cyclic(6));
  SUBCASE("totally split") {
    const auto d = splitting_data(make_peripheral(z6, 0, 0));
    CHECK(induced_length(1.7, d, LengthConvention::DecompOrder) == 1.7);
    CHECK(induced_length(1.7, d, LengthConvention::CoveringDegree) == 1.7);
  }
  SUBCASE("unramified with f = 3") {
    const auto d = splitting_data(make_peripheral(z6, 0, 2));
    CHECK(induced_length(std::log(2.0), d, LengthConvention::DecompOrder) == doctest::Approx(3 * std::log(2.0)));
    CHECK(induced_length(std::log(2.0), d, LengthConvention::CoveringDegree) == doctest::Approx(3 * std::log(2.0)));
  }
  SUBCASE("ramified conventions diverge") {
    const auto d = splitting_data(make_peripheral(z6, 3, 2));
    CHECK(induced_length(1.0, d, LengthConvention::DecompOrder) == 6.0);
    CHECK(induced_length(1.0, d, LengthConvention::CoveringDegree) == 3.0);
  }
}

TEST_CASE("compositum") {
  const auto z6 = cyclic(6);
  const ElementSet all{0, 1, 2, 3, 4, 5}, n2{0, 2, 4}, n3{0, 3};
  CHECK(compositum(z6, all, n3) == n3);
  CHECK(compositum(z6, n2, n3) == ElementSet{0});
  CHECK(compositum(z6, n2, n2) == n2);
  const auto s3 = oracle::s3();
  const int c2 = first_of_order(s3, 2);
  ElementSet t{s3.identity(), c2};
  std::sort(t.begin(), t.end());
  CHECK(code_of([&] { compositum(s3, t, t); }) == ErrorCode::NotNormal);
  for (const auto& g : library_up_to(16)) {
    const auto ns = normal_subgroups(*g);
    for (const auto& a : ns)
      for (const auto& b : ns) {
        const auto c = compositum(*g, a, b);
        CHECK(is_normal(*g, c));
        CHECK(c == compositum(*g, b, a));
      }
  }
}

TEST_CASE("split_class_set") {
  const auto z4 = cyclic(4);
  CHECK(split_class_set(z4, {0, 1, 2, 3}).size() == 4);
  CHECK(split_class_set(z4, {0}).size() == 1);
  const auto half = split_class_set(z4, {0, 2});
  REQUIRE(half.size() == 2);
  CHECK(half[0].members == ElementSet{0});
  CHECK(half[1].members == ElementSet{2});
  for (const auto& g : library_up_to(24))
    for (const auto& n : normal_subgroups(*g)) {
      // Exhaustive membership: a class is split iff all its members lie in N.
      ElementSet u;
      for (const auto& c : split_class_set(*g, n)) u.insert(u.end(), c.members.begin(), c.members.end());
      std::sort(u.begin(), u.end());
      CHECK(u == n);
    }
}

TEST_CASE("split_rigidity_sweep") {
  SUBCASE("all groups of order at most 16") {
    const auto r = split_rigidity_sweep(16);
    CHECK(r.groups == 42);
    CHECK(r.counterexamples == 0);
    CHECK(!r.rows.empty());
  }
  SUBCASE("Z/4 distinguishes {0,2} from {0}") {
    const auto r = split_rigidity_sweep({std::make_shared<const FiniteGroup>(cyclic(4))}, 16);
    bool found = false;
    for (const auto& row : r.rows)
      if (row.n1 == ElementSet{0} && row.n2 == ElementSet{0, 2}) found = row.distinguished;
    CHECK(found);
  }
  SUBCASE("trivial group is vacuous") {
    const auto r = split_rigidity_sweep({std::make_shared<const FiniteGroup>(cyclic(1))}, 16);
    CHECK(r.groups == 1);
    CHECK(r.rows.empty());
    CHECK(r.counterexamples == 0);
  }
  SUBCASE("bound above 64") { CHECK(code_of([] { split_rigidity_sweep(65); }) == ErrorCode::GroupTooLarge); }
}

TEST_CASE("multiplicativity of residue degrees") {
  const auto z6 = shared(cyclic(6));
  SUBCASE("Z/6 onto Z/2") {
    const auto t = multiplicativity_check(make_peripheral(z6, 0, 2), {0, 2, 4});
    CHECK(t.f_total == 3);
    CHECK(t.f_quotient == 1);
    CHECK(t.f_intermediate == 3);
    CHECK(t.holds);
  }
  SUBCASE("Z/6 onto Z/3") {
    const auto t = multiplicativity_check(make_peripheral(z6, 0, 1), {0, 3});
    CHECK(t.f_total == 6);
    CHECK(t.f_quotient == 3);
    CHECK(t.f_intermediate == 2);
    CHECK(t.holds);
  }
  SUBCASE("trivial N") {
    const auto t = multiplicativity_check(make_peripheral(z6, 3, 2), {0});
    CHECK(t.f_total == t.f_quotient);
    CHECK(t.f_intermediate == 1);
  }
  SUBCASE("every tower over the library") {
    for (const auto& g : library_up_to(24)) {
      CAPTURE(g->label());
      const auto ns = normal_subgroups(*g);
      for (int mu = 0; mu < g->order(); ++mu)
        for (int lambda = 0; lambda < g->order(); ++lambda) {
          if (!g->commute(mu, lambda)) continue;
          for (const auto& n : ns) CHECK(multiplicativity_check(PeripheralImage{g, mu, lambda}, n).holds);
        }
    }
  }
}

TEST_CASE("totally split knots of the modular link mod 2") {
  const auto target = special_linear(2, false);
  const auto q = modular_reduction(target);
  const auto knots = modular_geodesics(18);
  std::vector<int> flags;
  for (const auto& k : knots)
    flags.push_back(is_totally_split(PeripheralImage{target.group, target.group->identity(), frobenius_element(k, q)}));
  const auto d = natural_density(flags, 1);
  CHECK(std::abs(d.final_value - 1.0 / target.group->order()) <= kDensityTolerance);
}
