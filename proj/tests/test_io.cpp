#include "doctest.h"

#include <sstream>

#include "chebolab/error.hpp"
#include "chebolab/group_library.hpp"
#include "chebolab/io.hpp"

using namespace chebo;

namespace {

const Mat2 kCat = make_mat2(2, 1, 1, 1);

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

bool same_table(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order() == b.order() && std::equal(a.table().begin(), a.table().end(), b.table().begin());
}

}  // namespace

TEST_CASE("group round trips through JSON and CSV") {
  for (const auto& g : group_library()) {
    const auto back = group_from_json(Json::parse(group_to_json(*g).dump()));
    CHECK(same_table(*g, back));
    CHECK(back.label() == g->label());
    std::stringstream csv;
    group_to_csv(csv, *g);
    CHECK(same_table(*g, group_from_csv(csv)));
  }
  CHECK(code_of([] { group_from_json(Json{{"order", 2}}); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { group_from_json(Json{{"order", 2}, {"table", {0, 1, 1, 1}}}); }) == ErrorCode::NoInverse);
  std::stringstream ragged("0,1\n1\n");
  CHECK(code_of([&] { group_from_csv(ragged); }) == ErrorCode::ConfigInvalid);
  std::stringstream text("# Z/2\n0,1\n1,x\n");
  CHECK(code_of([&] { group_from_csv(text); }) == ErrorCode::ConfigInvalid);
}

TEST_CASE("orbit streams round trip") {
  SUBCASE("cat orbits") {
    const auto orbits = cat_primitive_orbits(kCat, 6);
    const auto records = orbit_records(orbits, kCat);
    std::stringstream s;
    write_orbits_jsonl(s, records);
    const auto back = read_orbits_jsonl(s);
    REQUIRE(back.size() == records.size());
    CHECK(back == records);
    const auto q = semidirect_quotient(2, kCat);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const auto o = to_cat_orbit(back[i]);
      CHECK(o.period == orbits[i].period);
      CHECK(o.base_point == orbits[i].base_point);
      CHECK(frobenius_element(o, q.map) == frobenius_element(orbits[i], q.map));
    }
    const auto prime = lengths_of(back, LengthScheme::PrimeNumber);
    CHECK(prime.norms == prime_lengths(orbits.size()).norms);
  }
  SUBCASE("modular geodesics") {
    const auto geodesics = modular_geodesics(10);
    const auto records = orbit_records(geodesics);
    std::stringstream s;
    write_orbits_jsonl(s, records);
    const auto back = read_orbits_jsonl(s);
    CHECK(back == records);
    for (std::size_t i = 0; i < geodesics.size(); ++i) {
      const auto g = to_geodesic(back[i]);
      CHECK(g.exponents == geodesics[i].exponents);
      CHECK(g.trace == geodesics[i].trace);
      CHECK(g.geo_length == geodesics[i].geo_length);
    }
    CHECK(records.front().period_or_word == "RL");
  }
  SUBCASE("malformed streams") {
    std::stringstream empty("\n# nothing\n");
    CHECK(code_of([&] { read_orbits_jsonl(empty); }) == ErrorCode::DatasetEmpty);
    std::stringstream junk("{not json}\n");
    CHECK(code_of([&] { read_orbits_jsonl(junk); }) == ErrorCode::ConfigInvalid);
    std::stringstream word(
        R"({"family":"modular","index":0,"period_or_word":"LR","translation_or_trace":3,"length_prime":0.6,"length_geometric":1.9})");
    CHECK(code_of([&] { read_orbits_jsonl(word); }) == ErrorCode::ConfigInvalid);
    std::stringstream family(
        R"({"family":"x","index":0,"period_or_word":1,"translation_or_trace":3,"length_prime":0.6,"length_geometric":1.9})");
    CHECK(code_of([&] { read_orbits_jsonl(family); }) == ErrorCode::ConfigInvalid);
  }
}

TEST_CASE("density report serialization") {
  const auto z3 = cyclic(3);
  const auto a = prime_lengths(60);
  std::vector<int> tags;
  for (std::size_t i = 0; i < a.size(); ++i) tags.push_back(static_cast<int>(i % 3));
  const auto r = density_report(z3, tags, a);
  const auto j = to_json(r);
  CHECK(j["per_class"].size() == 3);
  CHECK(j["total_knots"] == 60);
  CHECK(j["per_class"][1]["count"] == 20);
  std::stringstream csv;
  write_density_csv(csv, r);
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "class_rep,class_size,count,natural,dirichlet_s1.2,dirichlet_s1.1,dirichlet_s1.05,dirichlet_s1.02,"
        "dirichlet_extrapolated,truncation_sensitivity,expected");
  std::string row;
  std::getline(csv, row);
  CHECK(row.rfind("0,1,20,0.333333333333,", 0) == 0);
  std::stringstream series;
  write_density_series_csv(series, {natural_density(tags, 0), natural_density(tags, 1)});
  std::getline(series, header);
  CHECK(header == "nu,class_0,class_1");
  std::getline(series, row);
  CHECK(row == "1,1,0");
}

TEST_CASE("splitting data, sweep and local-global serialization") {
  const auto z6 = std::make_shared<const FiniteGroup>(cyclic(6));
  const auto j = to_json(splitting_data(make_peripheral(z6, 3, 2)));
  CHECK(j["e"] == 2);
  CHECK(j["f"] == 3);
  CHECK(j["frobenius"].is_null());
  CHECK(to_json(splitting_data(make_peripheral(z6, 0, 2)))["frobenius"]["representative"] == 2);

  std::stringstream csv;
  write_sweep_csv(csv, split_rigidity_sweep({std::make_shared<const FiniteGroup>(cyclic(4))}, 16));
  CHECK(csv.str() ==
        "group,order,n1,n2,verdict\n"
        "\"Z4\",4,{0},{0 2},DISTINGUISHED\n"
        "\"Z4\",4,{0},{0 1 2 3},DISTINGUISHED\n"
        "\"Z4\",4,{0 2},{0 1 2 3},DISTINGUISHED\n");

  const auto m = synthetic_linking_model(7, 10, 3).entries();
  std::stringstream ms;
  write_matrix_csv(ms, m);
  CHECK(read_matrix_csv(ms) == m);
  std::stringstream none("");
  CHECK(code_of([&] { read_matrix_csv(none); }) == ErrorCode::DatasetEmpty);

  const auto s = local_global_trials(3, 10, 10, 3, 3, 9);
  const auto js = to_json(s);
  CHECK(js["experiments"].size() == 3);
  for (const char* key : {"seed", "p", "n", "S", "rank", "verdict"}) CHECK(js["experiments"][0].contains(key));
  CHECK(js["scope"] == kLocalGlobalScope);
}
