#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssg/classify.hpp"
#include "ssg/serialize.hpp"

using namespace ssg;

namespace {

AtlasOptions no_grading() {
  AtlasOptions o;
  o.with_grading = false;
  return o;
}

}  // namespace

TEST_CASE("label_diagram") {
  const auto ds = diagrams(parse_cartan_type("A3"));
  REQUIRE(ds.size() == 3);
  std::vector<std::string> labels;
  for (const auto& d : ds) labels.push_back(label_diagram(d));
  CHECK(std::count(labels.begin(), labels.end(), "A3 simply-connected") == 1);
  CHECK(std::count(labels.begin(), labels.end(), "A3 adjoint") == 1);
  CHECK(std::count_if(labels.begin(), labels.end(),
                      [](const std::string& s) { return s.rfind("A3 intermediate#", 0) == 0; }) == 1);

  // P = Q: the only diagram is simply connected and adjoint at once
  const auto g2 = diagrams(parse_cartan_type("G2"));
  REQUIRE(g2.size() == 1);
  CHECK(label_diagram(g2[0]) == "G2 simply-connected");
}

TEST_CASE("A3 entry: a chain of three with centres Z/4, Z/2, trivial") {
  const AtlasEntry e = build_entry(parse_cartan_type("A3"));
  REQUIRE_FALSE(e.error);
  REQUIRE(e.diagrams.size() == 3);
  CHECK(e.diagrams[0].label == "A3 simply-connected");
  CHECK(e.diagrams[2].label == "A3 adjoint");
  CHECK(e.diagrams[0].center.invariant_factors() == std::vector<Int>{4});
  CHECK(e.diagrams[1].center.invariant_factors() == std::vector<Int>{2});
  CHECK(e.diagrams[2].center.is_trivial());
  using Edge = std::pair<std::size_t, std::size_t>;
  CHECK(e.isogeny_edges == std::vector<Edge>{{0, 1}, {1, 2}});
  REQUIRE(e.grading);
  CHECK(e.grading->invariant_factors.invariant_factors() == std::vector<Int>{4});
  CHECK(e.grading->matches_fundamental_group);
}

TEST_CASE("D4 entry: three incomparable intermediates") {
  const AtlasEntry e = build_entry(parse_cartan_type("D4"), no_grading());
  REQUIRE(e.diagrams.size() == 5);
  CHECK(e.isogeny_edges.size() == 6);
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(e.diagrams[i].center.invariant_factors() == std::vector<Int>{2});
    for (std::size_t j = 1; j <= 3; ++j)
      if (i != j) CHECK_FALSE(isogeny_order(e.diagrams[i].diagram, e.diagrams[j].diagram));
  }
  CHECK_FALSE(e.grading);
}

TEST_CASE("decompose_semisimple") {
  CHECK(decompose_semisimple(parse_cartan_type("G2")).fundamental_group.is_trivial());
  const auto a1a2 = decompose_semisimple(parse_cartan_type("A1xA2"));
  REQUIRE(a1a2.components.size() == 2);
  CHECK(a1a2.component_groups[0].invariant_factors() == std::vector<Int>{2});
  CHECK(a1a2.component_groups[1].invariant_factors() == std::vector<Int>{3});
  CHECK(a1a2.fundamental_group.invariant_factors() == std::vector<Int>{6});
  CHECK(decompose_semisimple(parse_cartan_type("A1xA1")).fundamental_group.invariant_factors() ==
        std::vector<Int>{2, 2});
  for (const char* name : {"A1xA2", "A1xA1", "B3xD4", "A3xA1xG2", "E6xA2"}) {
    CAPTURE(name);
    const CartanType t = parse_cartan_type(name);
    CHECK(decompose_semisimple(t).fundamental_group == fundamental_group(t));
  }
}

TEST_CASE("atlas ordering and serial/parallel agreement") {
  const auto atlas = build_atlas(4);
  const auto serial = build_atlas_serial(4);
  REQUIRE(atlas.size() == serial.size());
  std::vector<std::string> names;
  for (const auto& e : atlas) names.push_back(format_cartan_type(e.cartan_type));
  CHECK(names == std::vector<std::string>{"A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"});
  CHECK(dump(atlas_to_json(atlas, 4, kDefaultBound)) == dump(atlas_to_json(serial, 4, kDefaultBound)));
  for (const auto& e : atlas) {
    CAPTURE(format_cartan_type(e.cartan_type));
    CHECK_FALSE(e.error);
    REQUIRE(e.grading);
    CHECK(e.grading->matches_fundamental_group);
    CHECK(e.grading->free_rank == 0);
  }
}

TEST_CASE("a failing stage is recorded in the entry") {
  // (Z/2)^7 has far more than 64 subgroups
  AtlasOptions o = no_grading();
  const AtlasEntry e = build_entry(parse_cartan_type("A1xA1xA1xA1xA1xA1xA1"), o);
  REQUIRE(e.error);
  CHECK(e.fundamental_group.order() == 128);
  const Json j = to_json(e);
  CHECK(j.contains("error"));

  o.enumeration_cap = 2;
  CHECK(build_entry(parse_cartan_type("A3"), o).error);
  CHECK_FALSE(to_json(build_entry(parse_cartan_type("A1"), o)).contains("error"));
}

TEST_CASE("entry JSON layout") {
  const Json j = to_json(build_entry(parse_cartan_type("A3")));
  CHECK(j["type"] == "A3");
  CHECK(j["fundamental_group"] == Json::array({4}));
  REQUIRE(j["diagrams"].size() == 3);
  CHECK(j["diagrams"][0]["center"] == Json::array({4}));
  CHECK(j["diagrams"][1]["center"] == Json::array({2}));
  CHECK(j["diagrams"][2]["center"] == Json::array());
  CHECK(j["isogeny_edges"] == Json::parse("[[0,1],[1,2]]"));
  CHECK(j["grading"]["matches_fundamental_group"] == true);
}
