#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "ssg/rootsys.hpp"

using namespace ssg;

TEST_CASE("parse_cartan_type reads single and product types") {
  CartanType a1 = parse_cartan_type("A1");
  REQUIRE(a1.components().size() == 1);
  CHECK(a1.components()[0] == SimpleType{Family::A, 1});
  CHECK(a1.rank() == 1);

  CartanType bg = parse_cartan_type("B2xG2");
  REQUIRE(bg.components().size() == 2);
  CHECK(bg.components()[0] == SimpleType{Family::B, 2});
  CHECK(bg.components()[1] == SimpleType{Family::G, 2});
  CHECK(bg.rank() == 4);
  CHECK(format_cartan_type(bg) == "B2xG2");

  CHECK(parse_cartan_type("E8").rank() == 8);
  CHECK(parse_cartan_type("A10").rank() == 10);
}

TEST_CASE("parse_cartan_type rejects bad input and names the component") {
  for (const char* bad : {"D3", "H4", "E9", "F3", "G3", "B1", "C1", "A0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_cartan_type(bad), ParseError);
  }
  for (const char* bad : {"", "A", "a3", "A3x", "xA3", "A03", "A3XB2", "A-1", "A3 ", "A3xx B2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_cartan_type(bad), ParseError);
  }
  try {
    parse_cartan_type("A2xD3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("D3") != std::string::npos);
  }
}

TEST_CASE("B2 and C2 stay distinct labels with isomorphic root systems") {
  RootSystem b2(parse_cartan_type("B2")), c2(parse_cartan_type("C2"));
  CHECK_FALSE(b2.cartan_type() == c2.cartan_type());
  CHECK(b2.roots().size() == c2.roots().size());
  // swapping the two nodes transposes the matrix
  CHECK(b2.cartan_matrix()[0][1] == c2.cartan_matrix()[1][0]);
  CHECK(b2.cartan_matrix()[1][0] == c2.cartan_matrix()[0][1]);
}

TEST_CASE("weight grammar") {
  CHECK(parse_weight("1,0,2") == Weight{1, 0, 2});
  CHECK(parse_weight("7") == Weight{7});
  CHECK(parse_weight("-3") == Weight{-3});
  CHECK(format_weight(Weight{1, -2, 0}) == "1,-2,0");
  CHECK_THROWS_AS(parse_weight("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_weight("1,a"), ParseError);
  CHECK_THROWS_AS(parse_weight(""), ParseError);
  CHECK_THROWS_AS(parse_weight("1,2", 3), ParseError);
}

TEST_CASE("Cartan matrices: diagonal 2, nonpositive off-diagonal, symmetrizable") {
  for (const SimpleType& t : irreducible_types_up_to(8)) {
    CAPTURE(format_simple_type(t));
    RootSystem rs(CartanType({t}));
    const auto& a = rs.cartan_matrix();
    const auto d = rs.symmetrizer();
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (std::size_t j = 0; j < rs.rank(); ++j) {
        if (i == j)
          CHECK(a[i][j] == 2);
        else
          CHECK(a[i][j] <= 0);
        CHECK(d[i] * a[i][j] == d[j] * a[j][i]);
        CHECK((a[i][j] == 0) == (a[j][i] == 0));
      }
  }
}

TEST_CASE("root counts: closure matches textbook counts and an independent closure") {
  for (const SimpleType& t : irreducible_types_up_to(8)) {
    CAPTURE(format_simple_type(t));
    RootSystem rs(CartanType({t}));
    CHECK(rs.roots().size() == oracle::known_root_count(t));
    CHECK(rs.positive_roots().size() * 2 == rs.roots().size());

    std::set<std::vector<Int>> mine;
    for (const Root& r : rs.roots()) mine.insert(r.simple_coords);
    CHECK(mine == oracle::root_closure(rs.cartan_matrix()));
  }
  CHECK(RootSystem(parse_cartan_type("A1")).roots().size() == 2);
  CHECK(RootSystem(parse_cartan_type("A2")).roots().size() == 6);
  CHECK(RootSystem(parse_cartan_type("G2")).roots().size() == 12);
}

TEST_CASE("root system invariants") {
  for (const char* name : {"A1", "A3", "B3", "C3", "D5", "G2", "F4", "E6", "B2xG2"}) {
    CAPTURE(name);
    RootSystem rs(parse_cartan_type(name));
    std::set<Weight> all;
    for (const Root& r : rs.roots()) all.insert(r.weight);
    CHECK(all.size() == rs.roots().size());
    for (const Root& r : rs.positive_roots()) {
      CHECK(r.is_positive());
      CHECK(all.count(-r.weight) == 1);
      CHECK_FALSE(std::any_of(rs.positive_roots().begin(), rs.positive_roots().end(),
                              [&](const Root& s) { return s.weight == -r.weight; }));
    }
    // closed under every simple reflection
    for (const Root& r : rs.roots())
      for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(all.count(simple_reflection(rs, i, r.weight)) == 1);
    // the two coordinate systems agree: weight = sum c_j alpha_j
    for (const Root& r : rs.roots()) {
      Weight w = Weight::zero(rs.rank());
      for (std::size_t j = 0; j < rs.rank(); ++j) w += r.simple_coords[j] * rs.simple_root(j);
      CHECK(w == r.weight);
    }
  }
}

TEST_CASE("product root systems live in orthogonal blocks") {
  RootSystem prod(parse_cartan_type("B2xG2"));
  RootSystem b2(parse_cartan_type("B2")), g2(parse_cartan_type("G2"));
  CHECK(prod.roots().size() == b2.roots().size() + g2.roots().size());
  std::set<Weight> expected;
  for (const Root& r : b2.roots()) expected.insert(Weight{r.weight[0], r.weight[1], 0, 0});
  for (const Root& r : g2.roots()) expected.insert(Weight{0, 0, r.weight[0], r.weight[1]});
  std::set<Weight> got;
  for (const Root& r : prod.roots()) got.insert(r.weight);
  CHECK(got == expected);

  const auto comps = irreducible_components(prod.cartan_type());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].first == 0);
  CHECK(comps[1].first == 2);

  // reflections act blockwise
  Weight w{1, -2, 3, 1};
  Weight s = simple_reflection(prod, 2, w);
  Weight s_g2 = simple_reflection(g2, 0, Weight{3, 1});
  CHECK(s == Weight{1, -2, s_g2[0], s_g2[1]});
}

TEST_CASE("simple_reflection") {
  RootSystem a1(parse_cartan_type("A1")), a2(parse_cartan_type("A2"));
  CHECK(simple_reflection(a1, 0, Weight{3}) == Weight{-3});
  CHECK(simple_reflection(a2, 0, Weight{1, 0}) == Weight{-1, 1});
  CHECK(simple_reflection(a2, 1, Weight{0, 0}) == Weight{0, 0});
  CHECK_THROWS_AS(simple_reflection(a2, 2, Weight{1, 0}), std::out_of_range);
}

TEST_CASE("simple reflections are involutions (random weights)") {
  std::mt19937 rng(1234);
  for (const char* name : {"A4", "B3", "C4", "D4", "G2", "F4", "E6", "A1xC3"}) {
    RootSystem rs(parse_cartan_type(name));
    for (int trial = 0; trial < 50; ++trial) {
      Weight w = oracle::random_weight(rng, rs.rank(), -6, 6);
      for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(simple_reflection(rs, i, simple_reflection(rs, i, w)) == w);
    }
  }
}

TEST_CASE("weyl_orbit") {
  RootSystem a2(parse_cartan_type("A2"));
  CHECK(weyl_orbit(a2, Weight{0, 0}) == std::vector<Weight>{Weight{0, 0}});
  CHECK(weyl_orbit(a2, Weight{1, 0}).size() == 3);
  CHECK(weyl_orbit(a2, Weight{1, 1}).size() == 6);
  // orbits of regular weights have |W| elements
  CHECK(weyl_orbit(RootSystem(parse_cartan_type("B3")), Weight{1, 1, 1}).size() == 48);
  CHECK(weyl_orbit(RootSystem(parse_cartan_type("G2")), Weight{1, 1}).size() == 12);
  CHECK(weyl_orbit(RootSystem(parse_cartan_type("F4")), Weight{1, 1, 1, 1}).size() == 1152);
}

TEST_CASE("orbits contain one dominant weight, the dominant representative") {
  std::mt19937 rng(99);
  for (const char* name : {"A3", "B2", "C3", "G2", "D4", "A1xA2"}) {
    RootSystem rs(parse_cartan_type(name));
    for (int trial = 0; trial < 40; ++trial) {
      Weight w = oracle::random_weight(rng, rs.rank(), -4, 4);
      auto orbit = weyl_orbit(rs, w);
      std::vector<Weight> dominant;
      for (const Weight& v : orbit)
        if (v.is_dominant()) dominant.push_back(v);
      REQUIRE(dominant.size() == 1);
      DominantRep rep = dominant_representative(rs, w);
      CHECK(rep.weight == dominant[0]);
      CHECK(std::binary_search(orbit.begin(), orbit.end(), w));
      CHECK(rep.singular == std::any_of(rep.weight.coords().begin(), rep.weight.coords().end(), [](Int c) { return c == 0; }));
    }
  }
}

TEST_CASE("dominant_representative examples") {
  RootSystem a1(parse_cartan_type("A1")), a2(parse_cartan_type("A2"));
  DominantRep d = dominant_representative(a2, Weight{2, 1});
  CHECK(d.weight == Weight{2, 1});
  CHECK(d.sign == 1);
  CHECK_FALSE(d.singular);

  d = dominant_representative(a1, Weight{-3});
  CHECK(d.weight == Weight{3});
  CHECK(d.sign == -1);
  CHECK_FALSE(d.singular);

  CHECK(dominant_representative(a1, Weight{0}).singular);
  // (-1,-1) = w0(1,1) and w0 has length 3
  d = dominant_representative(a2, Weight{-1, -1});
  CHECK(d.weight == Weight{1, 1});
  CHECK(d.sign == -1);
}

TEST_CASE("rho is all ones and half the sum of the positive roots") {
  for (const SimpleType& t : irreducible_types_up_to(8)) {
    CAPTURE(format_simple_type(t));
    RootSystem rs(CartanType({t}));
    Weight sum = Weight::zero(rs.rank());
    for (const Root& r : rs.positive_roots()) sum += r.weight;
    CHECK(sum == 2 * rho(rs));
  }
  CHECK(rho(RootSystem(parse_cartan_type("A1"))) == Weight{1});
  CHECK(rho(RootSystem(parse_cartan_type("A2"))) == Weight{1, 1});
  CHECK(rho(RootSystem(parse_cartan_type("G2"))) == Weight{1, 1});
}

TEST_CASE("root lattice membership") {
  RootSystem a2(parse_cartan_type("A2"));
  CHECK(a2.in_root_lattice(Weight{2, -1}));
  CHECK(a2.in_root_lattice(Weight{1, 1}));
  CHECK_FALSE(a2.in_root_lattice(Weight{1, 0}));
  std::vector<Int> c;
  REQUIRE(a2.root_coords(Weight{1, 1}, c));
  CHECK(c == std::vector<Int>{1, 1});
  RootSystem g2(parse_cartan_type("G2"));
  CHECK(g2.in_root_lattice(Weight{1, 0}));
}
