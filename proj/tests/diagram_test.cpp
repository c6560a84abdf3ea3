#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skeinf/diagram.hpp"

using namespace skeinf;

namespace {

// Positive Hopf link: two components {1,3} and {2,4}, both crossings +1.
Diagram hopf_plus() {
  return Diagram({{1, 3, 2, 4, 1}, {4, 2, 3, 1, 1}}, 0);
}

// Right-handed trefoil as the closed three-crossing braid.
Diagram trefoil() {
  return Diagram({{1, 2, 4, 5, 1}, {3, 4, 6, 1, 1}, {5, 6, 2, 3, 1}}, 0);
}

// Two circles one poking through the other trivially (R2 pair).
Diagram poke_pair() {
  return Diagram({{1, 2, 3, 4, 1}, {2, 1, 4, 3, -1}}, 0);
}

int linking_number(const Diagram& d) {
  auto comp = d.arc_component();
  int s = 0;
  for (const auto& c : d.crossings()) {
    if (comp.at(c.ui) != comp.at(c.oi)) s += c.sign;
  }
  return s / 2;
}

}  // namespace

TEST_CASE("crossingless unknot") {
  Diagram d = parse_pd("PD[] O^1");
  CHECK(d.crossings().empty());
  CHECK(d.n_components() == 1);
  CHECK(d.free_loops() == 1);
  CHECK(!pick_crossing(d).has_value());
  CHECK(bad_crossing_count(d) == 0);
}

TEST_CASE("hopf link structure") {
  Diagram d = hopf_plus();
  d.validate();
  CHECK(d.n_components() == 2);
  CHECK(d.crossings().size() == 2);
  CHECK(d.crossings()[0].sign == 1);
  CHECK(d.crossings()[1].sign == 1);
  CHECK(linking_number(d) == 1);
  CHECK(d.writhe() == 2);
}

TEST_CASE("trefoil structure") {
  Diagram d = trefoil();
  d.validate();
  CHECK(d.n_components() == 1);
  CHECK(d.crossings().size() == 3);
  for (const auto& c : d.crossings()) CHECK(c.sign == 1);
  CHECK(pick_crossing(d).has_value());
}

TEST_CASE("pd text round trip") {
  for (const Diagram& d :
       {hopf_plus(), trefoil(), poke_pair(), parse_pd("PD[] O^3")}) {
    Diagram e = parse_pd(d.to_string());
    CHECK(e.pd_tuples() == d.pd_tuples());
    CHECK(e.free_loops() == d.free_loops());
    CHECK(e.crossings() == d.crossings());
    Diagram f = parse_pd(d.to_json());
    CHECK(f.crossings() == d.crossings());
    CHECK(f.free_loops() == d.free_loops());
  }
}

TEST_CASE("parse failures carry the offending arc") {
  CHECK_THROWS_WITH(parse_pd("PD[X[1,2,3,1], X[1,4,2,3]]"),
                    doctest::Contains("arc 1"));
  CHECK_THROWS_WITH(parse_pd("PD[X[1,2,3,4], junk]"),
                    doctest::Contains("unparsed"));
  CHECK_THROWS(parse_pd("nonsense"));
}

TEST_CASE("published-style pd code parses with signs from orientation") {
  // standard figure-eight code: alternating, writhe 0
  Diagram d = parse_pd("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]");
  CHECK(d.crossings().size() == 4);
  CHECK(d.n_components() == 1);
  CHECK(d.writhe() == 0);
}

TEST_CASE("switch is an involution and flips sign") {
  Diagram d = trefoil();
  for (int i = 0; i < 3; ++i) {
    Diagram s = switch_at(d, i);
    CHECK(s.crossings()[i].sign == -d.crossings()[i].sign);
    CHECK(switch_at(s, i).crossings() == d.crossings());
    // component partition unchanged
    CHECK(s.components() == d.components());
  }
}

TEST_CASE("switching both hopf crossings gives the negative hopf") {
  Diagram d = switch_at(switch_at(hopf_plus(), 0), 1);
  CHECK(d.crossings()[0].sign == -1);
  CHECK(d.crossings()[1].sign == -1);
  CHECK(linking_number(d) == -1);
}

TEST_CASE("mirror flips every sign") {
  for (const Diagram& d : {hopf_plus(), trefoil()}) {
    Diagram m = mirror(d);
    for (size_t i = 0; i < d.crossings().size(); ++i) {
      CHECK(m.crossings()[i].sign == -d.crossings()[i].sign);
    }
    CHECK(m.writhe() == -d.writhe());
    m.validate();
  }
}

TEST_CASE("reverse component flips inter-component signs only") {
  Diagram d = reverse_component(hopf_plus(), 1);
  d.validate();
  CHECK(linking_number(d) == -1);
  Diagram t = reverse_component(trefoil(), 0);  // self-crossings keep sign
  CHECK(t.writhe() == 3);
  t.validate();
}

TEST_CASE("smooth changes component count by one") {
  Diagram h = hopf_plus();
  auto [hs, hcyc] = smooth(h, 0);
  CHECK(hs.crossings().size() == 1);
  CHECK(hs.n_components() == 1);  // merge: 2 -> 1
  CHECK(hcyc.empty());
  CHECK(simplify(hs).crossings().empty());
  CHECK(simplify(hs).n_components() == 1);

  Diagram t = trefoil();
  auto [ts, tcyc] = smooth(t, 0);
  CHECK(ts.n_components() == 2);  // split: 1 -> 2
  CHECK(tcyc.empty());
}

TEST_CASE("r1 spot and removal") {
  Diagram kink({{1, 2, 2, 1, 1}}, 0);
  CHECK(r1_spots(kink) == std::vector<int>{0});
  auto [d, cycles] = undo_crossing(kink, 0);
  CHECK(d.crossings().empty());
  CHECK(d.free_loops() == 1);
  REQUIRE(cycles.size() == 1);
  CHECK(simplify(kink).n_components() == 1);
  CHECK(simplify(kink).crossings().empty());
}

TEST_CASE("r2 spot and removal") {
  Diagram d = poke_pair();
  d.validate();
  auto spots = r2_spots(d);
  REQUIRE(spots.size() == 1);
  CHECK(spots[0] == std::pair<int, int>{0, 1});
  auto [e, cycles] = undo_two(d, 0, 1);
  CHECK(e.crossings().empty());
  CHECK(e.free_loops() == 2);
  CHECK(cycles.size() == 2);
  CHECK(simplify(d).crossings().empty());
  CHECK(simplify(d).n_components() == 2);
}

TEST_CASE("trefoil has no r1 or r2 simplification") {
  Diagram d = trefoil();
  CHECK(r1_spots(d).empty());
  CHECK(r2_spots(d).empty());
  CHECK(simplify(d).crossings().size() == 3);
}

TEST_CASE("faces satisfy euler formula") {
  CHECK(faces(trefoil()).size() == 5);     // 3 - 6 + 5 = 2
  CHECK(faces(hopf_plus()).size() == 4);   // 2 - 4 + 4 = 2
  CHECK(euler_ok(trefoil()));
  CHECK(euler_ok(hopf_plus()));
  Diagram fig8 =
      parse_pd("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]");
  CHECK(faces(fig8).size() == 6);
  CHECK(euler_ok(fig8));
}

TEST_CASE("non-planar rotation system is rejected") {
  // hopf arcs rewired so both strands of one component pass over: this
  // combinatorial pattern cannot be drawn with these signs
  CHECK_THROWS_WITH(
      Diagram({{2, 4, 1, 3, 1}, {4, 2, 3, 1, 1}}, 0).validate(),
      doctest::Contains("planar"));
}

TEST_CASE("descending diagrams have no bad crossing") {
  // component {1,3} passes over everywhere
  Diagram d = switch_at(hopf_plus(), 0);
  d.validate();
  CHECK(!pick_crossing(d).has_value());
  CHECK(bad_crossing_count(d) == 0);
}

TEST_CASE("switching the picked crossing decreases the bad count") {
  for (Diagram d : {trefoil(), hopf_plus()}) {
    int guard = 20;
    while (auto pc = pick_crossing(d)) {
      int before = bad_crossing_count(d);
      d = switch_at(d, pc->first);
      CHECK(bad_crossing_count(d) < before);
      REQUIRE(--guard > 0);
    }
  }
}

TEST_CASE("connected sum splices components") {
  Diagram t = trefoil();
  Diagram s = connected_sum(t, 0, t, 0);
  CHECK(s.crossings().size() == 6);
  CHECK(s.n_components() == 1);
  CHECK(s.writhe() == 6);

  Diagram hh = connected_sum(hopf_plus(), 1, trefoil(), 0);
  CHECK(hh.n_components() == 2);
  CHECK(hh.crossings().size() == 5);
}

TEST_CASE("relabel preserves structure") {
  Diagram d = relabel(trefoil(), 100);
  d.validate();
  CHECK(d.n_components() == 1);
  CHECK(d.writhe() == 3);
}
