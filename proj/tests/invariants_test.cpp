#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "skeinf/catalog.hpp"
#include "skeinf/invariants.hpp"
#include "skeinf/refvalues.hpp"
#include "skeinf/skein.hpp"

using namespace skeinf;

namespace {

Diagram unlink(int n) { return Diagram(std::vector<Crossing>{}, n); }

RatFun sum_of(const std::vector<RatFun>& vals) {
  RatFun s;
  for (const auto& v : vals) s = s + v;
  return s;
}

}  // namespace

TEST_CASE("multiset sizes and full unlink symmetry") {
  Diagram o3 = unlink(3);

  FMultiset m21 = f_multiset(o3, {2, 1});
  CHECK(m21.c == 2);
  REQUIRE(m21.values.size() == 3);
  RatFun l9 = refvalues::simple("L9");
  for (const auto& v : m21.values) CHECK(v == l9);

  FMultiset m3 = f_multiset(o3, {3});
  REQUIRE(m3.values.size() == 1);
  CHECK(m3.values[0] == refvalues::simple("L8"));

  FMultiset md = f_multiset(o3, {1, 1, 1});
  REQUIRE(md.values.size() == 1);
  CHECK(md.values[0] == refvalues::simple("L26"));

  CHECK_THROWS_AS(f_multiset(o3, {2, 2}), std::invalid_argument);
}

TEST_CASE("multiset is threading-independent") {
  Diagram h = bundled().at("hopf+").diagram();
  CHECK(f_multiset(h, {1, 1}, 1) == f_multiset(h, {1, 1}, 3));
  Diagram a = bundled().at("A").diagram();
  CHECK(f_multiset(a, {2, 2}, 1) == f_multiset(a, {2, 2}, 4));
}

TEST_CASE("all_types enumerates integer partitions coarsest first") {
  CHECK(all_types(1) == std::vector<PartitionType>{{1}});
  CHECK(all_types(4) ==
        std::vector<PartitionType>{
            {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("sigma ladder on the three-component unlink") {
  Diagram o3 = unlink(3);
  CHECK(sigma(o3, 1) == refvalues::simple("L8"));
  RatFun l9 = refvalues::simple("L9");
  CHECK(sigma(o3, 2) == l9 + l9 + l9);
  CHECK(sigma(o3, 3) == RatFun::mono(-2, -2, 0));  // 1/(w^2 x^2)

  CHECK_THROWS_AS(sigma(unlink(2), 2), std::invalid_argument);
  CHECK_THROWS_AS(sigma(o3, 4), std::invalid_argument);
  CHECK_THROWS_AS(sigma(o3, 0), std::invalid_argument);
}

TEST_CASE("compare_pair is reflexive-equal with trivial conjecture") {
  Diagram o3 = unlink(3);
  PairReport rep = compare_pair("O3", o3, "O3", o3, all_types(3));
  CHECK_FALSE(rep.distinguished);
  REQUIRE(rep.per_type.size() == 3);
  for (const auto& vt : rep.per_type) CHECK(vt.equal);
  REQUIRE(rep.sigma.size() == 3);
  for (const auto& s : rep.sigma) CHECK(s.l1 == s.l2);
  REQUIRE(rep.conjecture.has_value());
  CHECK(rep.conjecture->precondition_met);
  CHECK(rep.conjecture->residual == RatFun());

  auto j = nlohmann::json::parse(rep.json());
  CHECK(j.contains("links"));
  CHECK(j.contains("per_type"));
  CHECK(j.contains("sigma"));
  CHECK(j.contains("conjecture"));
  CHECK(j["per_type"].size() == 3);
}

TEST_CASE("compare_pair distinguishes and checks component counts") {
  Diagram o2 = unlink(2);
  Diagram h = bundled().at("hopf+").diagram();
  PairReport rep = compare_pair("O2", o2, "hopf+", h, all_types(2));
  CHECK(rep.distinguished);
  CHECK(rep.sigma.empty());        // sigma ladder is a 3-component notion
  CHECK_FALSE(rep.conjecture.has_value());

  CHECK_THROWS_AS(compare_pair("O2", o2, "O3", unlink(3), {{2}}),
                  std::invalid_argument);
}

TEST_CASE("conjecture residual trivial cases") {
  Diagram o3 = unlink(3);
  auto [met, residual] = conjecture_residual(o3, o3);
  CHECK(met);
  CHECK(residual == RatFun());

  // a chain of two positive clasps: three components, F1 differs from O3
  Diagram h = bundled().at("hopf+").diagram();
  Diagram chain3 = connected_sum(h, 1, h, 0);
  REQUIRE(chain3.n_components() == 3);
  auto [met2, residual2] = conjecture_residual(o3, chain3);
  CHECK_FALSE(met2);

  CHECK_THROWS_AS(conjecture_residual(o3, unlink(2)), std::invalid_argument);
}

TEST_CASE("homflypt relation holds on the small catalog links") {
  for (const char* id : {"unknot", "O2", "O3", "hopf+", "hopf-", "trefoil",
                         "trefoil-", "fig8", "A", "B"}) {
    CAPTURE(id);
    CHECK(homflypt_check(bundled().at(id).diagram()));
  }
}

TEST_CASE("single color does not separate the chain from the star") {
  CHECK(eval_mono(bundled().at("A").diagram()) ==
        eval_mono(bundled().at("B").diagram()));
}

TEST_CASE("reference tables are internally consistent") {
  namespace rv = skeinf::refvalues;

  // the two pairs that share the three-color value
  CHECK(rv::f3("L11n358{0,1}") == rv::f3("L11n418{0,0}"));
  CHECK(rv::f3("L11a467{0,1}") == rv::f3("L11a527{0,0}"));

  // their two-color sums also agree
  CHECK(sum_of(rv::f2("L11n358{0,1}")) == sum_of(rv::f2("L11n418{0,0}")));
  CHECK(sum_of(rv::f2("L11a467{0,1}")) == sum_of(rv::f2("L11a527{0,0}")));

  // while the multisets themselves differ
  CHECK(rv::f2("L11n358{0,1}") != rv::f2("L11n418{0,0}"));
  CHECK(rv::f2("L11a467{0,1}") != rv::f2("L11a527{0,0}"));

  // the displayed sum identity for the pair with distinct three-color values
  CHECK(sum_of(rv::f2("L10n76{1,1}")) - sum_of(rv::f2("L11n425{1,0}")) ==
        rv::f3("L10n76{1,1}") - rv::f3("L11n425{1,0}"));

  // the six tabulated pairs have distinct three-color values
  const char* pairs[6][2] = {
      {"L11n325{1,1}", "L11n424{0,0}"}, {"L11n356{1,0}", "L11n434{0,0}"},
      {"L10n79{1,1}", "L10n95{1,0}"},   {"L11a404{1,1}", "L11a428{0,1}"},
      {"L10n76{1,1}", "L11n425{1,0}"},  {"L11n358{1,1}", "L11n418{1,0}"},
  };
  for (const auto& p : pairs) {
    CAPTURE(p[0]);
    CHECK_FALSE(rv::f3(p[0]) == rv::f3(p[1]));
  }

  CHECK_THROWS_AS(rv::f3("L0"), std::out_of_range);
  CHECK_THROWS_AS(rv::f2("L11n325{1,1}"), std::out_of_range);
  CHECK_THROWS_AS(rv::simple("L999"), std::out_of_range);
}

TEST_CASE("parse_ref understands the reference spellings") {
  namespace rv = skeinf::refvalues;
  CHECK(rv::parse_ref("1") == coeffs::one());
  CHECK(rv::parse_ref("0") == RatFun());
  CHECK(rv::parse_ref("1/(w x)") == RatFun::mono(-1, -1, 0));
  CHECK(rv::parse_ref("(t w^2-1)/((1-t) w)") == unlink_value(2, 1));
  CHECK(rv::parse_ref("(t w^2-1)/((1-t) w^2 x)") == unlink_value(3, 2));
  CHECK(rv::parse_ref("w^2/(x^2 t)") == RatFun::mono(-2, 2, -1));
  // odd (t-1) powers flip the sign, even ones do not
  CHECK(rv::parse_ref("1/(t-1)") == RatFun(Poly::constant(-1), 1));
  CHECK(rv::parse_ref("w^3/(x (t-1)^2)") == RatFun(Poly::mono(-1, 3, 0), 2));
}

TEST_CASE("multiset serializations") {
  FMultiset m = f_multiset(unlink(3), {2, 1});
  CHECK(m.text().find("\n") != std::string::npos);
  auto j = nlohmann::json::parse(m.json());
  CHECK(j["c"] == 2);
  CHECK(j["values"].size() == 3);
}
