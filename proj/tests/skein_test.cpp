#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "skeinf/skein.hpp"

using namespace skeinf;

namespace {

Diagram hopf_plus() {
  return Diagram({{1, 3, 2, 4, 1}, {4, 2, 3, 1, 1}}, 0);
}

Diagram trefoil() {
  return Diagram({{1, 2, 4, 5, 1}, {3, 4, 6, 1, 1}, {5, 6, 2, 3, 1}}, 0);
}

Diagram fig8() {
  return parse_pd("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]");
}

Diagram poke_pair() {
  return Diagram({{1, 2, 3, 4, 1}, {2, 1, 4, 3, -1}}, 0);
}

}  // namespace

TEST_CASE("crossingless diagrams bottom out at the unlink formula") {
  CHECK(eval_mono(parse_pd("PD[] O^1")) == coeffs::one());
  CHECK(eval_colored(parse_pd("PD[] O^2"), {0, 1}) == coeffs::inv_wx());
  CHECK(eval_colored(parse_pd("PD[] O^3"), {0, 0, 1}) == unlink_value(3, 2));
  CHECK(eval_colored(parse_pd("PD[] O^4"), {0, 1, 2, 2}) == unlink_value(4, 3));
  CHECK(eval_mono(parse_pd("PD[] O^5")) == unlink_value(5, 1));
  // color labels only matter up to equality
  CHECK(eval_colored(parse_pd("PD[] O^3"), {7, 7, 3}) == unlink_value(3, 2));
}

TEST_CASE("positive hopf link, one color") {
  RatFun expect =
      RatFun::parse_text("(-w + w*t - w*t^2 + w^3*t^2) / (1-t)");
  CHECK(eval_mono(hopf_plus()) == expect);
}

TEST_CASE("right trefoil, derived value and decomposition") {
  RatFun f = eval_mono(trefoil());
  CHECK(f == RatFun::parse_text("w^2 + w^2*t^2 - w^4*t^2"));
  // the relation at a crossing: switch gives the unknot, smooth the hopf
  RatFun rhs = coeffs::tw2() * coeffs::one() +
               coeffs::t_minus_1() * coeffs::w() * eval_mono(hopf_plus());
  CHECK(f == rhs);
}

TEST_CASE("two-color hopf resolves by Va") {
  RatFun f = eval_colored(hopf_plus(), {0, 1});
  RatFun rhs = coeffs::w2() * coeffs::inv_wx() +
               coeffs::w2() * coeffs::t_minus_1() * coeffs::y_over_wx() +
               coeffs::w() * coeffs::t_minus_1();
  CHECK(f == rhs);
  CHECK(eval_colored(hopf_plus(), {7, 3}) == f);
}

TEST_CASE("poke pair is a trivial two-component unlink") {
  CHECK(eval_colored(poke_pair(), {0, 1}) == coeffs::inv_wx());
  CHECK(eval_mono(poke_pair()) == unlink_value(2, 1));
}

TEST_CASE("monochrome values carry no x") {
  for (const Diagram& d : {hopf_plus(), trefoil(), fig8()}) {
    CHECK_NOTHROW(substitute_jones(eval_mono(d)));  // throws if x appears
  }
}

TEST_CASE("value does not depend on arc labels or basepoints") {
  // trefoil with arcs permuted by a |-> 5a mod 7: different traversal order
  auto f = [](int a) { return (a * 5) % 7; };
  Diagram t = trefoil();
  std::vector<Crossing> cs;
  for (const auto& c : t.crossings()) {
    cs.push_back({f(c.ui), f(c.uo), f(c.oi), f(c.oo), c.sign});
  }
  Diagram scrambled(cs, 0);
  scrambled.validate();
  CHECK(eval_mono(scrambled) == eval_mono(trefoil()));

  Diagram shifted = relabel(fig8(), 41);
  CHECK(eval_mono(shifted) == eval_mono(fig8()));

  // swap the roles of the two hopf components
  Diagram swapped({{2, 4, 1, 3, 1}, {3, 1, 4, 2, 1}}, 0);
  swapped.validate();
  CHECK(eval_colored(swapped, {0, 1}) == eval_colored(hopf_plus(), {0, 1}));
}

TEST_CASE("memo keys identify relabeled states, separate different ones") {
  State a = colored(hopf_plus(), {0, 1});
  State b = colored(relabel(hopf_plus(), 10), {0, 1});
  CHECK(memo_key(a) == memo_key(b));
  CHECK(memo_key(colored(hopf_plus(), {1, 0})) == memo_key(a));
  CHECK(memo_key(colored(hopf_plus(), {0, 0})) != memo_key(a));
  CHECK(memo_key(colored(poke_pair(), {0, 1})) != memo_key(a));
  CHECK(memo_key(colored(trefoil(), {0})) !=
        memo_key(colored(fig8(), {0})));
}

TEST_CASE("simplify_state keeps colors on split circles") {
  // smoothing one hopf crossing leaves a kink; its circle keeps the color
  State st = smooth_state(colored(hopf_plus(), {0, 0}), 0);
  CHECK(st.d.crossings().size() == 1);
  State s = simplify_state(st);
  CHECK(s.d.crossings().empty());
  CHECK(s.loops == std::vector<int>{0});
  CHECK_THROWS(smooth_state(colored(hopf_plus(), {0, 1}), 0));
}

TEST_CASE("absorb_loops factors circles off") {
  auto [st, factor] = absorb_loops(colored(parse_pd("PD[] O^3"), {0, 0, 1}));
  CHECK(st.loops.size() == 1);
  CHECK(factor == coeffs::inv_wx() * coeffs::y_over_wx());
  CHECK(factor * coeffs::one() == unlink_value(3, 2));

  // a single unknot is kept, not absorbed
  auto [st1, f1] = absorb_loops(colored(parse_pd("PD[] O^1"), {0}));
  CHECK(st1.loops.size() == 1);
  CHECK(f1 == coeffs::one());

  // iterating the absorption reproduces the closed form
  for (int n = 1; n <= 6; ++n) {
    for (int c = 1; c <= n; ++c) {
      std::vector<int> colors;
      for (int i = 0; i < n; ++i) colors.push_back(std::min(i, c - 1));
      auto [rest, fac] = absorb_loops(colored(parse_pd("PD[] O^" + std::to_string(n)), colors));
      CHECK(rest.loops.size() == 1);
      CHECK(fac == unlink_value(n, c));  // last circle contributes 1
    }
  }
}

TEST_CASE("relation check holds at every crossing, all colorations") {
  for (const Diagram& d : {hopf_plus(), trefoil(), fig8(), poke_pair()}) {
    int n = d.n_components();
    for (const auto& col : all_set_partitions(n)) {
      for (size_t ci = 0; ci < d.crossings().size(); ++ci) {
        CHECK(verify_skein_identity(d, col.block_of, static_cast<int>(ci)));
      }
    }
  }
}

TEST_CASE("connected sums multiply when the joined components share color") {
  Diagram t = trefoil(), h = hopf_plus();
  CHECK(eval_mono(connected_sum(t, 0, t, 0)) == eval_mono(t) * eval_mono(t));
  Diagram ht = connected_sum(h, 1, t, 0);
  CHECK(ht.n_components() == 2);
  CHECK(eval_colored(ht, {0, 1}) ==
        eval_colored(h, {0, 1}) * eval_mono(t));
  CHECK(eval_mono(ht) == eval_mono(h) * eval_mono(t));
}

TEST_CASE("trace records the tree") {
  std::string trace;
  RatFun f = eval_colored(hopf_plus(), std::vector<int>{0, 0}, &trace);
  auto j = nlohmann::json::parse(trace);
  CHECK(j["rule"] == "IV");
  CHECK(j["value"] == f.text());
  CHECK(j["children"].size() == 2);
  CHECK(j["coefficients"].size() == 2);
  std::string vtrace;
  eval_colored(hopf_plus(), std::vector<int>{0, 1}, &vtrace);
  auto jv = nlohmann::json::parse(vtrace);
  CHECK(jv["rule"] == "Va");
  CHECK(jv["children"].size() == 3);
}

TEST_CASE("colored rejects wrong component counts") {
  CHECK_THROWS(eval_colored(hopf_plus(), std::vector<int>{0}));
  CHECK_THROWS(eval_colored(parse_pd("PD[] O^2"), std::vector<int>{0, 1, 2}));
}
