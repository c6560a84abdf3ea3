#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "skeinf/ratfun.hpp"

using namespace skeinf;

namespace {

RatFun random_ratfun(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), coef(-5, 5),
      kk(0, 2);
  Poly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    p.add_term({expo(rng), expo(rng), expo(rng)}, coef(rng));
  }
  return RatFun(p, kk(rng));
}

}  // namespace

TEST_CASE("zero and identity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    RatFun r = random_ratfun(rng);
    CHECK(RatFun() + r == r);
    CHECK(r * RatFun::constant(1) == r);
    CHECK(r - r == RatFun());
  }
}

TEST_CASE("forced (1-t) cancellation in add") {
  // 1/(1-t) + (-t)/(1-t) = 1
  RatFun a(Poly::constant(1), 1);
  RatFun b(Poly::mono(0, 0, 1, -1), 1);
  CHECK(a + b == RatFun::constant(1));
  CHECK((a + b).k() == 0);
}

TEST_CASE("cross-multiplied add") {
  // (t w^2 - 1)/((1-t) w) + 1/(wx) = (x t w^2 - x + 1 - t)/((1-t) w x)
  RatFun l2(Poly::mono(0, 1, 1) - Poly::mono(0, -1, 0), 1);
  RatFun rhs(Poly::mono(0, 1, 1) - Poly::mono(0, -1, 0) +
                 Poly::mono(-1, -1, 0) - Poly::mono(-1, -1, 0) * Poly::mono(0, 0, 1),
             1);
  CHECK(l2 + coeffs::inv_wx() == rhs);
}

TEST_CASE("ring axioms on random values") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    RatFun a = random_ratfun(rng), b = random_ratfun(rng),
           c = random_ratfun(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("equality is a congruence") {
  std::mt19937 rng(13);
  for (int i = 0; i < 20; ++i) {
    RatFun a = random_ratfun(rng), c = random_ratfun(rng);
    RatFun b = a;
    CHECK(a + c == b + c);
    CHECK(a * c == b * c);
  }
}

TEST_CASE("(1-t) division round-trip") {
  std::mt19937 rng(17);
  Poly one_minus_t = Poly::constant(1) - Poly::mono(0, 0, 1);
  for (int i = 0; i < 40; ++i) {
    RatFun p = random_ratfun(rng);
    Poly m = p.num() * one_minus_t;
    auto q = m.div_one_minus_t();
    REQUIRE(q.has_value());
    CHECK(*q == p.num());
  }
  // and something that is not divisible
  CHECK(!Poly::constant(1).div_one_minus_t().has_value());
}

TEST_CASE("canonical form strips (1-t) factors") {
  Poly one_minus_t = Poly::constant(1) - Poly::mono(0, 0, 1);
  Poly p = Poly::mono(1, 2, 1) - Poly::mono(1, 0, 0);  // x t w^2 - x
  RatFun r(p * one_minus_t, 2);
  CHECK(r.k() == 1);
  CHECK(r == coeffs::y());
}

TEST_CASE("skein constants") {
  CHECK(coeffs::c_merge() ==
        RatFun(Poly::constant(1) - Poly::mono(0, 0, -1), 0));
  CHECK(coeffs::c_merge_plus() == coeffs::c_plus() * coeffs::c_merge());
  auto va = coeffs::va();
  CHECK(va[0] == coeffs::w2());
  CHECK(va[1] == coeffs::w2() * coeffs::t_minus_1());
  CHECK(va[2] == coeffs::w() * coeffs::t_minus_1());
  auto vb = coeffs::vb();
  CHECK(vb[0] == coeffs::w2_inv());
  CHECK(vb[1] == coeffs::w2_inv() * coeffs::tinv_minus_1());
  CHECK(vb[2] == coeffs::w_inv() * coeffs::tinv_minus_1());
}

TEST_CASE("y constant") {
  CHECK(coeffs::y().k() == 1);
  CHECK(coeffs::y().num() == Poly::mono(1, 2, 1) - Poly::mono(1, 0, 0));
  // y/(wx) equals the two-circle one-color value (t w^2 - 1)/((1-t) w)
  RatFun l2(Poly::mono(0, 1, 1) - Poly::mono(0, -1, 0), 1);
  CHECK(coeffs::y_over_wx() == l2);
  // (1/(tw) - w) = (1 - 1/t) * y/(wx)
  RatFun lhs = RatFun::mono(0, -1, -1) - RatFun::mono(0, 1, 0);
  CHECK(lhs == coeffs::c_merge() * coeffs::y_over_wx());
}

TEST_CASE("unlink closed form") {
  CHECK(unlink_value(1, 1) == coeffs::one());
  // (c, c) -> (1/(wx))^(c-1)
  for (int c = 1; c <= 5; ++c) {
    RatFun expect = coeffs::one();
    for (int i = 1; i < c; ++i) expect = expect * coeffs::inv_wx();
    CHECK(unlink_value(c, c) == expect);
  }
  // (3, 1) -> (t w^2 - 1)^2 / ((1-t)^2 w^2)
  Poly tw2m1 = Poly::mono(0, 2, 1) - Poly::constant(1);
  CHECK(unlink_value(3, 1) == RatFun(tw2m1 * tw2m1 * Poly::mono(0, -2, 0), 2));
  CHECK_THROWS_AS(unlink_value(2, 3), std::domain_error);
  CHECK_THROWS_AS(unlink_value(2, 0), std::domain_error);
}

TEST_CASE("jones substitution basics") {
  CHECK(substitute_jones(coeffs::one()) == SPoly::mono(0));
  // (t w^2 - 1)/((1-t) w) -> -s - 1/s
  RatFun l2(Poly::mono(0, 1, 1) - Poly::mono(0, -1, 0), 1);
  SPoly expect = SPoly::mono(1, -1) + SPoly::mono(-1, -1);
  CHECK(substitute_jones(l2) == expect);
  CHECK_THROWS_AS(substitute_jones(coeffs::inv_wx()), std::domain_error);
}

TEST_CASE("jones substitution is a ring homomorphism on x-free input") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), coef(-5, 5);
  auto rand_xfree = [&]() {
    Poly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term({0, expo(rng), expo(rng)}, coef(rng));
    return RatFun(p, 0);
  };
  for (int i = 0; i < 30; ++i) {
    RatFun a = rand_xfree(), b = rand_xfree();
    CHECK(substitute_jones(a + b) == substitute_jones(a) + substitute_jones(b));
    CHECK(substitute_jones(a * b) == substitute_jones(a) * substitute_jones(b));
  }
}

TEST_CASE("text form examples") {
  CHECK(RatFun().text() == "0");
  CHECK(RatFun::constant(1).text() == "1");
  CHECK(RatFun::constant(-3).text() == "-3");
  CHECK(coeffs::inv_wx().text() == "1 / (x*w)");
  RatFun l2(Poly::mono(0, 1, 1) - Poly::mono(0, -1, 0), 1);
  CHECK(l2.text() == "(-1 + w^2*t) / ((1-t)*w)");
  CHECK(coeffs::t_minus_1().text() == "-1 + t");
}

TEST_CASE("serialization round-trips bit-exactly") {
  std::mt19937 rng(29);
  std::vector<RatFun> pool = {RatFun(),
                              coeffs::one(),
                              coeffs::y(),
                              coeffs::y_over_wx(),
                              unlink_value(5, 2),
                              coeffs::tinv_minus_1()};
  for (int i = 0; i < 60; ++i) pool.push_back(random_ratfun(rng));
  for (const auto& r : pool) {
    RatFun rt = RatFun::parse_text(r.text());
    CHECK(rt == r);
    CHECK(rt.text() == r.text());
    RatFun rj = RatFun::parse_json(r.json());
    CHECK(rj == r);
    CHECK(rj.json() == r.json());
  }
}

TEST_CASE("parser accepts hand-written forms") {
  CHECK(RatFun::parse_text("t*w^2 - 1") ==
        RatFun(Poly::mono(0, 2, 1) - Poly::constant(1), 0));
  CHECK(RatFun::parse_text("  (t*w^2-1) / ((1-t) * w) ") ==
        RatFun(Poly::mono(0, 1, 1) - Poly::mono(0, -1, 0), 1));
  CHECK(RatFun::parse_text("w^-2") == RatFun::mono(0, -2, 0));
  CHECK(RatFun::parse_text("2*x*t^3") == RatFun::mono(1, 0, 3, 2));
  CHECK_THROWS(RatFun::parse_text("q + 1"));
  CHECK_THROWS(RatFun::parse_text("1 +"));
}

TEST_CASE("big coefficients survive json") {
  Poly p;
  mpz_class big("123456789012345678901234567890");
  p.add_term({1, -2, 3}, big);
  RatFun r(p, 1);
  CHECK(RatFun::parse_json(r.json()) == r);
}
