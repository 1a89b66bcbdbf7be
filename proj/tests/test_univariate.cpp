#include <catch2/catch_amalgamated.hpp>

#include "realdim/parse.hpp"
#include "realdim/rng.hpp"
#include "realdim/univariate.hpp"
#include "support.hpp"

using namespace realdim;
using testsupport::P;

namespace {

UPoly U(const std::string& text) {
  auto ring = make_ring({"t"});
  return upoly_from_mpoly(parse_polynomial(text, ring));
}

bool interval_contains(const IsolatingInterval& iv, const Rational& r) {
  return iv.lo <= r && r <= iv.hi;
}

UPoly random_upoly(RngState& rng, int max_deg) {
  std::vector<Rational> c(static_cast<std::size_t>(rng.uniform_int(1, max_deg)) + 1);
  for (auto& x : c) x = Rational(static_cast<long>(rng.uniform_int(-20, 20)));
  UPoly u(std::move(c));
  return u.is_zero() ? UPoly::t() : u;
}

}  // namespace

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(U("t^2")) == U("t"));
  CHECK(squarefree_part(U("(t^2 - 1)^2 * (t - 2)")) == U("(t^2 - 1)*(t - 2)").monic());
  CHECK(squarefree_part(U("t^2 - 1")) == U("t^2 - 1"));
  CHECK_THROWS_AS(squarefree_part(UPoly::zero()), std::invalid_argument);

  auto ring = make_ring({"x", "y"});
  MPoly m = P("y^2 - 2*y + 1", ring);
  CHECK(squarefree_part(m) == P("y - 1", ring));
}

TEST_CASE("sturm counts") {
  CHECK(sturm_count(U("t^2 - 1"), Rational(-2), Rational(2)) == 2);
  CHECK(sturm_count(U("t^2 - 1"), Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(U("t^2 + 1"), Rational(-10), Rational(10)) == 0);
  CHECK_THROWS_AS(sturm_count(U("t^2 - 1"), Rational(1), Rational(3)), std::invalid_argument);
  CHECK_THROWS_AS(sturm_count(U("t"), Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("isolation of simple examples") {
  auto roots = isolate_real_roots(U("t^2 - 1"));
  REQUIRE(roots.size() == 2);
  CHECK(interval_contains(roots[0], Rational(-1)));
  CHECK(interval_contains(roots[1], Rational(1)));
  CHECK(roots[0].hi < roots[1].lo);

  CHECK(isolate_real_roots(U("t^2 + 1")).empty());
  CHECK(isolate_real_roots(U("(t^2 - 2)*(t^2 - 3)")).size() == 4);
  CHECK(isolate_real_roots(U("7")).empty());

  // multiplicities collapse to one interval per distinct root
  auto dup = isolate_real_roots(U("(t - 1)^3"));
  REQUIRE(dup.size() == 1);
  CHECK(interval_contains(dup[0], Rational(1)));
}

TEST_CASE("sample points") {
  SECTION("fixed intervals from the isolation of t^2 - 1") {
    std::vector<IsolatingInterval> roots{{make_rational(-3, 2), make_rational(-1, 2), {}},
                                         {make_rational(1, 2), make_rational(3, 2), {}}};
    auto plan = sample_points(roots);
    REQUIRE(plan.samples.size() == 3);
    CHECK(plan.samples[0] == make_rational(-5, 2));
    CHECK(plan.samples[1] == Rational(0));
    CHECK(plan.samples[2] == make_rational(5, 2));
  }
  SECTION("no roots") {
    auto plan = sample_points({});
    REQUIRE(plan.samples.size() == 1);
    CHECK(plan.samples[0] == Rational(0));
  }
  SECTION("single root interval [0,1]") {
    auto plan = sample_points({{Rational(0), Rational(1), {}}});
    REQUIRE(plan.samples.size() == 2);
    CHECK(plan.samples[0] == Rational(-1));
    CHECK(plan.samples[1] == Rational(2));
  }
  SECTION("overlapping intervals are rejected") {
    std::vector<IsolatingInterval> bad{{Rational(0), Rational(1), {}},
                                       {Rational(1), Rational(2), {}}};
    CHECK_THROWS_AS(sample_points(bad), std::invalid_argument);
  }
}

TEST_CASE("isolation certificates on random polynomials") {
  RngState rng(RngConfig{.seed = 2024});
  for (int trial = 0; trial < 50; ++trial) {
    UPoly u = random_upoly(rng, 30);
    UPoly sf = squarefree_part(u);
    auto roots = isolate_real_roots(u);

    if (sf.deg() >= 1) {
      SturmChain chain(sf);
      Rational bound = cauchy_root_bound(sf) + 1;
      int total = chain.count(-bound, bound);
      CHECK(static_cast<std::size_t>(total) == roots.size());

      for (const auto& iv : roots) {
        if (iv.exact) {
          CHECK(sign_of(sf.eval(*iv.exact)) == 0);
        } else {
          CHECK(chain.count(iv.lo, iv.hi) == 1);
          // simple roots of a squarefree polynomial change sign
          CHECK(sign_of(sf.eval(iv.lo)) * sign_of(sf.eval(iv.hi)) < 0);
        }
      }
      for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);

      auto plan = sample_points(roots);
      CHECK(plan.samples.size() == roots.size() + 1);
      for (const auto& s : plan.samples) CHECK(sign_of(sf.eval(s)) != 0);
      // consecutive samples bracket exactly one root
      for (std::size_t i = 0; i + 1 < plan.samples.size(); ++i)
        CHECK(chain.count(plan.samples[i], plan.samples[i + 1]) == 1);
    }
  }
}

TEST_CASE("upoly divrem and gcd") {
  UPoly a = U("t^4 - 1");
  UPoly b = U("t^2 - 1");
  auto [q, r] = a.divrem(b);
  CHECK(q == U("t^2 + 1"));
  CHECK(r.is_zero());
  CHECK(upoly_gcd(a, b) == b.monic());
  CHECK(upoly_gcd(U("t^2 + 1"), U("t - 5")).deg() == 0);
  CHECK_THROWS_AS(a.divexact(U("t + 3")), std::logic_error);
}
