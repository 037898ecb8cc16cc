#include "doctest.h"

#include <stdexcept>

#include "eupair/egf.hpp"
#include "eupair/int_poly.hpp"
#include "eupair/numeric.hpp"
#include "eupair/rat_poly.hpp"

using namespace eupair;

namespace {

RatPoly rp(const std::string& text) { return RatPoly(poly_from_string(text)); }

}  // namespace

TEST_SUITE("egf") {

TEST_CASE("table construction") {
  EGFTable t(2, {rp("1"), rp("x"), rp("x^2")});
  CHECK(t.order() == 2);
  CHECK(t.entry(1) == rp("x"));
  CHECK_THROWS_AS(t.entry(3), std::out_of_range);
  CHECK_THROWS_AS(EGFTable(3, {rp("1")}), std::invalid_argument);

  EGFTable s = egf_from_sequence({poly_from_string("1"), poly_from_string("1 + x")});
  CHECK(s.order() == 1);
  CHECK(s.entry(1) == rp("1 + x"));
  CHECK_THROWS_AS(egf_from_sequence({}), std::invalid_argument);
}

TEST_CASE("constants and exponentials") {
  EGFTable c = egf_const(rp("3"), 4);
  CHECK(c.entry(0) == rp("3"));
  CHECK(c.entry(3).is_zero());

  EGFTable e = egf_exp_linear(rp("x"), 3);
  CHECK(e.entry(0) == rp("1"));
  CHECK(e.entry(2) == rp("x^2"));
  CHECK(e.entry(3) == rp("x^3"));
}

TEST_CASE("product rule") {
  // e^z * e^z = e^(2z): entry n is 2^n
  EGFTable one = egf_exp_linear(rp("1"), 6);
  EGFTable prod = egf_mul(one, one);
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(prod.entry(n) == RatPoly{rpow(Rat(2), static_cast<unsigned>(n))});
}

TEST_CASE("rescaling z") {
  EGFTable e = egf_exp_linear(rp("x"), 4);
  EGFTable scaled = egf_scale_z(e, rp("2"));
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(scaled.entry(n) == egf_exp_linear(rp("2*x"), 4).entry(n));
}

TEST_CASE("linear operations") {
  EGFTable a = egf_exp_linear(rp("1"), 3);
  EGFTable b = egf_exp_linear(rp("2"), 3);
  CHECK(egf_add(a, b).entry(2) == rp("5"));
  CHECK(egf_sub(b, a).entry(2) == rp("3"));
  CHECK(egf_scale(a, rp("x")).entry(3) == rp("x"));
  std::string dump = egf_dump(a);
  CHECK(dump.find("0: 1") != std::string::npos);
  CHECK(dump.find("3: 1") != std::string::npos);
}

TEST_CASE("identity verification reports the first bad entry") {
  SeriesReport rep =
      verify_series_identity(egf_exp_linear(rp("1"), 4), egf_exp_linear(rp("1"), 4));
  CHECK(rep.equal);
  CHECK(!rep.mismatch.has_value());

  rep = verify_series_identity(egf_exp_linear(rp("1"), 4), egf_exp_linear(rp("2"), 4));
  CHECK(!rep.equal);
  REQUIRE(rep.mismatch.has_value());
  CHECK(rep.mismatch->n == 1);
  CHECK(rep.mismatch->lhs == rp("1"));
  CHECK(rep.mismatch->rhs == rp("2"));

  CHECK_THROWS_AS(
      verify_series_identity(egf_exp_linear(rp("1"), 2), egf_exp_linear(rp("1"), 3)),
      std::invalid_argument);
}

TEST_CASE("closed-form series checks") {
  CHECK(series_check_names().size() == 11);
  for (const std::string& name : series_check_names()) {
    SeriesReport rep = run_series_check(name, 8);
    INFO(name);
    CHECK(rep.equal);
    CHECK(rep.order == 8);
    CHECK(rep.name == name);
  }
  CHECK_THROWS_AS(run_series_check("NOPE", 4), std::invalid_argument);
}

}  // TEST_SUITE
