#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eupair/enumeration.hpp"
#include "eupair/int_poly.hpp"

using namespace eupair;

TEST_SUITE("enumeration") {

TEST_CASE("name round trips") {
  for (Family f : {Family::sym, Family::all_signed, Family::even_signed, Family::stirling})
    CHECK(parse_family(to_string(f)) == f);
  CHECK(parse_family("all_signed") == Family::all_signed);  // accepted alias
  CHECK(!parse_family("nope").has_value());
  for (Stat s : {Stat::des_A, Stat::des_B, Stat::des_D, Stat::fdes, Stat::neg, Stat::exc_A,
                 Stat::fexc, Stat::ipk, Stat::lpk, Stat::udrun, Stat::pk, Stat::val,
                 Stat::altrun, Stat::ap, Stat::lap, Stat::fap})
    CHECK(parse_stat(to_string(s)) == s);
  CHECK(!parse_stat("des").has_value());
  for (Filter f : {Filter::none, Filter::first_positive, Filter::last_negative,
                   Filter::stirling_plus, Filter::sym_desc_end})
    CHECK(parse_filter(to_string(f)) == f);
}

TEST_CASE("family sizes") {
  CHECK(family_size(Family::sym, 0) == 1);
  CHECK(family_size(Family::sym, 8) == 40320);
  CHECK(family_size(Family::all_signed, 3) == 48);
  CHECK(family_size(Family::even_signed, 1) == 1);
  CHECK(family_size(Family::even_signed, 3) == 24);
  CHECK(family_size(Family::stirling, 0) == 1);
  CHECK(family_size(Family::stirling, 4) == 105);
}

TEST_CASE("generation matches the closed-form sizes") {
  for (Family f : {Family::sym, Family::all_signed, Family::even_signed, Family::stirling})
    for (int n = 0; n <= 4; ++n) {
      std::vector<Word> all = generate_all(f, n);
      CHECK(Int(all.size()) == family_size(f, n));
      // deterministic and duplicate-free
      std::set<Word> uniq(all.begin(), all.end());
      CHECK(uniq.size() == all.size());
      CHECK(generate_all(f, n) == all);
    }
}

TEST_CASE("generated words have the right shape") {
  for (const Word& w : generate_all(Family::even_signed, 3)) {
    REQUIRE(w.size() == 3);
    CHECK(std::count_if(w.begin(), w.end(), [](int v) { return v < 0; }) % 2 == 0);
  }
  for (const Word& w : generate_all(Family::stirling, 3)) {
    REQUIRE(w.size() == 6);
    // between the two copies of i every letter exceeds i
    for (int i = 1; i <= 3; ++i) {
      auto first = std::find(w.begin(), w.end(), i);
      auto second = std::find(first + 1, w.end(), i);
      for (auto it = first + 1; it != second; ++it) CHECK(*it > i);
    }
  }
}

TEST_CASE("statistic unit values") {
  CHECK(statistic(Stat::des_A, {2, 1, 3}) == 1);
  CHECK(statistic(Stat::des_A, {1, 2, 3}) == 0);
  CHECK(statistic(Stat::des_B, {-1, 2}) == 1);
  CHECK(statistic(Stat::des_B, {1, 2}) == 0);
  CHECK(statistic(Stat::des_B, {-1, -2}) == 2);
  CHECK(statistic(Stat::des_D, {-2, -1}) == 1);
  CHECK(statistic(Stat::fdes, {-1, 2}) == 1);
  CHECK(statistic(Stat::fdes, {2, -1}) == 2);
  CHECK(statistic(Stat::neg, {-1, 2, -3}) == 2);
  CHECK(statistic(Stat::exc_A, {2, 1, 3}) == 1);
  CHECK(statistic(Stat::fexc, {-1, 2}) == 1);
  CHECK(statistic(Stat::ipk, {1, 3, 2}) == 1);
  CHECK(statistic(Stat::ipk, {1, 2, 3}) == 0);
  CHECK(statistic(Stat::lpk, {2, 1, 3}) == 1);
  CHECK(statistic(Stat::udrun, {2, 1, 3}) == 3);
  CHECK(statistic(Stat::udrun, {1, 2, 3}) == 1);
  CHECK(statistic(Stat::pk, {1, -2}) == 1);
  CHECK(statistic(Stat::val, {1, -2}) == 0);
  CHECK(statistic(Stat::val, {-1, 2}) == 1);
  CHECK(statistic(Stat::altrun, {1, -2}) == 2);
  CHECK(statistic(Stat::fap, {1, 1, 2, 2}) == 3);
  CHECK(statistic(Stat::fap, {1, 2, 2, 1}) == 2);
  CHECK(statistic(Stat::fap, {2, 2, 1, 1}) == 1);
  CHECK(statistic(Stat::ap, {1, 2, 2, 1}) == 1);
  CHECK(statistic(Stat::lap, {2, 2, 1, 1}) == 1);
}

TEST_CASE("applicability rules") {
  CHECK(stat_applies(Stat::des_A, Family::sym));
  CHECK(!stat_applies(Stat::des_A, Family::stirling));
  CHECK(!stat_applies(Stat::des_B, Family::sym));
  CHECK(stat_applies(Stat::des_D, Family::even_signed));
  CHECK(!stat_applies(Stat::des_D, Family::all_signed));
  CHECK(stat_applies(Stat::fap, Family::stirling));
  CHECK(filter_applies(Filter::none, Family::sym, 0));
  CHECK(filter_applies(Filter::first_positive, Family::all_signed, 1));
  CHECK(!filter_applies(Filter::first_positive, Family::sym, 3));
  CHECK(!filter_applies(Filter::sym_desc_end, Family::sym, 0));
  CHECK_THROWS_AS(generate(Family::sym, 3, Filter::first_negative, [](const Word&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_all(Family::sym, -1), std::invalid_argument);
}

TEST_CASE("filtered generation") {
  // positive first letter: exactly half the signed words
  CHECK(generate_all(Family::all_signed, 2, Filter::first_positive).size() == 4);
  CHECK(generate_all(Family::all_signed, 2, Filter::last_positive).size() == 4);
  for (const Word& w : generate_all(Family::all_signed, 3, Filter::first_negative))
    CHECK(w.front() < 0);
  // n = 1 end-descent convention: pi(0) = 0, so the one word ascends
  CHECK(generate_all(Family::sym, 1, Filter::sym_asc_end).size() == 1);
  CHECK(generate_all(Family::sym, 1, Filter::sym_desc_end).empty());
  CHECK(generate_all(Family::sym, 3, Filter::sym_desc_end).size() == 3);
  // stirling split: sigma(1) < sigma(2) vs sigma(1) = sigma(2) is a partition
  auto plus = generate_all(Family::stirling, 3, Filter::stirling_plus);
  auto minus = generate_all(Family::stirling, 3, Filter::stirling_minus);
  CHECK(Int(plus.size() + minus.size()) == family_size(Family::stirling, 3));
  for (const Word& w : minus) CHECK(w[0] == w[1]);
}

TEST_CASE("frozen distributions") {
  JointDistribution s3 = joint_distribution(Family::sym, 3, Filter::none, {Stat::des_A});
  CHECK(s3.total() == 6);
  CHECK(stat_poly(s3, Stat::des_A) == IntPoly{1, 4, 1});

  JointDistribution b2 = joint_distribution(Family::all_signed, 2, Filter::none, {Stat::fdes});
  CHECK(stat_poly(b2, Stat::fdes) == IntPoly{1, 3, 3, 1});

  JointDistribution q2 = joint_distribution(Family::stirling, 2, Filter::none, {Stat::fap});
  CHECK(stat_poly(q2, Stat::fap) == IntPoly{0, 1, 1, 1});

  JointDistribution d3 = joint_distribution(Family::even_signed, 3, Filter::none, {Stat::des_D});
  CHECK(stat_poly(d3, Stat::des_D) == IntPoly{1, 11, 11, 1});
}

TEST_CASE("joint counts and q-weighting") {
  JointDistribution joint =
      joint_distribution(Family::all_signed, 2, Filter::none, {Stat::des_B, Stat::neg});
  CHECK(joint.total() == 8);
  CHECK(joint.entries.at({0, 0}) == 1);
  CHECK(joint.entries.at({1, 1}) == 4);
  CHECK(joint.entries.at({2, 2}) == 1);
  CHECK(stat_poly(joint, Stat::des_B) == IntPoly{1, 6, 1});
  CHECK(stat_poly(joint, Stat::des_B, Stat::neg, 1) == IntPoly{1, 6, 1});
  CHECK(stat_poly(joint, Stat::des_B, Stat::neg, 2) == IntPoly{1, 13, 4});
  CHECK_THROWS_AS(stat_poly(joint, Stat::fdes), std::invalid_argument);
}

TEST_CASE("json dump") {
  JointDistribution s2 = joint_distribution(Family::sym, 2, Filter::none, {Stat::des_A});
  std::string j = to_json(s2);
  CHECK(j.find("\"family\":\"sym\"") != std::string::npos);
  CHECK(j.find("\"count\":\"1\"") != std::string::npos);
}

TEST_CASE("sign rotation") {
  CHECK(phi_map({2, 1}) == Word{2, 1});                    // last letter already positive
  CHECK(phi_map({1, -2}) == Word{-2, 1});
  CHECK(phi_map({3, -1, -2}) == Word{-1, -2, 3});
  CHECK(phi_map({2, -3, 1, -4}) == Word{-3, 1, -4, 2});    // rotate at the first drop below zero
  CHECK_THROWS_AS(phi_map({-1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(phi_map({}), std::invalid_argument);

  // bijection onto positive-last words, preserving the prepended-0 descents
  auto domain = generate_all(Family::all_signed, 4, Filter::first_positive);
  std::set<Word> images;
  for (const Word& w : domain) {
    Word img = phi_map(w);
    CHECK(img.back() > 0);
    CHECK(statistic(Stat::des_B, img) == statistic(Stat::des_B, w));
    images.insert(img);
  }
  CHECK(images.size() == domain.size());
  CHECK(images.size() == generate_all(Family::all_signed, 4, Filter::last_positive).size());
}

}  // TEST_SUITE
