#include "doctest.h"

#include <stdexcept>

#include "eupair/catalog.hpp"
#include "eupair/int_poly.hpp"
#include "eupair/recurrence.hpp"

using namespace eupair;

namespace {

IntPoly p(const std::string& text) { return poly_from_string(text); }

}  // namespace

TEST_SUITE("recurrence") {

TEST_CASE("catalog shape") {
  CHECK(catalog().size() == 16);
  const CatalogEntry* a = catalog_find("A");
  REQUIRE(a != nullptr);
  CHECK(a->kind == EntryKind::single);
  REQUIRE(a->single.has_value());
  CHECK(a->single->start_index == 0);
  const CatalogEntry* d = catalog_find("D");
  REQUIRE(d != nullptr);
  CHECK(d->kind == EntryKind::derived);
  const CatalogEntry* ceo = catalog_find("CEO");
  REQUIRE(ceo != nullptr);
  CHECK(ceo->kind == EntryKind::pair);
  REQUIRE(ceo->pair.has_value());
  CHECK(ceo->pair->start_index == 1);
  CHECK(catalog_find("nope") == nullptr);
}

TEST_CASE("descent polynomials") {
  PolySeq a = catalog_sequence("A", 5);
  CHECK(a.at(0) == p("1"));
  CHECK(a.at(1) == p("1"));
  CHECK(a.at(2) == p("1 + x"));
  CHECK(a.at(3) == p("1 + 4*x + x^2"));
  CHECK(a.at(4) == p("1 + 11*x + 11*x^2 + x^3"));
  CHECK(a.at(5) == p("1 + 26*x + 66*x^2 + 26*x^3 + x^4"));

  PolySeq b = catalog_sequence("B", 3);
  CHECK(b.at(0) == p("1"));
  CHECK(b.at(1) == p("1 + x"));
  CHECK(b.at(2) == p("1 + 6*x + x^2"));
  CHECK(b.at(3) == p("1 + 23*x + 23*x^2 + x^3"));

  PolySeq d = catalog_sequence("D", 3);
  CHECK(d.at(0) == p("1"));
  CHECK(d.at(1) == p("1"));
  CHECK(d.at(2) == p("1 + 2*x + x^2"));
  CHECK(d.at(3) == p("1 + 11*x + 11*x^2 + x^3"));
}

TEST_CASE("flag statistics polynomials") {
  PolySeq c = catalog_sequence("C", 3);
  CHECK(c.at(0) == p("1"));
  CHECK(c.at(1) == p("1 + x"));
  CHECK(c.at(2) == p("1 + 3*x + 3*x^2 + x^3"));
  CHECK(c.at(3) == p("1 + 7*x + 16*x^2 + 16*x^3 + 7*x^4 + x^5"));
  CHECK(c.at(3)(Int(1)) == 48);  // 2^3 * 3!

  PolySeq l = catalog_sequence("L", 3);
  CHECK(l.at(0) == p("1"));
  CHECK(l.at(1) == p("x"));
  CHECK(l.at(2) == p("x + x^2 + x^3"));
  CHECK(l.at(3) == p("x + 3*x^2 + 7*x^3 + 3*x^4 + x^5"));
}

TEST_CASE("run and peak polynomials") {
  PolySeq t = catalog_sequence("T", 4);
  CHECK(t.at(0) == p("1"));
  CHECK(t.at(1) == p("x"));
  CHECK(t.at(2) == p("x + x^2"));
  CHECK(t.at(3) == p("x + 3*x^2 + 2*x^3"));
  CHECK(t.at(4) == p("x + 7*x^2 + 11*x^3 + 5*x^4"));

  PolySeq r = catalog_sequence("R", 4);
  CHECK(r.start_index == 1);
  CHECK(r.at(1) == p("1 + x"));
  CHECK(r.at(2) == p("1 + 2*x + x^2"));
  CHECK(r.at(3) == p("1 + 4*x + 5*x^2 + 2*x^3"));
  CHECK(r.at(4) == p("1 + 8*x + 18*x^2 + 16*x^3 + 5*x^4"));

  PolySeq w = catalog_sequence("W", 4);
  CHECK(w.start_index == 1);
  CHECK(w.at(1) == p("1"));
  CHECK(w.at(2) == p("2"));
  CHECK(w.at(3) == p("4 + 2*x"));
  CHECK(w.at(4) == p("8 + 16*x"));

  PolySeq wb = catalog_sequence("Wbar", 4);
  CHECK(wb.at(1) == p("1"));
  CHECK(wb.at(2) == p("1 + x"));
  CHECK(wb.at(3) == p("1 + 5*x"));
  CHECK(wb.at(4) == p("1 + 18*x + 5*x^2"));
}

TEST_CASE("signed run polynomials") {
  PolySeq h = catalog_sequence("H", 3);
  CHECK(h.at(0) == p("1"));
  CHECK(h.at(1) == p("1 + x"));
  CHECK(h.at(2) == p("1 + 4*x + 3*x^2"));
  CHECK(h.at(3) == p("1 + 13*x + 23*x^2 + 11*x^3"));

  PolySeq ht = catalog_sequence("Htilde", 3);
  CHECK(ht.start_index == 1);
  CHECK(ht.at(1) == p("x"));
  CHECK(ht.at(2) == p("x + 3*x^2"));
  CHECK(ht.at(3) == p("x + 12*x^2 + 11*x^3"));

  PolySeq bb = catalog_sequence("b", 3);
  CHECK(bb.at(0) == p("x"));
  CHECK(bb.at(1) == p("x + x^2"));
  CHECK(bb.at(2) == p("x + 4*x^2 + 3*x^3"));
  CHECK(bb.at(3) == p("x + 11*x^2 + 23*x^3 + 13*x^4"));
}

TEST_CASE("pair iteration") {
  PairSeq ceo = catalog_pair_sequence("CEO", 3);
  CHECK(ceo.start_index == 1);
  CHECK(ceo.at(1).e == p("1"));
  CHECK(ceo.at(1).o == p("1"));
  CHECK(ceo.at(2).e == p("1 + 3*x"));
  CHECK(ceo.at(2).o == p("3 + x"));
  CHECK(ceo.at(3).e == p("1 + 16*x + 7*x^2"));
  CHECK(ceo.at(3).o == p("7 + 16*x + x^2"));

  PairSeq leo = catalog_pair_sequence("LEO", 3);
  CHECK(leo.at(1).e == p("0"));
  CHECK(leo.at(1).o == p("1"));
  CHECK(leo.at(2).e == p("x"));
  CHECK(leo.at(2).o == p("1 + x"));
  CHECK(leo.at(3).e == p("3*x + 3*x^2"));
  CHECK(leo.at(3).o == p("1 + 7*x + x^2"));

  PairSeq teo = catalog_pair_sequence("TEO", 3);
  CHECK(teo.at(2).e == p("x"));
  CHECK(teo.at(2).o == p("1"));
  CHECK(teo.at(3).e == p("3*x"));
  CHECK(teo.at(3).o == p("1 + 2*x"));

  PairSeq uv = catalog_pair_sequence("UV", 2);
  CHECK(uv.start_index == 0);
  CHECK(uv.at(0).e == p("1"));
  CHECK(uv.at(0).o == p("0"));
  CHECK(uv.at(1).e == p("1"));
  CHECK(uv.at(1).o == p("1"));
  CHECK(uv.at(2).e == p("1 + 3*x"));
  CHECK(uv.at(2).o == p("4"));
}

TEST_CASE("pair parts recombine to the single sequence") {
  PolySeq c = catalog_sequence("C", 8);
  PairSeq ceo = catalog_pair_sequence("CEO", 8);
  for (int n = 1; n <= 8; ++n)
    CHECK(hb_join(ceo.at(n).e, ceo.at(n).o) == c.at(n));

  PolySeq l = catalog_sequence("L", 8);
  PairSeq leo = catalog_pair_sequence("LEO", 8);
  for (int n = 1; n <= 8; ++n)
    CHECK(hb_join(leo.at(n).e, leo.at(n).o) == l.at(n));

  PolySeq t = catalog_sequence("T", 8);
  PairSeq teo = catalog_pair_sequence("TEO", 8);
  for (int n = 1; n <= 8; ++n)
    CHECK(hb_join(teo.at(n).e, teo.at(n).o) == t.at(n));
}

TEST_CASE("sequence guards") {
  const RecurrenceSpec& a = *catalog_find("A")->single;
  CHECK_THROWS_AS(iterate_single(a, -1), std::invalid_argument);
  PolySeq seq = iterate_single(a, 3);
  CHECK(seq.last_index() == 3);
  CHECK_THROWS_AS(seq.at(4), std::out_of_range);
  CHECK_THROWS_AS(seq.at(-1), std::out_of_range);

  const PairSystemSpec& ceo = *catalog_find("CEO")->pair;
  CHECK_THROWS_AS(iterate_pair(ceo, 0), std::invalid_argument);
  PairSeq pseq = iterate_pair(ceo, 2);
  CHECK(pseq.last_index() == 2);
  CHECK_THROWS_AS(pseq.at(3), std::out_of_range);

  CHECK_THROWS_AS(catalog_sequence("nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(catalog_pair_sequence("A", 3), std::invalid_argument);
}

TEST_CASE("pair derivation") {
  const RecurrenceSpec& c = *catalog_find("C")->single;
  PairSystemSpec derived = derive_pair(c);
  CHECK(derived.name == "C-pair");
  CHECK(derived.start_index == 0);
  CHECK(derived.e_initial == p("1"));
  CHECK(derived.o_initial == p("0"));
  // same system as the cataloged pair, up to start data
  const PairSystemSpec& ceo = *catalog_find("CEO")->pair;
  CHECK(derived.p == ceo.p);
  CHECK(derived.q == ceo.q);
  CHECK(derived.r == ceo.r);
  CHECK(derived.u == ceo.u);
  CHECK(derived.v == ceo.v);
  CHECK(derived.w == ceo.w);

  PairSystemSpec lp = derive_pair(*catalog_find("L")->single);
  const PairSystemSpec& leo = *catalog_find("LEO")->pair;
  CHECK(lp.p == leo.p);
  CHECK(lp.u == leo.u);
  CHECK(lp.v == leo.v);
  CHECK(lp.w == leo.w);

  PairSystemSpec tp = derive_pair(*catalog_find("T")->single);
  const PairSystemSpec& teo = *catalog_find("TEO")->pair;
  CHECK(tp.p == teo.p);
  CHECK(tp.u == teo.u);
}

TEST_CASE("derivation rejects an even beta part") {
  for (const char* name : {"A", "B", "W", "Wbar"})
    CHECK_THROWS_AS(derive_pair(*catalog_find(name)->single), std::invalid_argument);
}

TEST_CASE("duality holds for the cataloged systems") {
  DualityReport rep =
      verify_duality(*catalog_find("C")->single, *catalog_find("CEO")->pair, 10);
  CHECK(rep.ok);
  CHECK(rep.checked_from == 1);
  CHECK(rep.checked_to == 10);
  CHECK(!rep.mismatch.has_value());

  CHECK(verify_duality(*catalog_find("L")->single, *catalog_find("LEO")->pair, 10).ok);
  CHECK(verify_duality(*catalog_find("T")->single, *catalog_find("TEO")->pair, 10).ok);
}

TEST_CASE("duality flags a corrupted system") {
  RecurrenceSpec c = *catalog_find("C")->single;
  PairSystemSpec bad = *catalog_find("CEO")->pair;
  bad.w = CoeffFamily::from_poly(IntPoly{2});
  DualityReport rep = verify_duality(c, bad, 6);
  CHECK(!rep.ok);
  REQUIRE(rep.mismatch.has_value());
  CHECK(rep.mismatch->n == 2);
  CHECK(rep.mismatch->single_value == p("1 + 3*x + 3*x^2 + x^3"));
  CHECK(rep.mismatch->joined_value == p("1 + 4*x + 3*x^2 + x^3"));

  // tampered initials are a precondition violation, not a mismatch
  PairSystemSpec wrong_init = *catalog_find("CEO")->pair;
  wrong_init.o_initial = p("2");
  CHECK_THROWS_AS(verify_duality(c, wrong_init, 6), std::invalid_argument);
}

}  // TEST_SUITE
