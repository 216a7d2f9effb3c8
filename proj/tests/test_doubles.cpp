#include <doctest.h>

#include "klein/cover.hpp"
#include "klein/doubles.hpp"
#include "klein/errors.hpp"

using namespace klein;

namespace {

TopType engine_double(const TopType& t, const StandardAssignment& a) {
  GroupHom h = standard_hom(t, a);
  return TopType::from_signature(subgroup_signature(CoverSpec(h, trivial_subgroup(h.codomain()))).signature());
}

}  // namespace

TEST_CASE("doubles of (2;-;3)") {
  auto recs = classify_standard_doubles(TopType(2, false, 3));
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].type() == TopType(4, true, 0));
  CHECK(recs[0].label == DoubleLabel::Complex);
  CHECK(recs[1].type() == TopType(1, true, 6));
  CHECK(recs[1].label == DoubleLabel::Orienting);
  CHECK(recs[2].type() == TopType(8, false, 0));
  CHECK(recs[2].label == DoubleLabel::Schottky);
}

TEST_CASE("doubles of the two-holed projective plane") {
  TopType t(1, false, 2);
  auto recs = classify_standard_doubles(t);
  REQUIRE(recs.size() == 7);
  const DoubleRecord& row4 = recs[3];
  CHECK(row4.row == 4);
  CHECK(row4.boundary == 2);
  CHECK_FALSE(row4.orientable);
  // χ(double) = 2χ(t) = -2 with two boundary circles forces genus 2.
  CHECK(row4.type() == TopType(2, false, 2));
  CHECK(engine_double(t, row4.assignment) == row4.type());
}

TEST_CASE("natural doubles") {
  CHECK(complex_double(TopType(1, false, 2)) == TopType(2, true, 0));
  CHECK(complex_double(TopType(1, false, 1)) == TopType(1, true, 0));
  CHECK(complex_double(TopType(0, true, 1)) == TopType(0, true, 0));

  CHECK(orienting_double(TopType(2, false, 3)) == DoubleType{TopType(1, true, 6), 1});
  CHECK(orienting_double(TopType(2, true, 1)) == DoubleType{TopType(2, true, 1), 2});
  CHECK(orienting_double(TopType(3, false, 0)) == DoubleType{TopType(2, true, 0), 1});
  CHECK(orienting_double(TopType(3, false, 0)).type == complex_double(TopType(3, false, 0)));

  CHECK(schottky_double(TopType(1, false, 2)) == DoubleType{TopType(4, false, 0), 1});
  CHECK(schottky_double(TopType(1, true, 2)) == DoubleType{TopType(3, true, 0), 1});
  CHECK(schottky_double(TopType(2, false, 0)) == DoubleType{TopType(2, false, 0), 2});

  CHECK(dd_type(TopType(1, false, 1)) == TopType(1, true, 0));
  CHECK(dd_type(TopType(1, false, 2)) == TopType(3, true, 0));
  CHECK(dd_type(TopType(3, false, 2)) == TopType(7, true, 0));
  CHECK_THROWS_AS(dd_type(TopType(1, true, 2)), DomainError);
  CHECK_THROWS_AS(dd_type(TopType(2, false, 0)), DomainError);
}

TEST_CASE("double of doubles of (3;-;2) from the engine") {
  GroupHom w = omega_dd(TopType(3, false, 2));
  auto sig = subgroup_signature(CoverSpec(w, trivial_subgroup(w.codomain())));
  CHECK(TopType::from_signature(sig.signature()) == TopType(7, true, 0));
}

TEST_CASE("double invariants over the grid") {
  for (int g = 0; g <= 6; ++g)
    for (int k = 0; k <= 6; ++k)
      for (bool orient : {true, false}) {
        if (!orient && g == 0) continue;
        TopType t(g, orient, k);
        if (algebraic_genus(t) < 0) {
          CHECK_THROWS_AS(complex_double(t), DomainError);
          continue;
        }
        CHECK(complex_double(t).genus == algebraic_genus(t));
        CHECK(complex_double(t).euler_char() == 2 * t.euler_char());
        for (auto d : {orienting_double(t), schottky_double(t)}) {
          if (d.components == 1)
            CHECK(d.type.euler_char() == 2 * t.euler_char());
          else
            CHECK(d.type == t);
        }
        if (!orient && k >= 1) CHECK(dd_type(t).genus == 2 * algebraic_genus(t) - 1);
      }
}

TEST_CASE("catalog agrees with the engine and has one complex row") {
  for (int g = 1; g <= 5; ++g)
    for (int k = 1; k <= 5; ++k)
      for (bool orient : {true, false}) {
        TopType t(g, orient, k);
        auto recs = classify_standard_doubles(t);
        int complex_rows = 0;
        for (const auto& r : recs) {
          CHECK(engine_double(t, r.assignment) == r.type());
          CHECK(r.type().euler_char() == 2 * t.euler_char());
          if (r.label == DoubleLabel::Complex) {
            ++complex_rows;
            CHECK(r.boundary == 0);
            CHECK(r.orientable);
            CHECK(r.type() == complex_double(t));
          }
          if (r.label == DoubleLabel::Orienting) CHECK(r.type() == orienting_double(t).type);
          if (r.label == DoubleLabel::Schottky) CHECK(r.type() == schottky_double(t).type);
        }
        CHECK(complex_rows == 1);
        int closed_orientable = 0;
        for (const auto& r : recs) closed_orientable += r.boundary == 0 && r.orientable;
        CHECK(closed_orientable == 1);
      }
}

TEST_CASE("classification refuses closed and genus-zero surfaces") {
  CHECK_THROWS_AS(classify_standard_doubles(TopType(2, false, 0)), DomainError);
  CHECK_THROWS_AS(classify_standard_doubles(TopType(0, true, 3)), DomainError);
}
