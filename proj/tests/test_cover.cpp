#include <doctest.h>

#include "klein/cover.hpp"
#include "klein/errors.hpp"
#include "klein/homomorphism.hpp"
#include "test_util.hpp"

using namespace klein;

namespace {

GroupHom triangle_hom() {
  return parse_hom(canonical_presentation(parse_signature("(1;+;[3];{(3)})")),
                   make_named_group(GroupSpec::dihedral(3)), "x->st,e->ts,a->1,b->1,c1.0->s,c1.1->tst");
}

GroupHom c2_hom(const TopType& t, int row) {
  for (const auto& a : standard_epis_C2(t))
    if (a.row == row) return standard_hom(t, a);
  throw std::logic_error("row not available");
}

CoverSpec trivial_cover(const GroupHom& h) { return CoverSpec(h, trivial_subgroup(h.codomain())); }

std::size_t side_index(const GluedComplex& c, const std::string& label) {
  for (std::size_t i = 0; i < c.polygon().size(); ++i)
    if (c.polygon()[i].label == label) return i;
  throw std::logic_error("no side " + label);
}

// χ - Σ(1-1/m) - ½Σ(1-1/n) from the report's own data.
Rational orbifold_chi_of(const CoverReport& r) {
  Rational chi(r.euler_char);
  for (int m : r.cone_points) chi -= Rational(m - 1, m);
  for (const auto& b : r.boundary_circles)
    for (int n : b.corners) chi -= Rational(n - 1, 2 * n);
  return chi;
}

}  // namespace

TEST_CASE("identity cover has one face") {
  GroupHom h = triangle_hom();
  CoverSpec spec(h, whole_group(h.codomain()));
  GluedComplex c = build_cover(spec);
  CHECK(c.face_count() == 1);
  auto sig = subgroup_signature(spec);
  CHECK(sig.connected());
  CHECK(signatures_equal(sig.signature(), h.domain().signature()));
}

TEST_CASE("reflection sides glue across sheets when the reflection is nontrivial") {
  TopType m(1, false, 1);
  GluedComplex c = build_cover(trivial_cover(c2_hom(m, 1)));
  std::size_t gam = side_index(c, "gam1");
  CHECK(c.face_count() == 2);
  for (std::size_t f = 0; f < 2; ++f) {
    auto p = c.partner({f, gam});
    REQUIRE(p.has_value());
    CHECK(p->face == 1 - f);
    CHECK(p->side == gam);
    CHECK(c.reversing({f, gam}));
  }
  for (std::size_t i = 0; i < c.slot_count(); ++i) {
    Slot s{i / c.sides_per_face(), i % c.sides_per_face()};
    CHECK_FALSE(c.is_boundary(s));
  }
}

TEST_CASE("reflection sides stay boundary when the reflection is in the kernel") {
  // Row 4 (E->t, C->1, A->1) needs k even, so the Möbius band has no such
  // epimorphism; use the two-holed projective plane.
  TopType p2(1, false, 2);
  GluedComplex c = build_cover(trivial_cover(c2_hom(p2, 4)));
  std::size_t gam = side_index(c, "gam1"), eps = side_index(c, "eps1");
  for (std::size_t f = 0; f < 2; ++f) {
    CHECK(c.is_boundary({f, gam}));
    auto p = c.partner({f, eps});
    REQUIRE(p.has_value());
    CHECK(p->face == 1 - f);
  }
}

TEST_CASE("gluing is a fixed-point-free involution on glued slots") {
  for (const auto& s : testutil::signature_grid(1)) {
    if (s.period_cycles().empty() && s.proper_periods().empty()) continue;
    FinGroup c1 = make_named_group(GroupSpec::cyclic(1));
    GroupHom h(canonical_presentation(s), c1, std::vector<Element>(canonical_presentation(s).generators().size(), 0));
    GluedComplex c = build_cover(trivial_cover(h));
    for (std::size_t f = 0; f < c.face_count(); ++f)
      for (std::size_t i = 0; i < c.sides_per_face(); ++i) {
        Slot slot{f, i};
        auto p = c.partner(slot);
        bool fixed = c.polygon()[i].role == SideRole::Fixed;
        CHECK(p.has_value() != fixed);
        if (p) {
          CHECK_FALSE(*p == slot);
          CHECK(c.partner(*p) == slot);
        }
      }
  }
}

TEST_CASE("subgroup of index 3 in the triangle group with boundary") {
  GroupHom h = triangle_hom();
  CoverReport r = cover_report(CoverSpec(h, parse_subgroup(h.codomain(), "s")));
  REQUIRE(r.signature.has_value());
  CHECK(format_signature(*r.signature) == "(7;-;[-];{(-)})");
  CHECK(r.is_surface_group);
  CHECK(r.index == 3);
  CHECK(r.euler_char == -6);
  CHECK(r.components == 1);
  CHECK_FALSE(r.orientable);
  CHECK(r.boundary_circles.size() == 1);
  CHECK(r.orbifold_euler_char == Rational(-6));
}

TEST_CASE("kernel of ω on the Möbius band is a torus") {
  GroupHom w = omega_dd(TopType(1, false, 1));
  CoverReport r = cover_report(trivial_cover(w));
  REQUIRE(r.signature.has_value());
  CHECK(TopType::from_signature(*r.signature) == TopType(1, true, 0));
  CHECK(r.euler_char == 0);
  CHECK(r.orientable);
  CHECK(r.boundary_circles.empty());
}

TEST_CASE("standard doubles of (2;-;3)") {
  TopType t(2, false, 3);
  CHECK(format_signature(subgroup_signature(trivial_cover(c2_hom(t, 2))).signature()) == "(1;+;[-];{(-)^6})");
  CHECK(format_signature(subgroup_signature(trivial_cover(c2_hom(t, 3))).signature()) == "(8;-;[-];{-})");
  CoverSpec id(c2_hom(t, 1), whole_group(make_named_group(GroupSpec::cyclic(2))));
  CHECK(subgroup_signature(id).signature() == t.to_signature());
}

TEST_CASE("signature equality up to rotation and inversion of cycles") {
  CHECK(signatures_equal(parse_signature("(0;+;[-];{(2,3)})"), parse_signature("(0;+;[-];{(3,2)})")));
  CHECK(signatures_equal(parse_signature("(0;+;[-];{(2,3,4)})"), parse_signature("(0;+;[-];{(3,4,2)})")));
  CHECK(signatures_equal(parse_signature("(0;+;[-];{(2,3,4)})"), parse_signature("(0;+;[-];{(2,4,3)})")));
  CHECK(signatures_equal(parse_signature("(0;+;[-];{(2,2),(3)})"), parse_signature("(0;+;[-];{(3),(2,2)})")));
  CHECK_FALSE(signatures_equal(parse_signature("(0;+;[-];{(2,2,3,3)})"), parse_signature("(0;+;[-];{(2,3,2,3)})")));
  CHECK_FALSE(signatures_equal(parse_signature("(1;+;[-];{(2)})"), parse_signature("(1;-;[-];{(2)})")));
}

TEST_CASE("disconnected covers report components with multiplicities") {
  TopType t(2, true, 1);
  FinGroup c2 = make_named_group(GroupSpec::cyclic(2));
  GroupHom trivial = kind_constant_hom(t.to_signature(), c2, 0, 0, 0);
  auto sig = subgroup_signature(trivial_cover(trivial));
  CHECK_FALSE(sig.connected());
  REQUIRE(sig.components.size() == 1);
  CHECK(sig.components[0].second == 2);
  CHECK(sig.components[0].first == t.to_signature());
  CHECK_THROWS_AS(sig.signature(), DomainError);
}

TEST_CASE("spherical triangle group covered by D3 gives a sphere") {
  NecSignature base = parse_signature("(0;+;[2,2,3];{-})");
  FinGroup d3 = make_named_group(GroupSpec::dihedral(3));
  GroupHom h = parse_hom(canonical_presentation(base), d3, "x1->s,x2->t,x3->ts");
  REQUIRE(h.is_valid());
  auto r = cover_report(trivial_cover(h));
  REQUIRE(r.signature.has_value());
  CHECK(*r.signature == TopType(0, true, 0).to_signature());
}

TEST_CASE("identity cover over the signature grid") {
  FinGroup c1 = make_named_group(GroupSpec::cyclic(1));
  for (const auto& s : testutil::signature_grid(2)) {
    Presentation p = canonical_presentation(s);
    GroupHom h(p, c1, std::vector<Element>(p.generators().size(), 0));
    auto sig = subgroup_signature(trivial_cover(h));
    REQUIRE(sig.connected());
    CHECK(signatures_equal(sig.signature(), s));
  }
}

TEST_CASE("exhaustive D3 covers: χ multiplicativity, components and surface flag") {
  FinGroup d3 = make_named_group(GroupSpec::dihedral(3));
  auto subgroups = testutil::all_subgroups(d3);
  std::size_t covers = 0;
  for (const char* base : {"(1;+;[3];{(3)})", "(0;+;[3];{(2,2)})", "(1;-;[-];{(3)})", "(1;-;[2];{(-)})"}) {
    NecSignature s = parse_signature(base);
    Presentation p = canonical_presentation(s);
    testutil::for_each_assignment(p, d3, [&](const GroupHom& h) {
      if (!h.is_valid()) return;
      auto image = h.image_subgroup();
      for (const auto& sub : subgroups) {
        CoverSpec spec(h, sub);
        CoverReport r = cover_report(spec);
        ++covers;
        CHECK(r.index * sub.order() == d3.order());
        CHECK(r.orbifold_euler_char == Rational(static_cast<std::int64_t>(r.index)) * euler_char_orb(s));
        CHECK(orbifold_chi_of(r) == r.orbifold_euler_char);

        CosetSpace cs = right_cosets(d3, sub);
        CHECK(r.components == cs.orbits(image.elements()).size());
        if (h.is_surjective()) CHECK(r.components == 1);

        bool corners_trivial = true;
        for (const auto& b : r.boundary_circles)
          for (int n : b.corners) corners_trivial = corners_trivial && n == 1;
        CHECK(r.is_surface_group == (r.cone_points.empty() && corners_trivial));
      }
    });
  }
  CHECK(covers > 100);
}

TEST_CASE("tower consistency: nested covers multiply χ") {
  for (int g = 1; g <= 4; ++g)
    for (int k = 1; k <= 4; ++k) {
      TopType x(g, false, k);
      GroupHom w = omega_dd(x);
      const FinGroup& v4 = w.codomain();
      CoverReport top = cover_report(trivial_cover(w));
      for (const char* u : {"s", "t", "st"}) {
        CoverReport mid = cover_report(CoverSpec(w, parse_subgroup(v4, u)));
        CHECK(Rational(top.euler_char) == Rational(2) * mid.orbifold_euler_char);
        CHECK(mid.orbifold_euler_char == Rational(2 * x.euler_char()));
      }
    }
}

TEST_CASE("standard double table over the grid") {
  const int factor[] = {0, 4, 0, 2, 2, 0, 0};
  const bool over_nonorientable[] = {true, true, false, false, false, false, false};
  for (int g = 1; g <= 5; ++g)
    for (int k = 1; k <= 5; ++k) {
      TopType t(g, false, k);
      for (const auto& a : standard_epis_C2(t)) {
        CoverReport r = cover_report(trivial_cover(standard_hom(t, a)));
        CHECK(static_cast<int>(r.boundary_circles.size()) == factor[a.row - 1] * k / 2);
        CHECK(r.orientable == over_nonorientable[a.row - 1]);
        CHECK(r.components == 1);
      }
    }
}
