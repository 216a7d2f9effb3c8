#include <doctest.h>

#include <random>

#include "klein/cover.hpp"
#include "klein/errors.hpp"
#include "klein/homomorphism.hpp"
#include "test_util.hpp"

using namespace klein;

namespace {

const char* kTriangleBase = "(1;+;[3];{(3)})";
const char* kTriangleHom = "x->st,e->ts,a->1,b->1,c1.0->s,c1.1->tst";

GroupHom triangle_hom() {
  return parse_hom(canonical_presentation(parse_signature(kTriangleBase)), make_named_group(GroupSpec::dihedral(3)),
                   kTriangleHom);
}

}  // namespace

TEST_CASE("evaluating words in D3") {
  GroupHom h = triangle_hom();
  const FinGroup& d3 = h.codomain();
  CHECK(h.evaluate(parse_word("x1 e1 a1 b1 a1^-1 b1^-1")) == d3.identity());
  CHECK(h.evaluate(Word{}) == d3.identity());
  CHECK(h.evaluate(parse_word("e1 c1.0 e1^-1 c1.1^-1")) == d3.identity());
  CHECK(h.evaluate(parse_word("e1 c1.0 e1^-1")) == d3.parse_element("tst"));
  CHECK_THROWS_AS(h.evaluate(parse_word("q1")), DomainError);
}

TEST_CASE("validation") {
  GroupHom h = triangle_hom();
  CHECK(h.is_valid());
  CHECK(h.is_surjective());

  FinGroup c2 = make_named_group(GroupSpec::cyclic(2));
  Element t = c2.generator("t");
  GroupHom bad = kind_constant_hom(TopType(1, false, 3).to_signature(), c2, t, 0, 0);
  auto v = bad.violations();
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == RelatorKind::Long);

  GroupHom trivial = kind_constant_hom(TopType(1, false, 3).to_signature(), c2, 0, 0, 0);
  CHECK(trivial.is_valid());
  CHECK_FALSE(trivial.is_surjective());
}

TEST_CASE("hom literals") {
  Presentation p = canonical_presentation(parse_signature(kTriangleBase));
  FinGroup d3 = make_named_group(GroupSpec::dihedral(3));
  CHECK_THROWS_AS(parse_hom(p, d3, "x->st,e->ts"), DomainError);
  CHECK_THROWS_AS(parse_hom(p, d3, "x->st,x1->st,e->ts,a->1,b->1,c1.0->s,c1.1->tst"), DomainError);
  CHECK_THROWS_AS(parse_hom(p, d3, "x st"), SyntaxError);
  CHECK_THROWS_AS(parse_hom(p, d3, "zz->s"), DomainError);
}

TEST_CASE("ω of the Möbius band") {
  GroupHom w = omega_dd(TopType(1, false, 1));
  const FinGroup& v4 = w.codomain();
  CHECK(w.image("d1") == v4.generator("t"));
  CHECK(w.image("e1") == v4.identity());
  CHECK(w.image("c1") == v4.generator("s"));
  CHECK(w.is_valid());
  CHECK(w.is_surjective());
  CHECK_THROWS_AS(omega_dd(TopType(1, true, 1)), DomainError);
  CHECK_THROWS_AS(omega_dd(TopType(2, false, 0)), DomainError);
}

TEST_CASE("a map with image <t> is not surjective onto C2 x C2") {
  FinGroup v4 = make_named_group(GroupSpec::klein_four());
  GroupHom h = kind_constant_hom(TopType(2, false, 0).to_signature(), v4, 0, v4.generator("s"), v4.generator("t"));
  CHECK(h.is_valid());
  CHECK_FALSE(h.is_surjective());
}

TEST_CASE("ω components are reflection parity and orientation parity") {
  TopType t(2, false, 3);
  GroupHom w = omega_dd(t);
  const FinGroup& v4 = w.codomain();
  const Element s = v4.generator("s"), tt = v4.generator("t");
  Presentation p = canonical_presentation(t.to_signature());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Letter> letters;
    int len = static_cast<int>(rng() % 15);
    for (int i = 0; i < len; ++i)
      letters.push_back({p.generators()[rng() % p.generators().size()].name, rng() % 2 ? 1 : -1});
    Word word(letters);
    int reflections = 0;
    for (const auto& l : letters) reflections += p.generator(l.generator).kind == GenKind::Reflection;
    bool refl = reflections % 2;
    bool rev = reverses_orientation(p, word);
    Element e = w.evaluate(word);
    bool s_part = e == s || e == v4.mul(s, tt);
    bool t_part = e == tt || e == v4.mul(s, tt);
    CHECK(s_part == refl);
    CHECK(t_part == (rev != refl));
  }
}

TEST_CASE("standard epimorphism examples") {
  CHECK(standard_epis_C2(TopType(1, false, 2)).size() == 7);
  auto odd = standard_epis_C2(TopType(2, false, 3));
  CHECK(odd.size() == 3);
  for (const auto& a : odd) CHECK_FALSE(a.e);
  auto rows = standard_epis_C2(TopType(1, false, 3));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].row == 1);
  CHECK(rows[1].row == 2);
  CHECK(rows[2].row == 3);
  CHECK(format_assignment(rows[0]) == "E->1 C->t A->t");
  CHECK_THROWS_AS(standard_epis_C2(TopType(1, false, 0)), DomainError);
  CHECK_THROWS_AS(standard_epis_C2(TopType(0, true, 2)), DomainError);
}

TEST_CASE("standard epimorphism count against a brute-force oracle") {
  FinGroup c2 = make_named_group(GroupSpec::cyclic(2));
  for (int g = 1; g <= 6; ++g)
    for (int k = 1; k <= 6; ++k)
      for (bool orient : {false, true}) {
        TopType t(g, orient, k);
        // Evaluate every relator of every constant assignment in C2 by hand:
        // only the long relation can fail, with exponent sum k*e (+ 2g*a).
        std::size_t want = 0;
        for (int e = 0; e < 2; ++e)
          for (int c = 0; c < 2; ++c)
            for (int a = 0; a < 2; ++a) {
              if (e + c + a == 0) continue;
              int long_sum = k * e + (orient ? 0 : 2 * g * a);
              if (long_sum % 2 == 0) ++want;
            }
        auto got = standard_epis_C2(t);
        CHECK(got.size() == want);
        CHECK(got.size() == (k % 2 == 0 ? 7u : 3u));
        for (const auto& a : got) CHECK(standard_hom(t, a).is_valid());
      }
}

TEST_CASE("every relator evaluates to the identity under valid homs") {
  FinGroup d3 = make_named_group(GroupSpec::dihedral(3));
  Presentation p = canonical_presentation(parse_signature(kTriangleBase));
  std::size_t valid = 0;
  testutil::for_each_assignment(p, d3, [&](const GroupHom& h) {
    if (!h.is_valid()) return;
    ++valid;
    for (const auto& r : p.relators()) CHECK(h.evaluate(r.word) == d3.identity());
  });
  CHECK(valid > 0);
}

TEST_CASE("lift of the trivial map on the Möbius band has the kernel of ω") {
  TopType m(1, false, 1);
  FinGroup c1 = make_named_group(GroupSpec::cyclic(1));
  GroupHom trivial = kind_constant_hom(m.to_signature(), c1, 0, 0, 0);
  GroupHom lifted = theta_prime(m.to_signature(), trivial);
  CHECK(lifted.is_valid());
  CHECK(lifted.codomain().order() == 4);
  CHECK(lifted.is_surjective());
  auto k1 = subgroup_signature(CoverSpec(lifted, trivial_subgroup(lifted.codomain())));
  GroupHom w = omega_dd(m);
  auto k2 = subgroup_signature(CoverSpec(w, trivial_subgroup(w.codomain())));
  CHECK(signatures_equal(k1.signature(), k2.signature()));
}

TEST_CASE("an odd link period forces equal kernel marks on adjacent reflections") {
  // (c0 c1)^3 = 1 under the lift needs the third components of c0 and c1 to
  // agree, i.e. both or neither of the two reflections lie in the kernel.
  NecSignature delta = parse_signature("(1;-;[-];{(3)})");
  Presentation p = canonical_presentation(delta);
  std::size_t valid = 0;
  for (auto spec : {GroupSpec::cyclic(2), GroupSpec::klein_four(), GroupSpec::dihedral(3)}) {
    FinGroup g = make_named_group(spec);
    testutil::for_each_assignment(p, g, [&](const GroupHom& h) {
      if (!h.is_valid()) return;
      ++valid;
      CHECK((h.image("c1.0") == g.identity()) == (h.image("c1.1") == g.identity()));
    });
  }
  CHECK(valid > 0);
}

TEST_CASE("an even link period allows one reflection of a corner in the kernel") {
  NecSignature delta = parse_signature("(1;-;[-];{(2,2)})");
  Presentation p = canonical_presentation(delta);
  FinGroup v4 = make_named_group(GroupSpec::klein_four());
  std::size_t bordered = 0, mixed = 0;
  testutil::for_each_assignment(p, v4, [&](const GroupHom& h) {
    if (!h.is_valid() || !h.is_surjective()) return;
    auto kernel = subgroup_signature(CoverSpec(h, trivial_subgroup(v4))).signature();
    if (!kernel.is_surface() || kernel.period_cycles().empty()) return;
    ++bordered;
    mixed += (h.image("c1.0") == v4.identity()) != (h.image("c1.1") == v4.identity());
    if (!kernel.orientable()) CHECK(theta_prime(delta, h).is_valid());
  });
  CHECK(bordered > 0);
  CHECK(mixed > 0);
}

TEST_CASE("lift rejects kernels that are not bordered non-orientable surfaces") {
  GroupHom h = triangle_hom();
  CHECK_THROWS_AS(theta_prime(h.domain().signature(), h), DomainError);
  try {
    theta_prime(h.domain().signature(), h);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
  CHECK_THROWS_AS(theta_prime(parse_signature("(2;+;[-];{(-)})"), h), DomainError);
}
