#include "klein/reference_cases.hpp"

#include <functional>
#include <sstream>

#include "klein/cover.hpp"
#include "klein/doubles.hpp"
#include "klein/errors.hpp"
#include "klein/homomorphism.hpp"
#include "klein/moduli.hpp"
#include "klein/tower.hpp"

namespace klein {

namespace {

// A check returns an empty string on success, otherwise the failure reason.
using Check = std::function<std::string()>;

struct Case {
  std::string name;
  Check check;
};

std::string expect_type(const std::string& what, const TopType& got, const TopType& want) {
  if (got == want) return {};
  return what + ": got " + format_top_type(got) + ", expected " + format_top_type(want);
}

TopType engine_type(const GroupHom& h, const Subgroup& sub) {
  auto sig = subgroup_signature(CoverSpec(h, sub));
  return TopType::from_signature(sig.signature());
}

TopType engine_type(const GroupHom& h) { return engine_type(h, trivial_subgroup(h.codomain())); }

// Table of standard doubles: B = factor * k / 2, orientability by base class.
constexpr int kBoundaryFactor[] = {0, 4, 0, 2, 2, 0, 0};
constexpr bool kOrientableOverNonOrientable[] = {true, true, false, false, false, false, false};
constexpr bool kOrientableOverOrientable[] = {false, true, true, true, true, false, false};

std::string sweep_surfaces(const Grid& grid, bool include_orientable,
                           const std::function<std::string(const TopType&)>& body) {
  for (int g = 1; g <= grid.gmax; ++g)
    for (int k = 1; k <= grid.kmax; ++k)
      for (bool orient : {false, true}) {
        if (orient && !include_orientable) continue;
        std::string fail = body(TopType(g, orient, k));
        if (!fail.empty()) return fail;
      }
  return {};
}

GroupHom triangle_hom() {
  NecSignature base = parse_signature("(1;+;[3];{(3)})");
  FinGroup d3 = make_named_group(parse_group_spec("d3"));
  return parse_hom(canonical_presentation(base), d3, "x->st,e->ts,a->1,b->1,c1.0->s,c1.1->tst");
}

std::vector<Case> build_cases(const Grid& grid) {
  std::vector<Case> cases;

  cases.push_back({"standard epimorphism counts by parity of k", [grid] {
                     return sweep_surfaces(grid, false, [](const TopType& t) -> std::string {
                       auto n = standard_epis_C2(t).size();
                       std::size_t want = t.boundary % 2 == 0 ? 7 : 3;
                       if (n != want)
                         return format_top_type(t) + ": " + std::to_string(n) + " epimorphisms, expected " +
                                std::to_string(want);
                       return {};
                     });
                   }});

  cases.push_back({"standard double table against the covering engine", [grid] {
                     return sweep_surfaces(grid, true, [](const TopType& t) -> std::string {
                       for (const auto& a : standard_epis_C2(t)) {
                         TopType got = engine_type(standard_hom(t, a));
                         int b = kBoundaryFactor[a.row - 1] * t.boundary / 2;
                         bool o = t.orientable ? kOrientableOverOrientable[a.row - 1]
                                               : kOrientableOverNonOrientable[a.row - 1];
                         if (got.boundary != b || got.orientable != o)
                           return format_top_type(t) + " row " + std::to_string(a.row) + ": engine gives " +
                                  format_top_type(got);
                         if (got.euler_char() != 2 * t.euler_char())
                           return format_top_type(t) + " row " + std::to_string(a.row) + ": χ not doubled";
                       }
                       return {};
                     });
                   }});

  cases.push_back({"double catalog records equal engine signatures", [grid] {
                     return sweep_surfaces(grid, true, [](const TopType& t) -> std::string {
                       for (const auto& r : classify_standard_doubles(t)) {
                         auto fail = expect_type(format_top_type(t) + " row " + std::to_string(r.row),
                                                 engine_type(standard_hom(t, r.assignment)), r.type());
                         if (!fail.empty()) return fail;
                       }
                       return {};
                     });
                   }});

  cases.push_back({"natural double formulas against the engine", [grid] {
                     return sweep_surfaces(grid, false, [](const TopType& t) -> std::string {
                       const int g = t.genus, k = t.boundary;
                       auto recs = classify_standard_doubles(t);
                       auto row = [&](int n) { return standard_hom(t, recs[n - 1].assignment); };
                       std::string fail;
                       if (!(fail = expect_type("complex " + format_top_type(t), engine_type(row(1)),
                                                TopType(g + k - 1, true, 0)))
                                .empty())
                         return fail;
                       if (!(fail = expect_type("orienting " + format_top_type(t), engine_type(row(2)),
                                                TopType(g - 1, true, 2 * k)))
                                .empty())
                         return fail;
                       if (!(fail = expect_type("schottky " + format_top_type(t), engine_type(row(3)),
                                                TopType(2 * g + 2 * k - 2, false, 0)))
                                .empty())
                         return fail;
                       return expect_type("double of doubles " + format_top_type(t), engine_type(omega_dd(t)),
                                          TopType(2 * g + 2 * k - 3, true, 0));
                     });
                   }});

  cases.push_back({"index-3 cover of the (1;+;[3];{(3)}) group in D3", [] {
                     GroupHom h = triangle_hom();
                     FinGroup d3 = h.codomain();
                     CoverReport r = cover_report(CoverSpec(h, parse_subgroup(d3, "s")));
                     std::ostringstream why;
                     if (!r.signature || format_signature(*r.signature) != "(7;-;[-];{(-)})")
                       why << "signature " << (r.signature ? format_signature(*r.signature) : "disconnected") << "; ";
                     if (!r.is_surface_group) why << "not a surface group; ";
                     if (r.index != 3) why << "index " << r.index << "; ";
                     if (r.euler_char != -6) why << "χ " << r.euler_char << "; ";
                     return why.str();
                   }});

  cases.push_back({"Möbius band tower", [] {
                     TowerReport r = build_tower(TopType(1, false, 1));
                     std::string fail = expect_type("DX", r.dx, TopType(1, true, 0));
                     if (fail.empty())
                       fail = expect_type("DX/<s>", r.quotient(Involution::S).type, TopType(0, true, 2));
                     if (fail.empty())
                       fail = expect_type("DX/<t>", r.quotient(Involution::T).type, TopType(2, false, 0));
                     if (fail.empty())
                       fail = expect_type("DX/<st>", r.quotient(Involution::ST).type, TopType(1, true, 0));
                     return fail;
                   }});

  cases.push_back({"projective plane with two holes", [] {
                     TopType p2(1, false, 2);
                     std::string fail = expect_type("complex double", complex_double(p2), TopType(2, true, 0));
                     if (fail.empty()) fail = expect_type("double of doubles", dd_type(p2), TopType(3, true, 0));
                     if (fail.empty()) {
                       TowerReport r = build_tower(p2);
                       if (r.dx.euler_char() != -4 || r.dx.euler_char() != 4 * p2.euler_char())
                         fail = "χ(DX) = " + std::to_string(r.dx.euler_char());
                       else if (!(r.quotient(Involution::ST).type == TopType(2, true, 0) &&
                                  r.quotient(Involution::S).type == TopType(0, true, 4) &&
                                  r.quotient(Involution::T).type == TopType(4, false, 0)))
                         fail = "tower quotients differ";
                     }
                     return fail;
                   }});

  cases.push_back({"standard doubles of (2;-;3)", [] {
                     auto recs = classify_standard_doubles(TopType(2, false, 3));
                     if (recs.size() != 3) return std::string("expected 3 rows");
                     const TopType want[] = {TopType(4, true, 0), TopType(1, true, 6), TopType(8, false, 0)};
                     const DoubleLabel labels[] = {DoubleLabel::Complex, DoubleLabel::Orienting,
                                                   DoubleLabel::Schottky};
                     for (int i = 0; i < 3; ++i) {
                       auto fail = expect_type("row " + std::to_string(i + 1), recs[i].type(), want[i]);
                       if (!fail.empty()) return fail;
                       if (recs[i].label != labels[i]) return "row " + std::to_string(i + 1) + " label";
                     }
                     return std::string();
                   }});

  cases.push_back({"natural doubles of small surfaces", [] {
                     struct Row {
                       std::string what;
                       TopType got, want;
                       int comps, want_comps;
                     };
                     auto od = [](TopType t) { return orienting_double(t); };
                     auto sd = [](TopType t) { return schottky_double(t); };
                     std::vector<Row> rows = {
                         {"complex (1;-;1)", complex_double(TopType(1, false, 1)), TopType(1, true, 0), 1, 1},
                         {"complex (0;+;1)", complex_double(TopType(0, true, 1)), TopType(0, true, 0), 1, 1},
                         {"orienting (2;-;3)", od({2, false, 3}).type, TopType(1, true, 6), od({2, false, 3}).components, 1},
                         {"orienting (2;+;1)", od({2, true, 1}).type, TopType(2, true, 1), od({2, true, 1}).components, 2},
                         {"orienting (3;-;0)", od({3, false, 0}).type, TopType(2, true, 0), od({3, false, 0}).components, 1},
                         {"schottky (1;-;2)", sd({1, false, 2}).type, TopType(4, false, 0), sd({1, false, 2}).components, 1},
                         {"schottky (1;+;2)", sd({1, true, 2}).type, TopType(3, true, 0), sd({1, true, 2}).components, 1},
                         {"schottky (2;-;0)", sd({2, false, 0}).type, TopType(2, false, 0), sd({2, false, 0}).components, 2},
                         {"double of doubles (1;-;1)", dd_type({1, false, 1}), TopType(1, true, 0), 1, 1},
                         {"double of doubles (1;-;2)", dd_type({1, false, 2}), TopType(3, true, 0), 1, 1},
                         {"double of doubles (3;-;2)", dd_type({3, false, 2}), TopType(7, true, 0), 1, 1},
                     };
                     for (const auto& r : rows) {
                       auto fail = expect_type(r.what, r.got, r.want);
                       if (!fail.empty()) return fail;
                       if (r.comps != r.want_comps) return r.what + ": component count " + std::to_string(r.comps);
                     }
                     return std::string();
                   }});

  cases.push_back({"tower fix-circle counts and separating cut", [grid] {
                     return sweep_surfaces(grid, false, [](const TopType& t) -> std::string {
                       TowerReport r = build_tower(t);
                       if (r.fix_circle_counts != std::array<int, 3>{2 * t.boundary, 0, 0})
                         return format_top_type(t) + ": fix counts differ";
                       if (r.fix_s_cut_components != 2)
                         return format_top_type(t) + ": cut leaves " + std::to_string(r.fix_s_cut_components) +
                                " components";
                       return {};
                     });
                   }});

  cases.push_back({"real curve types and ψ-image genus", [] {
                     for (int p = 1; p <= 10; ++p) {
                       auto types = real_curve_types(p);
                       if (static_cast<int>(types.size()) != p + 1) return "p = " + std::to_string(p) + ": count";
                       for (const auto& t : types) {
                         if (t.top_type.boundary == 0) continue;
                         TopType img = psi_image(t);
                         if (img.genus != 2 * p - 1 || !img.orientable || img.boundary != 0)
                           return "ψ" + format_top_type(t.top_type) + " = " + format_top_type(img);
                       }
                     }
                     auto fail = expect_type("ψ(1;-;1)", psi_image({TopType(1, false, 1), 1}), TopType(1, true, 0));
                     if (fail.empty())
                       fail = expect_type("ψ(1;-;2)", psi_image({TopType(1, false, 2), 2}), TopType(3, true, 0));
                     return fail;
                   }});

  cases.push_back({"free involutions on DX", [] {
                     for (int p = 1; p <= 8; ++p)
                       for (const auto& t : real_curve_types(p))
                         if (t.top_type.boundary > 0 && !n_membership_check(t).passed())
                           return "fails for " + format_top_type(t.top_type);
                     return std::string();
                   }});

  cases.push_back({"reflection parity is well defined", [grid] {
                     return sweep_surfaces(grid, false, [](const TopType& t) -> std::string {
                       Presentation p = canonical_presentation(t.to_signature());
                       GroupHom omega = omega_dd(t);
                       Element s = omega.codomain().generator("s");
                       for (const auto& r : p.relators())
                         if (dd_monodromy(t, r.word)) return "relator " + format_word(r.word) + " has odd parity";
                       for (const auto& g : p.generators()) {
                         Word w = parse_word(g.name);
                         bool via_omega = omega.evaluate(w) == s || omega.evaluate(w) == omega.codomain().mul(s, omega.codomain().generator("t"));
                         if (dd_monodromy(t, w) != via_omega) return "generator " + g.name + " disagrees with ω";
                       }
                       return {};
                     });
                   }});

  cases.push_back({"automorphisms lift to the double of doubles", [] {
                     FinGroup trivial = make_named_group(GroupSpec::cyclic(1));
                     TopType mobius(1, false, 1);
                     auto k = lifting_kernel_type(mobius.to_signature(),
                                                  kind_constant_hom(mobius.to_signature(), trivial, 0, 0, 0));
                     std::string fail = expect_type("Möbius DX", k.dx, TopType(1, true, 0));
                     if (!fail.empty()) return fail;
                     TopType base(2, false, 2);
                     int checked = 0;
                     for (const auto& a : standard_epis_C2(base)) {
                       GroupHom h = standard_hom(base, a);
                       TopType x = engine_type(h);
                       if (x.orientable || x.boundary == 0) continue;
                       auto r = lifting_kernel_type(base.to_signature(), h);
                       if (!(r.dx == dd_type(r.x))) return "row " + std::to_string(a.row);
                       ++checked;
                     }
                     if (checked == 0) return std::string("no qualifying epimorphism of (2;-;2)");
                     try {
                       GroupHom h = triangle_hom();
                       lifting_kernel_type(h.domain().signature(), h);
                       return std::string("closed kernel of the D3 epimorphism was accepted");
                     } catch (const DomainError&) {
                     }
                     return std::string();
                   }});

  return cases;
}

}  // namespace

std::vector<CaseResult> run_reference_cases(const Grid& grid) {
  std::vector<CaseResult> out;
  for (const auto& c : build_cases(grid)) {
    CaseResult r;
    r.name = c.name;
    try {
      r.detail = c.check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace klein
