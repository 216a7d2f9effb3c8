#include "klein/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "klein/cover.hpp"
#include "klein/doubles.hpp"
#include "klein/errors.hpp"
#include "klein/json_io.hpp"
#include "klein/moduli.hpp"
#include "klein/reference_cases.hpp"
#include "klein/tower.hpp"

namespace klein {

namespace {

struct Options {
  std::string input;
  std::string hom;
  std::string group;
  std::string subgroup;
  std::string format = "text";
  std::string grid = "5,5";
  int genus = 0;
};

bool as_json(const Options& o) { return o.format == "json"; }

Grid parse_grid(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw SyntaxError("expected gmax,kmax", 0);
  Grid g;
  try {
    std::size_t used = 0;
    g.gmax = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw SyntaxError("bad gmax", used);
    g.kmax = std::stoi(text.substr(comma + 1), &used);
    if (used != text.size() - comma - 1) throw SyntaxError("bad kmax", comma + 1 + used);
  } catch (const std::logic_error&) {
    throw SyntaxError("expected gmax,kmax", 0);
  }
  if (g.gmax < 1 || g.kmax < 1) throw DomainError("grid bounds must be positive");
  return g;
}

int cmd_parse(const Options& o, std::ostream& out) {
  Presentation p = canonical_presentation(parse_signature(o.input));
  if (as_json(o)) {
    out << to_json(p).dump(2) << '\n';
    return 0;
  }
  json j = to_json(p);
  out << "signature: " << j["signature"].get<std::string>() << '\n'
      << "orbifold euler characteristic: " << j["orbifold_euler_char"].get<std::string>() << '\n';
  if (j.contains("algebraic_genus")) out << "algebraic genus: " << j["algebraic_genus"] << '\n';
  out << "generators:";
  for (const auto& g : p.generators()) out << ' ' << g.name;
  out << "\nrelators:\n";
  for (const auto& r : p.relators()) out << "  " << format_word(r.word) << '\n';
  out << "surface symbol: " << j["surface_symbol"].get<std::string>() << '\n';
  return 0;
}

int cmd_epis(const Options& o, std::ostream& out) {
  TopType t = parse_top_type(o.input);
  auto epis = standard_epis_C2(t);
  if (as_json(o)) {
    json rows = json::array();
    for (const auto& a : epis) rows.push_back({{"row", a.row}, {"assignment", format_assignment(a)}});
    out << json{{"type", to_json(t)}, {"epimorphisms", rows}}.dump(2) << '\n';
    return 0;
  }
  out << "standard epimorphisms of " << format_top_type(t) << ": " << epis.size() << '\n';
  for (const auto& a : epis) out << "  " << a.row << "  " << format_assignment(a) << '\n';
  return 0;
}

int cmd_doubles(const Options& o, std::ostream& out) {
  TopType t = parse_top_type(o.input);
  auto recs = classify_standard_doubles(t);
  if (as_json(o)) {
    json rows = json::array();
    for (const auto& r : recs) rows.push_back(to_json(r));
    json j = {{"type", to_json(t)}, {"doubles", rows}, {"complex_double", to_json(complex_double(t))}};
    auto od = orienting_double(t), sd = schottky_double(t);
    j["orienting_double"] = {{"type", to_json(od.type)}, {"components", od.components}};
    j["schottky_double"] = {{"type", to_json(sd.type)}, {"components", sd.components}};
    if (!t.orientable) j["double_of_doubles"] = to_json(dd_type(t));
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "row  assignment      B  orient  genus  type        label\n";
  for (const auto& r : recs) {
    out << std::left << std::setw(5) << r.row << std::setw(16) << format_assignment(r.assignment)
        << std::setw(3) << r.boundary << std::setw(8) << (r.orientable ? "+" : "-") << std::setw(7) << r.genus
        << std::setw(12) << format_top_type(r.type()) << to_string(r.label) << '\n';
  }
  auto comps = [](int n) { return n == 1 ? std::string() : " x" + std::to_string(n); };
  auto od = orienting_double(t), sd = schottky_double(t);
  out << "complex double:   " << format_top_type(complex_double(t)) << '\n'
      << "orienting double: " << format_top_type(od.type) << comps(od.components) << '\n'
      << "schottky double:  " << format_top_type(sd.type) << comps(sd.components) << '\n';
  if (!t.orientable) out << "double of doubles: " << format_top_type(dd_type(t)) << '\n';
  return 0;
}

int cmd_tower(const Options& o, std::ostream& out) {
  TowerReport r = build_tower(parse_top_type(o.input));
  if (as_json(o)) {
    out << to_json(r).dump(2) << '\n';
    return 0;
  }
  out << format_tower_diagram(r)
      << "fix circles: s " << r.fix_circle_counts[0] << ", t " << r.fix_circle_counts[1] << ", st "
      << r.fix_circle_counts[2] << '\n'
      << "cutting DX along Fix(s): " << r.fix_s_cut_components << " components"
      << (r.fix_s_separating ? " (separating)" : "") << '\n';
  return 0;
}

int cmd_cover(const Options& o, std::ostream& out) {
  NecSignature base = parse_signature(o.input);
  if (o.group.empty()) throw DomainError("--group is required");
  if (o.hom.empty()) throw DomainError("--hom is required");
  FinGroup group = make_named_group(parse_group_spec(o.group));
  GroupHom hom = parse_hom(canonical_presentation(base), group, o.hom);
  if (auto bad = hom.violations(); !bad.empty())
    throw DomainError("the assignment does not respect relator " + format_word(bad.front().word));
  Subgroup sub = o.subgroup.empty() ? trivial_subgroup(group) : parse_subgroup(group, o.subgroup);
  CoverSpec spec(hom, sub);
  CoverReport r = cover_report(spec);
  if (as_json(o)) {
    out << to_json(r).dump(2) << '\n';
    return 0;
  }
  if (r.signature) {
    out << format_signature(*r.signature) << '\n';
  } else {
    for (const auto& [sig, n] : subgroup_signature(spec).components)
      out << n << " x " << format_signature(sig) << '\n';
  }
  out << "index: " << r.index << '\n'
      << "components: " << r.components << '\n'
      << "euler characteristic: " << r.euler_char << '\n'
      << "orientable: " << (r.orientable ? "yes" : "no") << '\n'
      << "boundary circles: " << r.boundary_circles.size() << '\n'
      << "cone points: " << r.cone_points.size() << '\n'
      << "surface group: " << (r.is_surface_group ? "yes" : "no") << '\n';
  return 0;
}

int cmd_moduli(const Options& o, std::ostream& out) {
  auto types = real_curve_types(o.genus);
  json rows = json::array();
  for (const auto& t : types) {
    json row = to_json(t);
    if (t.top_type.boundary > 0) {
      TopType img = psi_image(t);
      MembershipReport m = n_membership_check(t);
      row["psi_image"] = to_json(img);
      row["free_conformal"] = m.free_conformal;
      row["free_anticonformal"] = m.free_anticonformal;
    } else {
      row["psi_image"] = nullptr;
    }
    rows.push_back(row);
  }
  if (as_json(o)) {
    out << json{{"algebraic_genus", o.genus}, {"types", rows}}.dump(2) << '\n';
    return 0;
  }
  out << "type      psi image  genus  free involutions\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(10) << row["type"]["type"].get<std::string>();
    if (row["psi_image"].is_null()) {
      out << "-          -      k = 0, DK undefined\n";
      continue;
    }
    bool both = row["free_conformal"].get<bool>() && row["free_anticonformal"].get<bool>();
    out << std::setw(11) << row["psi_image"]["type"].get<std::string>() << std::setw(7)
        << row["psi_image"]["genus"].get<int>() << (both ? "conformal, anticonformal" : "missing") << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto results = run_reference_cases(parse_grid(o.grid));
  bool ok = true;
  json cases = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    cases.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (as_json(o)) {
    out << json{{"passed", ok}, {"cases", cases}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
      if (!r.passed) out << ": " << r.detail;
      out << '\n';
    }
    std::size_t passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    out << passed << '/' << results.size() << " cases passed\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Doubles of Klein surfaces and NEC group covers", "kleindd"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto add = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  add("parse", "Canonical presentation of an NEC signature", cmd_parse)
      ->add_option("signature", o.input, "NEC signature, e.g. \"(1;-;[-];{(-)})\"")
      ->required();
  add("epis", "Standard epimorphisms onto C2", cmd_epis)
      ->add_option("type", o.input, "Surface type, \"g=2,-,k=3\" or a surface signature")
      ->required();
  add("doubles", "Table of standard doubles and the natural doubles", cmd_doubles)
      ->add_option("type", o.input, "Surface type")
      ->required();
  add("tower", "Double of doubles and its C2 x C2 quotients", cmd_tower)
      ->add_option("type", o.input, "Non-orientable bordered surface type")
      ->required();
  CLI::App* cover = add("cover", "Signature of the subgroup θ⁻¹(H)", cmd_cover);
  cover->add_option("signature", o.input, "NEC signature of the base")->required();
  cover->add_option("--hom", o.hom, "Generator images, e.g. \"x->st,e->ts,a->1\"");
  cover->add_option("--group", o.group, "Target group: c2, cN, klein4, dN");
  cover->add_option("--subgroup", o.subgroup, "Generators of H, e.g. \"s\" (default trivial)");
  add("moduli", "Types of non-separating real curves and their ψ-images", cmd_moduli)
      ->add_option("--genus", o.genus, "Algebraic genus p")
      ->required();
  add("verify-paper", "Replay the reference values", cmd_verify)
      ->add_option("--grid", o.grid, "Sweep bounds gmax,kmax");

  std::vector<const char*> argv{"kleindd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    return action(o, out);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InconsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace klein
