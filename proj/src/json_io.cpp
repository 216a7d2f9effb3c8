#include "klein/json_io.hpp"

#include <sstream>

#include "klein/errors.hpp"

namespace klein {

namespace {

const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::HandleA:
    case GenKind::HandleB: return "handle";
    case GenKind::Glide: return "glide";
    case GenKind::Elliptic: return "elliptic";
    case GenKind::Boundary: return "boundary";
    case GenKind::Reflection: return "reflection";
  }
  return "handle";
}

std::string rational_string(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

}  // namespace

json to_json(const TopType& t) {
  return {{"genus", t.genus}, {"orientable", t.orientable}, {"boundary", t.boundary},
          {"type", format_top_type(t)}};
}

TopType top_type_from_json(const json& j) {
  return TopType(j.at("genus").get<int>(), j.at("orientable").get<bool>(), j.at("boundary").get<int>());
}

json to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators()) {
    json e = {{"name", g.name}, {"kind", kind_name(g.kind)}, {"reverses_orientation", g.reverses_orientation()}};
    if (g.order > 0) e["order"] = g.order;
    gens.push_back(e);
  }
  json rels = json::array();
  for (const auto& r : p.relators()) rels.push_back(format_word(r.word));
  json out = {{"signature", format_signature(p.signature())},
              {"generators", gens},
              {"relators", rels},
              {"surface_symbol", format_surface_symbol(surface_symbol(p.signature()))},
              {"orbifold_euler_char", rational_string(euler_char_orb(p.signature()))}};
  if (p.signature().is_surface()) out["algebraic_genus"] = algebraic_genus(TopType::from_signature(p.signature()));
  return out;
}

json to_json(const CoverReport& r) {
  json boundary = json::array();
  for (const auto& b : r.boundary_circles) boundary.push_back({{"corners", b.corners}});
  return {{"index", r.index},
          {"components", r.components},
          {"euler_char", r.euler_char},
          {"orientable", r.orientable},
          {"boundary", boundary},
          {"cone_points", r.cone_points},
          {"surface_group", r.is_surface_group},
          {"signature", r.signature ? json(format_signature(*r.signature)) : json(nullptr)}};
}

CoverReport cover_report_from_json(const json& j) {
  CoverReport r;
  r.index = j.at("index").get<std::size_t>();
  r.components = j.at("components").get<std::size_t>();
  r.euler_char = j.at("euler_char").get<int>();
  r.orientable = j.at("orientable").get<bool>();
  for (const auto& b : j.at("boundary")) r.boundary_circles.push_back({b.at("corners").get<std::vector<int>>()});
  r.cone_points = j.at("cone_points").get<std::vector<int>>();
  r.is_surface_group = j.at("surface_group").get<bool>();
  if (!j.at("signature").is_null()) r.signature = parse_signature(j.at("signature").get<std::string>());
  return r;
}

json to_json(const DoubleRecord& r) {
  return {{"row", r.row},
          {"assignment", format_assignment(r.assignment)},
          {"boundary", r.boundary},
          {"orientable", r.orientable},
          {"genus", r.genus},
          {"type", format_top_type(r.type())},
          {"label", to_string(r.label)},
          {"components", r.components}};
}

json to_json(const TowerReport& r) {
  json quotients = json::object();
  json fix = json::object();
  for (const auto& q : r.quotients) {
    quotients[to_string(q.involution)] = {{"label", q.label}, {"type", to_json(q.type)}};
    fix[to_string(q.involution)] = r.fix_circle_counts[static_cast<int>(q.involution)];
  }
  return {{"X", to_json(r.x)},
          {"DX", to_json(r.dx)},
          {"quotients", quotients},
          {"fix_circle_counts", fix},
          {"fix_s_cut_components", r.fix_s_cut_components},
          {"fix_s_separating", r.fix_s_separating}};
}

json to_json(const RealCurveType& t) {
  return {{"type", to_json(t.top_type)}, {"algebraic_genus", t.algebraic_genus}};
}

}  // namespace klein
