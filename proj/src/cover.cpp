#include "klein/cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "klein/errors.hpp"

namespace klein {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<PolygonVertex> classify_vertices(const std::vector<Side>& sides, const Presentation& p) {
  const std::size_t n = sides.size();
  const auto& cycles = p.signature().period_cycles();
  std::vector<PolygonVertex> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Side& prev = sides[(j + n - 1) % n];
    const Side& cur = sides[j];
    const Generator& gp = p.generator(prev.generator);
    const Generator& gc = p.generator(cur.generator);
    if (gp.kind == GenKind::Elliptic && prev.role == SideRole::Target && cur.generator == prev.generator) {
      out[j] = {PolygonVertex::Kind::Cone, gp.order};
    } else if (prev.role == SideRole::Fixed && cur.role == SideRole::Fixed && gp.block == gc.block &&
               gp.position != gc.position) {
      int link = std::max(gp.position, gc.position);
      out[j] = {PolygonVertex::Kind::Corner, cycles[static_cast<std::size_t>(gp.block - 1)]
                                                   [static_cast<std::size_t>(link - 1)]};
    }
  }
  return out;
}

}  // namespace

CoverSpec::CoverSpec(GroupHom hom, Subgroup subgroup)
    : hom_(std::move(hom)), subgroup_(std::move(subgroup)) {
  auto bad = hom_.violations();
  if (!bad.empty())
    throw DomainError("homomorphism does not respect relator " + format_word(bad.front().word));
}

GluedComplex::GluedComplex(std::size_t faces, std::vector<Side> polygon,
                           std::vector<PolygonVertex> vertices)
    : faces_(faces),
      polygon_(std::move(polygon)),
      vertices_(std::move(vertices)),
      partner_(faces_ * polygon_.size(), -1),
      reversing_(faces_ * polygon_.size(), false),
      vertex_parent_(faces_ * std::max<std::size_t>(polygon_.size(), 1)) {
  std::iota(vertex_parent_.begin(), vertex_parent_.end(), 0);
}

std::optional<Slot> GluedComplex::partner(Slot s) const {
  auto p = partner_[index(s)];
  if (p < 0) return std::nullopt;
  auto u = static_cast<std::size_t>(p);
  return Slot{u / polygon_.size(), u % polygon_.size()};
}

void GluedComplex::glue(Slot a, Slot b, bool reversing) {
  auto ia = index(a), ib = index(b);
  if (ia == ib) throw InconsistencyError("a side slot cannot be glued to itself");
  if ((partner_[ia] >= 0 && partner_[ia] != static_cast<std::ptrdiff_t>(ib)) ||
      (partner_[ib] >= 0 && partner_[ib] != static_cast<std::ptrdiff_t>(ia)))
    throw InconsistencyError("side slot glued twice");
  partner_[ia] = static_cast<std::ptrdiff_t>(ib);
  partner_[ib] = static_cast<std::ptrdiff_t>(ia);
  reversing_[ia] = reversing_[ib] = reversing;
}

void GluedComplex::identify_vertices(std::size_t face_a, std::size_t vertex_a, std::size_t face_b,
                                     std::size_t vertex_b) {
  const std::size_t n = polygon_.size();
  auto find = [&](std::size_t x) {
    while (vertex_parent_[x] != x) x = vertex_parent_[x] = vertex_parent_[vertex_parent_[x]];
    return x;
  };
  vertex_parent_[find(face_a * n + vertex_a % n)] = find(face_b * n + vertex_b % n);
}

void GluedComplex::finalize() {
  const std::size_t total = vertex_parent_.size();
  vertex_class_.assign(total, 0);
  std::vector<std::ptrdiff_t> label(total, -1);
  class_count_ = 0;
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t r = i;
    while (vertex_parent_[r] != r) r = vertex_parent_[r];
    if (label[r] < 0) label[r] = static_cast<std::ptrdiff_t>(class_count_++);
    vertex_class_[i] = static_cast<std::size_t>(label[r]);
  }
}

std::size_t GluedComplex::vertex_class(std::size_t face, std::size_t vertex) const {
  const std::size_t n = std::max<std::size_t>(polygon_.size(), 1);
  return vertex_class_[face * n + vertex % n];
}

std::size_t GluedComplex::components_after_cut(const std::function<bool(std::size_t)>& cut) const {
  UnionFind uf(faces_);
  for (std::size_t f = 0; f < faces_; ++f)
    for (std::size_t s = 0; s < polygon_.size(); ++s)
      if (auto p = partner({f, s}); p && !cut(s)) uf.unite(f, p->face);
  std::size_t count = 0;
  for (std::size_t f = 0; f < faces_; ++f)
    if (uf.find(f) == f) ++count;
  return count;
}

GluedComplex build_cover(const CoverSpec& spec) {
  const GroupHom& hom = spec.hom();
  const Presentation& pres = hom.domain();
  const FinGroup& group = hom.codomain();
  CosetSpace cosets = right_cosets(group, spec.subgroup());

  std::vector<Side> polygon = surface_symbol(spec.base());
  std::vector<PolygonVertex> vertices = classify_vertices(polygon, pres);
  const std::size_t n = polygon.size();
  GluedComplex complex(cosets.size(), polygon, vertices);

  for (std::size_t face = 0; face < cosets.size(); ++face) {
    for (std::size_t j = 0; j < n; ++j) {
      const Side& side = polygon[j];
      const Generator& gen = pres.generator(side.generator);
      std::size_t other = cosets.act(face, hom.image(side.generator));
      if (side.role == SideRole::Fixed) {
        // Boundary unless the reflection moves the sheet.
        if (other == face) continue;
        complex.glue({face, j}, {other, j}, true);
        complex.identify_vertices(face, j, other, j);
        complex.identify_vertices(face, j + 1, other, j + 1);
      } else if (side.role == SideRole::Target) {
        // g(σ') = σ: the σ-slot of sheet ω meets the σ'-slot of sheet ω·θ(g).
        auto p = static_cast<std::size_t>(side.partner);
        bool rev = gen.reverses_orientation();
        complex.glue({face, j}, {other, p}, rev);
        if (rev) {
          complex.identify_vertices(face, j, other, p);
          complex.identify_vertices(face, j + 1, other, p + 1);
        } else {
          complex.identify_vertices(face, j, other, p + 1);
          complex.identify_vertices(face, j + 1, other, p);
        }
      }
    }
  }
  complex.finalize();
  return complex;
}

namespace {

struct ClassInfo {
  std::size_t size = 0;  // number of polygon corners in the class
  std::size_t component = 0;
  PolygonVertex::Kind kind = PolygonVertex::Kind::Regular;
  int order = 1;
  int boundary_ends = 0;
};

int exact_quotient(int num, std::size_t den, const char* what) {
  if (den == 0 || num % static_cast<int>(den) != 0) {
    std::ostringstream os;
    os << what << ": " << num << " not divisible by orbit length " << den;
    throw InconsistencyError(os.str());
  }
  return num / static_cast<int>(den);
}

}  // namespace

CoverReport analyze(const GluedComplex& complex, const CoverSpec& spec) {
  const std::size_t faces = complex.face_count();
  const std::size_t n = complex.sides_per_face();

  // Components and orientation signs.
  std::vector<std::size_t> component(faces, SIZE_MAX);
  std::vector<int> sign(faces, 0);
  std::vector<bool> comp_orientable;
  std::size_t comp_count = 0;
  for (std::size_t start = 0; start < faces; ++start) {
    if (component[start] != SIZE_MAX) continue;
    bool orientable = true;
    std::vector<std::size_t> stack{start};
    component[start] = comp_count;
    sign[start] = 1;
    while (!stack.empty()) {
      auto f = stack.back();
      stack.pop_back();
      for (std::size_t s = 0; s < n; ++s) {
        auto p = complex.partner({f, s});
        if (!p) continue;
        int want = complex.reversing({f, s}) ? -sign[f] : sign[f];
        if (component[p->face] == SIZE_MAX) {
          component[p->face] = comp_count;
          sign[p->face] = want;
          stack.push_back(p->face);
        } else if (sign[p->face] != want) {
          orientable = false;
        }
      }
    }
    comp_orientable.push_back(orientable);
    ++comp_count;
  }

  std::vector<ComponentReport> comps(comp_count);
  for (std::size_t c = 0; c < comp_count; ++c) comps[c].orientable = comp_orientable[c];
  for (std::size_t f = 0; f < faces; ++f) ++comps[component[f]].faces;

  // Vertex classes.
  const std::size_t vclasses = complex.vertex_class_count();
  std::vector<ClassInfo> info(vclasses);
  const std::size_t vertex_slots = std::max<std::size_t>(n, 1);
  for (std::size_t f = 0; f < faces; ++f) {
    for (std::size_t v = 0; v < vertex_slots; ++v) {
      auto& ci = info[complex.vertex_class(f, v)];
      ++ci.size;
      ci.component = component[f];
      if (n > 0) {
        ci.kind = complex.polygon_vertices()[v].kind;
        ci.order = complex.polygon_vertices()[v].order;
      }
    }
  }

  // Edges and boundary incidence.
  std::vector<std::size_t> glued_slots(comp_count, 0), boundary_slots(comp_count, 0);
  std::vector<std::vector<std::pair<Slot, int>>> ends(vclasses);  // (slot, 0 = start / 1 = end)
  for (std::size_t f = 0; f < faces; ++f) {
    for (std::size_t s = 0; s < n; ++s) {
      if (complex.partner({f, s})) {
        ++glued_slots[component[f]];
        continue;
      }
      ++boundary_slots[component[f]];
      auto a = complex.vertex_class(f, s), b = complex.vertex_class(f, s + 1);
      ends[a].push_back({{f, s}, 0});
      ends[b].push_back({{f, s}, 1});
      ++info[a].boundary_ends;
      ++info[b].boundary_ends;
    }
  }

  std::vector<std::size_t> vcount(comp_count, 0);
  for (const auto& ci : info) ++vcount[ci.component];

  for (std::size_t c = 0; c < comp_count; ++c) {
    if (glued_slots[c] % 2 != 0) throw InconsistencyError("odd number of glued slots");
    auto edges = glued_slots[c] / 2 + boundary_slots[c];
    comps[c].euler_char = static_cast<int>(vcount[c]) - static_cast<int>(edges) +
                          static_cast<int>(comps[c].faces);
  }

  // Singular points: cone points and corners.
  std::vector<int> corner_order(vclasses, 1);
  for (std::size_t v = 0; v < vclasses; ++v) {
    const auto& ci = info[v];
    if (ci.kind == PolygonVertex::Kind::Cone) {
      int m = exact_quotient(ci.order, ci.size, "cone point");
      if (m > 1) comps[ci.component].cone_points.push_back(m);
    } else if (ci.kind == PolygonVertex::Kind::Corner) {
      if (ci.boundary_ends > 0) {
        corner_order[v] = exact_quotient(ci.order, ci.size, "boundary corner");
      } else {
        int m = exact_quotient(2 * ci.order, ci.size, "interior corner");
        if (m > 1) comps[ci.component].cone_points.push_back(m);
      }
    }
  }

  // Boundary circles.
  for (std::size_t v = 0; v < vclasses; ++v)
    if (!ends[v].empty() && ends[v].size() != 2) {
      std::ostringstream os;
      os << "boundary vertex class " << v << " has " << ends[v].size() << " incident boundary ends";
      throw InconsistencyError(os.str());
    }
  std::vector<bool> visited(complex.slot_count(), false);
  for (std::size_t f = 0; f < faces; ++f) {
    for (std::size_t s = 0; s < n; ++s) {
      if (!complex.is_boundary({f, s}) || visited[f * n + s]) continue;
      BoundaryCircle circle;
      Slot cur{f, s};
      int leave_end = 1;  // we leave `cur` through its end vertex
      while (!visited[cur.face * n + cur.side]) {
        visited[cur.face * n + cur.side] = true;
        std::size_t v = complex.vertex_class(cur.face, cur.side + static_cast<std::size_t>(leave_end));
        if (corner_order[v] > 1) circle.corners.push_back(corner_order[v]);
        const auto& e = ends[v];
        std::pair<Slot, int> here{cur, leave_end};
        const auto& next = (e[0] == here) ? e[1] : e[0];
        cur = next.first;
        leave_end = 1 - next.second;
      }
      comps[component[f]].boundary.push_back(std::move(circle));
    }
  }

  // Signatures and the orbifold Euler characteristic cross-check.
  CoverReport report;
  report.index = faces;
  report.components = comp_count;
  Rational orbifold(0);
  for (auto& c : comps) {
    int b = static_cast<int>(c.boundary.size());
    int genus = c.orientable ? (2 - c.euler_char - b) / 2 : 2 - c.euler_char - b;
    if ((c.orientable && (2 - c.euler_char - b) % 2 != 0) || genus < (c.orientable ? 0 : 1))
      throw InconsistencyError("component has impossible topology: chi=" + std::to_string(c.euler_char) +
                               " boundary=" + std::to_string(b));
    std::vector<PeriodCycle> cycles;
    for (const auto& circle : c.boundary) cycles.push_back(circle.corners);
    c.signature = NecSignature(genus, c.orientable ? Sign::Plus : Sign::Minus, c.cone_points, cycles);
    std::sort(c.cone_points.begin(), c.cone_points.end());

    report.euler_char += c.euler_char;
    report.orientable = report.orientable && c.orientable;
    report.boundary_circles.insert(report.boundary_circles.end(), c.boundary.begin(), c.boundary.end());
    report.cone_points.insert(report.cone_points.end(), c.cone_points.begin(), c.cone_points.end());
    orbifold += euler_char_orb(c.signature);
  }
  std::sort(report.cone_points.begin(), report.cone_points.end());
  report.is_surface_group =
      report.cone_points.empty() &&
      std::all_of(report.boundary_circles.begin(), report.boundary_circles.end(),
                  [](const BoundaryCircle& bc) { return bc.corners.empty(); });
  report.orbifold_euler_char = orbifold;
  if (comp_count == 1) report.signature = comps[0].signature;
  report.component_reports = std::move(comps);

  Rational expected = Rational(static_cast<std::int64_t>(faces)) * euler_char_orb(spec.base());
  if (orbifold != expected) {
    std::ostringstream os;
    os << "Euler characteristic mismatch: complex gives " << orbifold << ", index * chi_orb(base) = "
       << expected << " (base " << format_signature(spec.base()) << ", index " << faces << ")";
    throw InconsistencyError(os.str());
  }
  return report;
}

CoverReport cover_report(const CoverSpec& spec) { return analyze(build_cover(spec), spec); }

const NecSignature& SubgroupSignature::signature() const {
  if (!connected()) throw DomainError("cover is disconnected; use the per-component signatures");
  return components[0].first;
}

SubgroupSignature subgroup_signature(const CoverSpec& spec) {
  CoverReport report = cover_report(spec);
  SubgroupSignature out;
  for (const auto& c : report.component_reports) {
    auto it = std::find_if(out.components.begin(), out.components.end(),
                           [&](const auto& e) { return signatures_equal(e.first, c.signature); });
    if (it == out.components.end())
      out.components.emplace_back(c.signature, 1);
    else
      ++it->second;
  }
  return out;
}

namespace {

PeriodCycle canonical_cycle(const PeriodCycle& c) {
  PeriodCycle best = c;
  PeriodCycle rev(c.rbegin(), c.rend());
  for (const PeriodCycle* base : {&c, static_cast<const PeriodCycle*>(&rev)}) {
    PeriodCycle rot = *base;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      best = std::min(best, rot);
    }
  }
  return best;
}

}  // namespace

bool signatures_equal(const NecSignature& a, const NecSignature& b) {
  if (a.genus() != b.genus() || a.sign() != b.sign() || a.proper_periods() != b.proper_periods() ||
      a.period_cycles().size() != b.period_cycles().size())
    return false;
  auto canon = [](const NecSignature& s) {
    std::vector<PeriodCycle> out;
    for (const auto& c : s.period_cycles()) out.push_back(canonical_cycle(c));
    std::sort(out.begin(), out.end());
    return out;
  };
  return canon(a) == canon(b);
}

}  // namespace klein
