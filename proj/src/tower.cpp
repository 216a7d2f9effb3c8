#include "klein/tower.hpp"

#include <sstream>

#include "klein/cover.hpp"
#include "klein/doubles.hpp"
#include "klein/errors.hpp"

namespace klein {

std::string to_string(Involution u) {
  switch (u) {
    case Involution::S: return "s";
    case Involution::T: return "t";
    case Involution::ST: return "st";
  }
  return "s";
}

namespace {

TopType connected_type(const CoverSpec& spec, const char* what) {
  auto sig = subgroup_signature(spec);
  if (!sig.connected()) throw InconsistencyError(std::string(what) + " is disconnected");
  return TopType::from_signature(sig.signature());
}

std::string match_label(const TopType& q, const TopType& x) {
  if (q == orienting_double(x).type) return "OX";
  if (q == schottky_double(x).type) return "SX";
  if (q == complex_double(x)) return "X+";
  throw InconsistencyError("tower quotient " + format_top_type(q) + " matches no natural double of " +
                           format_top_type(x));
}

}  // namespace

TowerReport build_tower(const TopType& t) {
  if (t.orientable || t.boundary < 1 || t.genus < 1)
    throw DomainError("the double of doubles needs a non-orientable Klein surface with non-empty boundary, got " +
                      format_top_type(t));
  GroupHom omega = omega_dd(t);
  const FinGroup& v4 = omega.codomain();
  const Element s = v4.generator("s"), tt = v4.generator("t");
  const Element involutions[] = {s, tt, v4.mul(s, tt)};

  TowerReport r;
  r.x = t;
  CoverSpec top(omega, trivial_subgroup(v4));
  r.dx = connected_type(top, "DX");
  if (!(r.dx == dd_type(t)))
    throw InconsistencyError("DX computed as " + format_top_type(r.dx) + ", expected " +
                             format_top_type(dd_type(t)));

  for (int i = 0; i < 3; ++i) {
    Element gen[] = {involutions[i]};
    TowerQuotient q;
    q.involution = static_cast<Involution>(i);
    q.type = connected_type(CoverSpec(omega, generated_subgroup(v4, gen)), "tower quotient");
    q.label = match_label(q.type, t);
    r.fix_circle_counts[i] = q.type.boundary;
    r.quotients[i] = q;
  }

  GluedComplex dx = build_cover(top);
  const auto& polygon = dx.polygon();
  r.fix_s_cut_components = static_cast<int>(
      dx.components_after_cut([&](std::size_t side) { return polygon[side].role == SideRole::Fixed; }));
  r.fix_s_separating = r.fix_s_cut_components == 2;
  return r;
}

std::string format_tower_diagram(const TowerReport& r) {
  auto cell = [](const std::string& label, const TopType& t) { return label + " " + format_top_type(t); };
  std::string top = cell("DX", r.dx);
  std::string left = cell(r.quotient(Involution::S).label, r.quotient(Involution::S).type);
  std::string mid = cell(r.quotient(Involution::ST).label, r.quotient(Involution::ST).type);
  std::string right = cell(r.quotient(Involution::T).label, r.quotient(Involution::T).type);
  std::string bottom = cell("X", r.x);

  std::string row = left + "   " + mid + "   " + right;
  auto centered = [&](const std::string& s) {
    std::size_t pad = row.size() > s.size() ? (row.size() - s.size()) / 2 : 0;
    return std::string(pad, ' ') + s;
  };
  std::size_t l = left.size() / 2, m = left.size() + 3 + mid.size() / 2,
              rt = left.size() + 3 + mid.size() + 3 + right.size() / 2;
  auto edges = [&](char a, char b, char c, bool labelled) {
    std::string e(rt + 6, ' ');
    e[l] = a;
    e[m] = b;
    e[rt] = c;
    if (labelled) {
      e.replace(l + 2, 3, "<s>");
      e.replace(m + 2, 4, "<st>");
      e.replace(rt + 2, 3, "<t>");
    }
    while (!e.empty() && e.back() == ' ') e.pop_back();
    return e;
  };
  std::ostringstream out;
  out << centered(top) << '\n'
      << edges('/', '|', '\\', true) << '\n'
      << row << '\n'
      << edges('\\', '|', '/', false) << '\n'
      << centered(bottom) << '\n';
  return out.str();
}

bool dd_monodromy(const TopType& t, const Word& w) {
  Presentation p = canonical_presentation(t.to_signature());
  bool parity = false;
  for (const auto& l : w.letters())
    if (p.generator(l.generator).kind == GenKind::Reflection && l.exponent % 2 != 0) parity = !parity;
  return parity;
}

LiftingKernel lifting_kernel_type(const NecSignature& delta, const GroupHom& theta) {
  GroupHom lifted = theta_prime(delta, theta);
  auto kernel = subgroup_signature(CoverSpec(theta, trivial_subgroup(theta.codomain())));
  LiftingKernel out;
  out.x = TopType::from_signature(kernel.signature());

  // θ' need not be onto G x C2 x C2; every component of the trivial cover
  // is then a copy of U/ker θ'.
  auto lifted_sig = subgroup_signature(CoverSpec(lifted, trivial_subgroup(lifted.codomain())));
  if (lifted_sig.components.size() != 1)
    throw InconsistencyError("components of the lifted cover are not isomorphic");
  out.dx = TopType::from_signature(lifted_sig.components[0].first);
  if (!(out.dx == dd_type(out.x)))
    throw InconsistencyError("ker θ' has type " + format_top_type(out.dx) + ", expected " +
                             format_top_type(dd_type(out.x)));
  return out;
}

}  // namespace klein
