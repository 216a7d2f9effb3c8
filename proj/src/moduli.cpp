#include "klein/moduli.hpp"

#include <string>

#include "klein/doubles.hpp"
#include "klein/errors.hpp"
#include "klein/tower.hpp"

namespace klein {

std::vector<RealCurveType> real_curve_types(int p) {
  if (p < 1) throw DomainError("algebraic genus must be at least 1, got " + std::to_string(p));
  std::vector<RealCurveType> out;
  for (int h = 1; h <= p + 1; ++h) out.push_back({TopType(h, false, p + 1 - h), p});
  return out;
}

namespace {

void require_bordered(const RealCurveType& t) {
  if (t.top_type.orientable || t.top_type.boundary < 1)
    throw DomainError("DK is defined only for non-orientable types with k >= 1, got " +
                      format_top_type(t.top_type));
}

}  // namespace

TopType psi_image(const RealCurveType& t) {
  require_bordered(t);
  return dd_type(t.top_type);
}

MembershipReport n_membership_check(const RealCurveType& t) {
  require_bordered(t);
  TowerReport tower = build_tower(t.top_type);
  MembershipReport r;
  r.dx = tower.dx;
  r.conformal_quotient = tower.quotient(Involution::ST).type;
  r.anticonformal_quotient = tower.quotient(Involution::T).type;
  r.free_conformal = r.conformal_quotient.orientable && r.conformal_quotient.boundary == 0 &&
                     r.dx.euler_char() == 2 * r.conformal_quotient.euler_char();
  r.free_anticonformal = !r.anticonformal_quotient.orientable && r.anticonformal_quotient.boundary == 0 &&
                         r.dx.euler_char() == 2 * r.anticonformal_quotient.euler_char();
  if (!r.passed())
    throw InconsistencyError("DX of " + format_top_type(t.top_type) + " lacks a free involution");
  return r;
}

}  // namespace klein
