#include "klein/doubles.hpp"

#include "klein/errors.hpp"

namespace klein {

std::string to_string(DoubleLabel label) {
  switch (label) {
    case DoubleLabel::Complex: return "complex";
    case DoubleLabel::Orienting: return "orienting";
    case DoubleLabel::Schottky: return "schottky";
    case DoubleLabel::Plain: return "plain";
  }
  return "plain";
}

namespace {

struct TableRow {
  int boundary_factor;  // B = factor * k / 2
  bool orientable_if_nonorientable_base;
  bool orientable_if_orientable_base;
};

// Rows 1..7: boundary {0, 2k, 0, k, k, 0, 0}.
constexpr TableRow kTable[] = {
    {0, true, false}, {4, true, true}, {0, false, true}, {2, false, true},
    {2, false, true}, {0, false, false}, {0, false, false},
};

}  // namespace

std::vector<DoubleRecord> classify_standard_doubles(const TopType& t) {
  std::vector<DoubleRecord> out;
  for (const auto& a : standard_epis_C2(t)) {
    const TableRow& row = kTable[a.row - 1];
    DoubleRecord r;
    r.row = a.row;
    r.assignment = a;
    r.boundary = row.boundary_factor * t.boundary / 2;
    r.orientable = t.orientable ? row.orientable_if_orientable_base : row.orientable_if_nonorientable_base;
    int chi = 2 * t.euler_char();
    int twice_genus = 2 - chi - r.boundary;
    if (r.orientable && twice_genus % 2 != 0)
      throw InconsistencyError("odd orientable genus in table row " + std::to_string(a.row));
    r.genus = r.orientable ? twice_genus / 2 : twice_genus;
    if (t.orientable) {
      if (a.row == 3) r.label = DoubleLabel::Complex;
    } else {
      if (a.row == 1) r.label = DoubleLabel::Complex;
      if (a.row == 2) r.label = DoubleLabel::Orienting;
      if (a.row == 3) r.label = DoubleLabel::Schottky;
    }
    out.push_back(r);
  }
  return out;
}

TopType complex_double(const TopType& t) {
  if (algebraic_genus(t) < 0) throw DomainError("the sphere has no connected complex double");
  return TopType(algebraic_genus(t), true, 0);
}

DoubleType orienting_double(const TopType& t) {
  if (t.orientable) return {t, 2};
  if (t.boundary == 0) return {complex_double(t), 1};
  return {TopType(t.genus - 1, true, 2 * t.boundary), 1};
}

DoubleType schottky_double(const TopType& t) {
  if (t.orientable) return {complex_double(t), 1};
  if (t.boundary == 0) return {t, 2};
  return {TopType(2 * t.genus + 2 * t.boundary - 2, false, 0), 1};
}

TopType dd_type(const TopType& t) {
  if (t.orientable || t.boundary < 1)
    throw DomainError("the double of doubles needs a non-orientable Klein surface with non-empty boundary, got " +
                      format_top_type(t));
  return TopType(2 * t.genus + 2 * t.boundary - 3, true, 0);
}

}  // namespace klein
