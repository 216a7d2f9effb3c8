#pragma once

#include <string>
#include <vector>

#include "klein/homomorphism.hpp"
#include "klein/signature.hpp"

namespace klein {

enum class DoubleLabel { Complex, Orienting, Schottky, Plain };

std::string to_string(DoubleLabel label);

/// Closed-form description of the double U/ker θ for a standard epimorphism θ.
struct DoubleRecord {
  int row = 0;
  StandardAssignment assignment;
  int boundary = 0;
  bool orientable = true;
  int genus = 0;
  DoubleLabel label = DoubleLabel::Plain;
  int components = 1;

  TopType type() const { return TopType(genus, orientable, boundary); }
};

/// One record per standard epimorphism of a bordered surface with genus >= 1.
/// Boundary counts follow the table {0, 2k, 0, k, k, 0, 0}; orientability is
/// read from the column matching the orientability of `t`; the genus is
/// solved from χ(double) = 2χ(t).
std::vector<DoubleRecord> classify_standard_doubles(const TopType& t);

struct DoubleType {
  TopType type;
  int components = 1;

  bool operator==(const DoubleType&) const = default;
};

/// The closed Riemann surface double; its genus is the algebraic genus.
TopType complex_double(const TopType& t);
/// Non-orientable: (g-1; +; 2k), connected. Orientable: two copies of t.
/// Closed non-orientable: coincides with the complex double.
DoubleType orienting_double(const TopType& t);
/// Non-orientable bordered: (2g+2k-2; -; 0). Orientable: the complex double.
/// Closed non-orientable: two copies of t.
DoubleType schottky_double(const TopType& t);
/// Common double of the three natural doubles: (2g+2k-3; +; 0). Requires a
/// non-orientable bordered surface.
TopType dd_type(const TopType& t);

}  // namespace klein
