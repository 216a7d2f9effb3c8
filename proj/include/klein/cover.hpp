#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klein/homomorphism.hpp"
#include "klein/permgroup.hpp"
#include "klein/presentation.hpp"
#include "klein/signature.hpp"

namespace klein {

/// Covering U/θ⁻¹(H) of the orbifold uniformized by the hom's domain.
/// Construction rejects homs that do not validate.
class CoverSpec {
 public:
  CoverSpec(GroupHom hom, Subgroup subgroup);

  const NecSignature& base() const noexcept { return hom_.domain().signature(); }
  const GroupHom& hom() const noexcept { return hom_; }
  const Subgroup& subgroup() const noexcept { return subgroup_; }

 private:
  GroupHom hom_;
  Subgroup subgroup_;
};

struct Slot {
  std::size_t face = 0;
  std::size_t side = 0;

  bool operator==(const Slot&) const = default;
};

/// Kind of a corner of the fundamental polygon.
struct PolygonVertex {
  enum class Kind { Regular, Cone, Corner };
  Kind kind = Kind::Regular;
  int order = 1;  // proper period (Cone) or link period (Corner)
};

/// One polygon copy per right coset, glued along paired sides.
class GluedComplex {
 public:
  GluedComplex(std::size_t faces, std::vector<Side> polygon, std::vector<PolygonVertex> vertices);

  std::size_t face_count() const noexcept { return faces_; }
  std::size_t sides_per_face() const noexcept { return polygon_.size(); }
  std::size_t slot_count() const noexcept { return faces_ * polygon_.size(); }
  const std::vector<Side>& polygon() const noexcept { return polygon_; }
  const std::vector<PolygonVertex>& polygon_vertices() const noexcept { return vertices_; }

  std::optional<Slot> partner(Slot s) const;
  bool is_boundary(Slot s) const { return !partner(s).has_value(); }
  /// True when the gluing at `s` is by an orientation-reversing generator.
  bool reversing(Slot s) const { return reversing_[index(s)]; }

  /// Class of polygon vertex `vertex` (the start of side `vertex`) of `face`.
  std::size_t vertex_class(std::size_t face, std::size_t vertex) const;
  std::size_t vertex_class_count() const noexcept { return class_count_; }

  /// Components of the complex after cutting along every glued side for which
  /// `cut(side)` holds.
  std::size_t components_after_cut(const std::function<bool(std::size_t side)>& cut) const;

  void glue(Slot a, Slot b, bool reversing);
  void identify_vertices(std::size_t face_a, std::size_t vertex_a, std::size_t face_b,
                         std::size_t vertex_b);
  void finalize();

 private:
  std::size_t index(Slot s) const { return s.face * polygon_.size() + s.side; }

  std::size_t faces_;
  std::vector<Side> polygon_;
  std::vector<PolygonVertex> vertices_;
  std::vector<std::ptrdiff_t> partner_;
  std::vector<bool> reversing_;
  std::vector<std::size_t> vertex_parent_;
  std::vector<std::size_t> vertex_class_;
  std::size_t class_count_ = 0;
};

struct BoundaryCircle {
  std::vector<int> corners;  // corner orders > 1 in traversal order

  bool operator==(const BoundaryCircle&) const = default;
};

struct ComponentReport {
  std::size_t faces = 0;
  int euler_char = 0;
  bool orientable = true;
  std::vector<BoundaryCircle> boundary;
  std::vector<int> cone_points;
  NecSignature signature{0, Sign::Plus};
};

struct CoverReport {
  std::size_t index = 0;
  std::size_t components = 0;
  int euler_char = 0;
  bool orientable = true;
  std::vector<BoundaryCircle> boundary_circles;
  std::vector<int> cone_points;
  bool is_surface_group = true;
  /// Present when the cover is connected.
  std::optional<NecSignature> signature;
  std::vector<ComponentReport> component_reports;
  /// χ - Σ(1-1/m) - ½Σ(1-1/n), equal to index · χ_orb(base).
  Rational orbifold_euler_char;
};

GluedComplex build_cover(const CoverSpec& spec);
/// Throws InconsistencyError if the two Euler characteristic computations
/// disagree or the complex is malformed.
CoverReport analyze(const GluedComplex& complex, const CoverSpec& spec);
CoverReport cover_report(const CoverSpec& spec);

/// Signature(s) of θ⁻¹(H): one entry per isomorphism class of components,
/// with multiplicities.
struct SubgroupSignature {
  std::vector<std::pair<NecSignature, int>> components;

  bool connected() const noexcept { return components.size() == 1 && components[0].second == 1; }
  /// Throws DomainError for disconnected covers.
  const NecSignature& signature() const;
};

SubgroupSignature subgroup_signature(const CoverSpec& spec);

/// Equality up to period order, order of period cycles, and cyclic rotation
/// or inversion of each cycle.
bool signatures_equal(const NecSignature& a, const NecSignature& b);

}  // namespace klein
