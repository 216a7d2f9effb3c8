#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "klein/permgroup.hpp"
#include "klein/presentation.hpp"
#include "klein/signature.hpp"

namespace klein {

/// Assignment of images to the canonical generators of a presentation.
/// Construction does not validate; call violations() / is_valid().
class GroupHom {
 public:
  /// Every generator of `domain` must be assigned (shorthand names allowed).
  GroupHom(Presentation domain, FinGroup codomain, const std::map<std::string, Element>& images);
  GroupHom(Presentation domain, FinGroup codomain, std::vector<Element> images);

  const Presentation& domain() const noexcept { return domain_; }
  const FinGroup& codomain() const noexcept { return codomain_; }
  const std::vector<Element>& images() const noexcept { return images_; }
  Element image(std::string_view generator) const { return images_[domain_.index_of(generator)]; }

  /// Throws DomainError on an unknown generator.
  Element evaluate(const Word& w) const;

  /// Relators not mapped to the identity.
  std::vector<Relator> violations() const;
  bool is_valid() const { return violations().empty(); }
  /// True iff the generator images generate the codomain.
  bool is_surjective() const;
  Subgroup image_subgroup() const;

 private:
  Presentation domain_;
  FinGroup codomain_;
  std::vector<Element> images_;
};

/// Parses "a1->st, b1->1, x1->st, e1->ts, c1.0->s, c1.1->tst".
GroupHom parse_hom(const Presentation& domain, const FinGroup& codomain, std::string_view literal);

/// Standard epimorphism onto C2: one value per generator set E (boundary),
/// C (reflections) and A (handles or glides); true means the generator t.
struct StandardAssignment {
  int row = 0;  // row in the classical table of standard epimorphisms (1..7)
  bool e = false;
  bool c = false;
  bool a = false;

  bool operator==(const StandardAssignment&) const = default;
};

std::string format_assignment(const StandardAssignment& s);

/// Hom constant on the E, C and A generator sets. Elliptic generators go to
/// `v_x`.
GroupHom kind_constant_hom(const NecSignature& s, const FinGroup& group, Element v_e, Element v_c,
                           Element v_a, Element v_x = 0);

/// All standard epimorphisms onto C2 of a bordered surface group with genus
/// >= 1, in table row order: 7 when k is even, 3 (rows 1-3) when k is odd.
std::vector<StandardAssignment> standard_epis_C2(const TopType& t);
GroupHom standard_hom(const TopType& t, const StandardAssignment& a);

/// Epimorphism onto C2 x C2 = <s, t> sending glides to t, boundary generators
/// to 1 and reflections to s. Requires a non-orientable bordered surface.
GroupHom omega_dd(const TopType& t);

/// Lift of θ: Δ -> G to Δ -> G x C2 x C2. The second component marks
/// orientation-reversing generators, the third marks reflections lying in
/// ker θ. The codomain generators are named "<g>_1", "t_2", "t_3".
/// Throws DomainError (with the computed kernel signature) unless θ is a
/// valid hom whose kernel is a bordered non-orientable surface group, and
/// InconsistencyError if the lift fails to validate.
GroupHom theta_prime(const NecSignature& delta, const GroupHom& theta);

}  // namespace klein
