#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klein {

/// Permutation of {0, ..., n-1}. Products compose left to right:
/// (p * q)(i) = q(p(i)), so points carry a right action.
class Perm {
 public:
  explicit Perm(std::vector<std::uint16_t> images);
  static Perm identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0,1},{2,3}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<std::uint16_t>& images() const noexcept { return images_; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  bool is_identity() const noexcept;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<std::uint16_t> images_;
};

/// Index of an element inside its FinGroup.
using Element = std::uint32_t;

/// A fully enumerated permutation group with named generators.
class FinGroup {
 public:
  /// Closes the named generators under multiplication. All generators must
  /// share one degree.
  explicit FinGroup(std::vector<std::pair<std::string, Perm>> generators, std::size_t degree);

  std::size_t order() const noexcept { return elements_.size(); }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order() + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, int n) const;
  int element_order(Element a) const;
  const Perm& perm(Element a) const { return elements_[a]; }
  std::size_t degree() const noexcept { return degree_; }

  const std::vector<std::pair<std::string, Element>>& generators() const noexcept { return generators_; }
  /// Throws DomainError for unknown names.
  Element generator(std::string_view name) const;
  Element find(const Perm& p) const;

  /// Parses a word in the generator names: "st", "t s t", "s^-1", "1".
  /// Generator names are matched greedily (longest first).
  Element parse_element(std::string_view word) const;
  /// Shortest word in the generators representing `a` ("1" for identity).
  std::string element_name(Element a) const;

 private:
  std::size_t degree_;
  std::vector<Perm> elements_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::pair<std::string, Element>> generators_;
  std::vector<std::string> names_;
};

struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, KleinFour, DirectProduct };
  Kind kind = Kind::Cyclic;
  int n = 1;
  std::vector<GroupSpec> factors;

  static GroupSpec cyclic(int n) { return {Kind::Cyclic, n, {}}; }
  static GroupSpec dihedral(int n) { return {Kind::Dihedral, n, {}}; }
  static GroupSpec klein_four() { return {Kind::KleinFour, 4, {}}; }
  static GroupSpec direct_product(std::vector<GroupSpec> f) { return {Kind::DirectProduct, 0, std::move(f)}; }
};

/// Cyclic groups are generated by "t"; dihedral and Klein four groups by the
/// involutions "s" and "t" (with (st)^n = 1 for the dihedral group of order 2n).
/// Direct products suffix each factor's generator names with "_<i>" (1-based).
FinGroup make_named_group(const GroupSpec& spec);
/// Direct product acting on the disjoint union of the factors' points.
FinGroup direct_product(std::span<const FinGroup> factors);
/// The element (parts[0], parts[1], ...) of `product = direct_product(factors)`.
Element product_element(const FinGroup& product, std::span<const FinGroup> factors,
                        std::span<const Element> parts);
/// "c2", "cN", "klein4", "d3", "dN".
GroupSpec parse_group_spec(std::string_view text);

class Subgroup {
 public:
  Subgroup(const FinGroup& group, std::vector<Element> elements);

  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Element e) const { return member_[e]; }
  const std::vector<Element>& elements() const noexcept { return elements_; }

 private:
  std::vector<Element> elements_;
  std::vector<bool> member_;
};

Subgroup generated_subgroup(const FinGroup& group, std::span<const Element> gens);
Subgroup trivial_subgroup(const FinGroup& group);
Subgroup whole_group(const FinGroup& group);
/// Comma-separated element words, e.g. "s" or "s,t"; "1", "" and "-" mean the
/// trivial subgroup.
Subgroup parse_subgroup(const FinGroup& group, std::string_view text);

/// Right cosets Hq of a subgroup with the right action (Hq, r) -> Hqr.
class CosetSpace {
 public:
  CosetSpace(const FinGroup& group, const Subgroup& subgroup);

  std::size_t size() const noexcept { return representatives_.size(); }
  std::size_t coset_of(Element q) const { return coset_of_[q]; }
  std::size_t act(std::size_t coset, Element q) const { return action_[coset * group_order_ + q]; }
  Element representative(std::size_t coset) const { return representatives_[coset]; }

  /// Orbits of the subgroup generated by `gens`, as lists of cosets.
  std::vector<std::vector<std::size_t>> orbits(std::span<const Element> gens) const;

 private:
  std::size_t group_order_;
  std::vector<std::size_t> coset_of_;
  std::vector<Element> representatives_;
  std::vector<std::size_t> action_;
};

CosetSpace right_cosets(const FinGroup& group, const Subgroup& subgroup);

}  // namespace klein
