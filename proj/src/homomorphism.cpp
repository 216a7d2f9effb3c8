#include "klein/homomorphism.hpp"

#include <algorithm>

#include "klein/cover.hpp"
#include "klein/errors.hpp"

namespace klein {

GroupHom::GroupHom(Presentation domain, FinGroup codomain, const std::map<std::string, Element>& images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  const auto& gens = domain_.generators();
  std::vector<bool> assigned(gens.size(), false);
  images_.assign(gens.size(), codomain_.identity());
  for (const auto& [name, e] : images) {
    auto idx = domain_.index_of(name);
    if (assigned[idx]) throw DomainError("generator '" + gens[idx].name + "' assigned twice");
    if (e >= codomain_.order()) throw DomainError("image of '" + name + "' is not a group element");
    assigned[idx] = true;
    images_[idx] = e;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!assigned[i]) throw DomainError("no image given for generator '" + gens[i].name + "'");
}

GroupHom::GroupHom(Presentation domain, FinGroup codomain, std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.generators().size())
    throw DomainError("image list length does not match the generator count");
}

Element GroupHom::evaluate(const Word& w) const {
  Element out = codomain_.identity();
  for (const auto& l : w.letters()) {
    Element g = images_[domain_.index_of(l.generator)];
    out = codomain_.mul(out, l.exponent > 0 ? g : codomain_.inverse(g));
  }
  return out;
}

std::vector<Relator> GroupHom::violations() const {
  std::vector<Relator> out;
  for (const auto& r : domain_.relators())
    if (evaluate(r.word) != codomain_.identity()) out.push_back(r);
  return out;
}

Subgroup GroupHom::image_subgroup() const { return generated_subgroup(codomain_, images_); }

bool GroupHom::is_surjective() const { return image_subgroup().order() == codomain_.order(); }

GroupHom parse_hom(const Presentation& domain, const FinGroup& codomain, std::string_view literal) {
  std::map<std::string, Element> images;
  std::size_t start = 0;
  while (start < literal.size()) {
    std::size_t comma = literal.find(',', start);
    std::size_t stop = comma == std::string_view::npos ? literal.size() : comma;
    auto item = literal.substr(start, stop - start);
    auto arrow = item.find("->");
    if (arrow == std::string_view::npos) throw SyntaxError("expected 'generator->element'", start);
    auto trim = [](std::string_view s) {
      auto a = s.find_first_not_of(" \t");
      if (a == std::string_view::npos) return std::string_view{};
      return s.substr(a, s.find_last_not_of(" \t") - a + 1);
    };
    std::string name(trim(item.substr(0, arrow)));
    if (name.empty()) throw SyntaxError("missing generator name", start);
    auto target = trim(item.substr(arrow + 2));
    if (target.empty()) throw SyntaxError("missing image for '" + name + "'", start + arrow + 2);
    if (!domain.find(name)) throw DomainError("unknown generator '" + name + "'");
    images[name] = codomain.parse_element(target);
    start = stop + 1;
  }
  return GroupHom(domain, codomain, images);
}

std::string format_assignment(const StandardAssignment& s) {
  auto v = [](bool b) { return b ? "t" : "1"; };
  return std::string("E->") + v(s.e) + " C->" + v(s.c) + " A->" + v(s.a);
}

GroupHom kind_constant_hom(const NecSignature& s, const FinGroup& group, Element v_e, Element v_c,
                           Element v_a, Element v_x) {
  Presentation p = canonical_presentation(s);
  std::vector<Element> images;
  for (const auto& g : p.generators()) {
    switch (g.kind) {
      case GenKind::Boundary: images.push_back(v_e); break;
      case GenKind::Reflection: images.push_back(v_c); break;
      case GenKind::Elliptic: images.push_back(v_x); break;
      default: images.push_back(v_a); break;
    }
  }
  return GroupHom(std::move(p), group, std::move(images));
}

std::vector<StandardAssignment> standard_epis_C2(const TopType& t) {
  if (t.boundary < 1)
    throw DomainError("standard epimorphisms need a bordered surface (k >= 1), got " + format_top_type(t));
  if (t.genus < 1)
    throw DomainError("standard epimorphisms are enumerated only for genus >= 1 (the handle/glide set A "
                      "must be nonempty), got " + format_top_type(t));

  static constexpr StandardAssignment rows[] = {
      {1, false, true, true}, {2, false, false, true}, {3, false, true, false},
      {4, true, false, false}, {5, true, false, true}, {6, true, true, false}, {7, true, true, true},
  };
  FinGroup c2 = make_named_group(GroupSpec::cyclic(2));
  Element tgen = c2.generator("t");
  std::vector<StandardAssignment> out;
  for (const auto& r : rows) {
    auto h = kind_constant_hom(t.to_signature(), c2, r.e ? tgen : 0, r.c ? tgen : 0, r.a ? tgen : 0);
    if (h.is_valid() && h.is_surjective()) out.push_back(r);
  }
  return out;
}

GroupHom standard_hom(const TopType& t, const StandardAssignment& a) {
  FinGroup c2 = make_named_group(GroupSpec::cyclic(2));
  Element tgen = c2.generator("t");
  return kind_constant_hom(t.to_signature(), c2, a.e ? tgen : 0, a.c ? tgen : 0, a.a ? tgen : 0);
}

GroupHom omega_dd(const TopType& t) {
  if (t.orientable || t.boundary < 1)
    throw DomainError("the double of doubles needs a non-orientable Klein surface with non-empty boundary, got " +
                      format_top_type(t));
  FinGroup v4 = make_named_group(GroupSpec::klein_four());
  Element s = v4.generator("s"), tt = v4.generator("t");
  return kind_constant_hom(t.to_signature(), v4, v4.identity(), s, tt);
}

GroupHom theta_prime(const NecSignature& delta, const GroupHom& theta) {
  if (!(theta.domain().signature() == delta))
    throw DomainError("hom domain is not the canonical presentation of " + format_signature(delta));
  if (!theta.is_valid()) throw DomainError("θ does not respect the relators of " + format_signature(delta));
  if (!theta.is_surjective()) throw DomainError("θ must be an epimorphism");

  const FinGroup& g = theta.codomain();
  auto kernel = subgroup_signature(CoverSpec(theta, trivial_subgroup(g)));
  const NecSignature& ks = kernel.signature();
  if (!ks.is_surface() || ks.orientable() || ks.period_cycles().empty())
    throw DomainError("ker θ must be a bordered non-orientable surface group; computed kernel signature " +
                      format_signature(ks));

  FinGroup c2 = make_named_group(GroupSpec::cyclic(2));
  std::vector<FinGroup> factors{g, c2, c2};
  FinGroup product = direct_product(factors);
  const Element t = c2.generator("t");

  std::vector<Element> images;
  const auto& gens = theta.domain().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Element gi = theta.images()[i];
    bool reverses = gens[i].reverses_orientation();
    bool kernel_reflection = gens[i].kind == GenKind::Reflection && gi == g.identity();
    Element parts[] = {gi, reverses ? t : c2.identity(), kernel_reflection ? t : c2.identity()};
    images.push_back(product_element(product, factors, parts));
  }
  GroupHom lifted(theta.domain(), product, std::move(images));
  auto bad = lifted.violations();
  if (!bad.empty())
    throw InconsistencyError("lifted hom violates relator " + format_word(bad.front().word));
  return lifted;
}

}  // namespace klein
