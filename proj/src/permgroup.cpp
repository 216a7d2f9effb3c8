#include "klein/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>

#include "klein/errors.hpp"

namespace klein {

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || seen[i]) throw DomainError("image table is not a bijection");
    seen[i] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      img[static_cast<std::size_t>(c[i])] = static_cast<std::uint16_t>(c[(i + 1) % c.size()]);
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& other) const {
  std::vector<std::uint16_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = other.images_[images_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<std::uint16_t>(i);
  return Perm(std::move(img));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

FinGroup::FinGroup(std::vector<std::pair<std::string, Perm>> generators, std::size_t degree)
    : degree_(degree) {
  std::map<Perm, Element> index;
  elements_.push_back(Perm::identity(degree));
  index.emplace(elements_[0], 0);
  for (const auto& [name, p] : generators)
    if (p.degree() != degree) throw DomainError("generator '" + name + "' has the wrong degree");

  // Breadth-first closure; names_ records a shortest word for each element.
  names_.push_back("");
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& [name, g] : generators) {
      Perm next = elements_[head] * g;
      if (index.find(next) == index.end()) {
        index.emplace(next, static_cast<Element>(elements_.size()));
        names_.push_back(names_[head] + name);
        elements_.push_back(std::move(next));
      }
    }
  }

  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index.at(elements_[a] * elements_[b]);
    inverses_[a] = index.at(elements_[a].inverse());
  }
  for (const auto& [name, g] : generators) generators_.emplace_back(name, index.at(g));
  names_[0] = "1";
}

Element FinGroup::power(Element a, int n) const {
  if (n < 0) return power(inverse(a), -n);
  Element out = identity();
  for (int i = 0; i < n; ++i) out = mul(out, a);
  return out;
}

int FinGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

Element FinGroup::generator(std::string_view name) const {
  for (const auto& [n, e] : generators_)
    if (n == name) return e;
  throw DomainError("unknown group generator '" + std::string(name) + "'");
}

Element FinGroup::find(const Perm& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == p) return static_cast<Element>(i);
  throw DomainError("permutation is not an element of the group");
}

Element FinGroup::parse_element(std::string_view word) const {
  std::vector<std::pair<std::string, Element>> by_length = generators_;
  std::sort(by_length.begin(), by_length.end(),
            [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

  Element out = identity();
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < word.size() && (std::isspace(static_cast<unsigned char>(word[pos])) || word[pos] == '*'))
      ++pos;
  };
  skip();
  while (pos < word.size()) {
    if (word[pos] == '1') {
      ++pos;
      skip();
      continue;
    }
    const std::pair<std::string, Element>* hit = nullptr;
    for (const auto& g : by_length)
      if (word.substr(pos, g.first.size()) == g.first) {
        hit = &g;
        break;
      }
    if (!hit) throw SyntaxError("unknown group generator in '" + std::string(word) + "'", pos);
    pos += hit->first.size();
    int exponent = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      bool negative = pos < word.size() && word[pos] == '-';
      if (negative) ++pos;
      std::size_t start = pos;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
      if (start == pos) throw SyntaxError("expected exponent", pos);
      exponent = std::stoi(std::string(word.substr(start, pos - start)));
      if (negative) exponent = -exponent;
    }
    out = mul(out, power(hit->second, exponent));
    skip();
  }
  return out;
}

std::string FinGroup::element_name(Element a) const { return names_[a]; }

namespace {

FinGroup cyclic(int n) {
  std::size_t deg = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> cyc(1);
  for (int i = 0; i < n; ++i) cyc[0].push_back(i);
  return FinGroup({{"t", Perm::from_cycles(deg, cyc)}}, deg);
}

FinGroup klein_four() {
  return FinGroup({{"s", Perm::from_cycles(4, {{0, 1}, {2, 3}})},
                   {"t", Perm::from_cycles(4, {{0, 2}, {1, 3}})}},
                  4);
}

FinGroup dihedral(int n) {
  if (n == 1) {
    Perm r = Perm::from_cycles(2, {{0, 1}});
    return FinGroup({{"s", r}, {"t", r}}, 2);
  }
  if (n == 2) return klein_four();
  // s: i -> -i, t: i -> 1 - i, so st: i -> i + 1.
  std::vector<std::uint16_t> s(static_cast<std::size_t>(n)), t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    s[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((n - i) % n);
    t[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(((1 - i) % n + n) % n);
  }
  return FinGroup({{"s", Perm(std::move(s))}, {"t", Perm(std::move(t))}}, static_cast<std::size_t>(n));
}

}  // namespace

FinGroup make_named_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      if (spec.n < 1) throw DomainError("cyclic group order must be >= 1");
      return cyclic(spec.n);
    case GroupSpec::Kind::Dihedral:
      if (spec.n < 1) throw DomainError("dihedral group index must be >= 1");
      return dihedral(spec.n);
    case GroupSpec::Kind::KleinFour:
      return klein_four();
    case GroupSpec::Kind::DirectProduct: {
      std::vector<FinGroup> groups;
      for (const auto& f : spec.factors) groups.push_back(make_named_group(f));
      return direct_product(groups);
    }
  }
  throw DomainError("unknown group kind");
}

FinGroup direct_product(std::span<const FinGroup> factors) {
  std::size_t degree = 0;
  for (const auto& g : factors) degree += g.degree();
  std::vector<std::pair<std::string, Perm>> gens;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& [name, e] : factors[i].generators()) {
      std::vector<std::uint16_t> img(degree);
      std::iota(img.begin(), img.end(), 0);
      const auto& p = factors[i].perm(e);
      for (std::size_t j = 0; j < p.degree(); ++j)
        img[offset + j] = static_cast<std::uint16_t>(offset + static_cast<std::size_t>(p(static_cast<int>(j))));
      gens.emplace_back(name + "_" + std::to_string(i + 1), Perm(std::move(img)));
    }
    offset += factors[i].degree();
  }
  return FinGroup(std::move(gens), degree);
}

Element product_element(const FinGroup& product, std::span<const FinGroup> factors,
                        std::span<const Element> parts) {
  if (parts.size() != factors.size()) throw DomainError("product element needs one part per factor");
  std::vector<std::uint16_t> img;
  img.reserve(product.degree());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto offset = img.size();
    for (auto x : factors[i].perm(parts[i]).images()) img.push_back(static_cast<std::uint16_t>(offset + x));
  }
  return product.find(Perm(std::move(img)));
}

GroupSpec parse_group_spec(std::string_view text) {
  if (text == "klein4") return GroupSpec::klein_four();
  if (text.size() >= 2 && (text[0] == 'c' || text[0] == 'd')) {
    auto digits = text.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int n = std::stoi(std::string(digits));
      return text[0] == 'c' ? GroupSpec::cyclic(n) : GroupSpec::dihedral(n);
    }
  }
  throw SyntaxError("unknown group '" + std::string(text) + "' (expected c2, cN, klein4, dN)", 0);
}

Subgroup::Subgroup(const FinGroup& group, std::vector<Element> elements)
    : elements_(std::move(elements)), member_(group.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  for (auto e : elements_) member_[e] = true;
}

Subgroup generated_subgroup(const FinGroup& group, std::span<const Element> gens) {
  std::vector<Element> elems{group.identity()};
  std::vector<bool> seen(group.order(), false);
  seen[group.identity()] = true;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto g : gens) {
      Element next = group.mul(elems[head], g);
      if (!seen[next]) {
        seen[next] = true;
        elems.push_back(next);
      }
    }
  return Subgroup(group, std::move(elems));
}

Subgroup trivial_subgroup(const FinGroup& group) { return Subgroup(group, {group.identity()}); }

Subgroup whole_group(const FinGroup& group) {
  std::vector<Element> all(group.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(group, std::move(all));
}

Subgroup parse_subgroup(const FinGroup& group, std::string_view text) {
  std::vector<Element> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto first = token.find_first_not_of(" \t");
    if (first != std::string_view::npos) {
      token = token.substr(first);
      token = token.substr(0, token.find_last_not_of(" \t") + 1);
      if (token != "-") gens.push_back(group.parse_element(token));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return generated_subgroup(group, gens);
}

CosetSpace::CosetSpace(const FinGroup& group, const Subgroup& subgroup)
    : group_order_(group.order()), coset_of_(group.order(), SIZE_MAX) {
  for (Element q = 0; q < group.order(); ++q) {
    if (coset_of_[q] != SIZE_MAX) continue;
    std::size_t id = representatives_.size();
    representatives_.push_back(q);
    for (Element h : subgroup.elements()) coset_of_[group.mul(h, q)] = id;
  }
  action_.resize(size() * group_order_);
  for (std::size_t c = 0; c < size(); ++c)
    for (Element r = 0; r < group.order(); ++r)
      action_[c * group_order_ + r] = coset_of_[group.mul(representatives_[c], r)];
}

std::vector<std::vector<std::size_t>> CosetSpace::orbits(std::span<const Element> gens) const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t c = 0; c < size(); ++c) {
    if (seen[c]) continue;
    std::vector<std::size_t> orbit{c};
    seen[c] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (auto g : gens) {
        auto next = act(orbit[head], g);
        if (!seen[next]) {
          seen[next] = true;
          orbit.push_back(next);
        }
      }
    out.push_back(std::move(orbit));
  }
  return out;
}

CosetSpace right_cosets(const FinGroup& group, const Subgroup& subgroup) {
  return CosetSpace(group, subgroup);
}

}  // namespace klein
