#include "klein/presentation.hpp"

#include <algorithm>
#include <cctype>

#include "klein/errors.hpp"

namespace klein {

Word Word::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->generator, -it->exponent});
  return Word(std::move(out));
}

Word Word::power(int n) const {
  std::vector<Letter> out;
  for (int i = 0; i < n; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
      ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip();
    if (pos != text.size()) throw SyntaxError("unexpected characters after identity word", pos);
    return Word();
  }
  while (pos < text.size()) {
    std::size_t start = pos;
    if (!std::isalpha(static_cast<unsigned char>(text[pos])))
      throw SyntaxError("expected generator name", pos);
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '.' || text[pos] == '_'))
      ++pos;
    std::string name(text.substr(start, pos - start));
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = pos < text.size() && text[pos] == '-';
      if (negative) ++pos;
      std::size_t num_start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (num_start == pos) throw SyntaxError("expected exponent", pos);
      exponent = std::stoi(std::string(text.substr(num_start, pos - num_start)));
      if (negative) exponent = -exponent;
    }
    int sign = exponent < 0 ? -1 : 1;
    for (int i = 0; i < std::abs(exponent); ++i) out.push_back({name, sign});
    skip();
  }
  return Word(std::move(out));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.generator;
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_word(w); }

Presentation::Presentation(NecSignature signature, std::vector<Generator> generators,
                           std::vector<Relator> relators)
    : signature_(std::move(signature)),
      generators_(std::move(generators)),
      relators_(std::move(relators)) {}

std::optional<std::size_t> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;

  // "c1.0" names the lone reflection "c1" of an empty period cycle.
  if (name.size() > 2 && name.substr(name.size() - 2) == ".0") {
    auto base = name.substr(0, name.size() - 2);
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i].name == base) return i;
  }

  // Unindexed shorthand: "x" -> "x1" when there is exactly one x-generator.
  if (name.size() == 1 && std::isalpha(static_cast<unsigned char>(name[0]))) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i].name;
      if (g[0] == name[0] && g.find('.') == std::string::npos) {
        if (hit) return std::nullopt;
        hit = i;
      }
    }
    return hit;
  }
  return std::nullopt;
}

std::size_t Presentation::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw DomainError("unknown generator '" + std::string(name) + "'");
  return *idx;
}

namespace {

std::string reflection_name(int cycle, int position, bool empty_cycle) {
  std::string base = "c" + std::to_string(cycle);
  return empty_cycle ? base : base + "." + std::to_string(position);
}

Letter pos(const std::string& g) { return {g, 1}; }
Letter neg(const std::string& g) { return {g, -1}; }

}  // namespace

Presentation canonical_presentation(const NecSignature& s) {
  std::vector<Generator> gens;
  std::vector<Relator> rels;
  std::vector<Letter> long_rel;

  const auto& periods = s.proper_periods();
  for (std::size_t i = 0; i < periods.size(); ++i) {
    std::string name = "x" + std::to_string(i + 1);
    gens.push_back({name, GenKind::Elliptic, static_cast<int>(i + 1), 0, periods[i]});
    long_rel.push_back(pos(name));
  }

  const auto& cycles = s.period_cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::string name = "e" + std::to_string(i + 1);
    gens.push_back({name, GenKind::Boundary, static_cast<int>(i + 1)});
    long_rel.push_back(pos(name));
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    int len = static_cast<int>(cycles[i].size());
    for (int j = 0; j <= len; ++j)
      gens.push_back({reflection_name(static_cast<int>(i + 1), j, len == 0), GenKind::Reflection,
                      static_cast<int>(i + 1), j});
  }

  for (int i = 1; i <= s.genus(); ++i) {
    if (s.orientable()) {
      std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
      gens.push_back({a, GenKind::HandleA, i});
      gens.push_back({b, GenKind::HandleB, i});
      long_rel.insert(long_rel.end(), {pos(a), pos(b), neg(a), neg(b)});
    } else {
      std::string d = "d" + std::to_string(i);
      gens.push_back({d, GenKind::Glide, i});
      long_rel.insert(long_rel.end(), {pos(d), pos(d)});
    }
  }

  rels.push_back({Word(long_rel), RelatorKind::Long});
  for (std::size_t i = 0; i < periods.size(); ++i)
    rels.push_back({Word{pos("x" + std::to_string(i + 1))}.power(periods[i]), RelatorKind::EllipticPower});

  for (std::size_t i = 0; i < cycles.size(); ++i) {
    int ci = static_cast<int>(i + 1);
    int len = static_cast<int>(cycles[i].size());
    bool empty = len == 0;
    for (int j = 0; j <= len; ++j) {
      auto c = reflection_name(ci, j, empty);
      rels.push_back({Word{pos(c), pos(c)}, RelatorKind::ReflectionSquare});
    }
    for (int j = 1; j <= len; ++j) {
      Word pair{pos(reflection_name(ci, j - 1, empty)), pos(reflection_name(ci, j, empty))};
      rels.push_back({pair.power(cycles[i][j - 1]), RelatorKind::Link});
    }
    auto e = "e" + std::to_string(ci);
    rels.push_back({Word{pos(e), pos(reflection_name(ci, 0, empty)), neg(e),
                         neg(reflection_name(ci, len, empty))},
                    RelatorKind::Conjugation});
  }

  return Presentation(s, std::move(gens), std::move(rels));
}

std::vector<std::pair<std::string, bool>> orientation_character(const NecSignature& s) {
  std::vector<std::pair<std::string, bool>> out;
  Presentation p = canonical_presentation(s);
  for (const auto& g : p.generators())
    out.emplace_back(g.name, g.reverses_orientation());
  return out;
}

bool reverses_orientation(const Presentation& p, const Word& w) {
  bool parity = false;
  for (const auto& l : w.letters())
    if (p.generator(l.generator).reverses_orientation()) parity = !parity;
  return parity;
}

std::vector<Side> surface_symbol(const NecSignature& s) {
  std::vector<Side> sides;

  const auto& periods = s.proper_periods();
  for (std::size_t i = 0; i < periods.size(); ++i) {
    auto n = std::to_string(i + 1);
    int base = static_cast<int>(sides.size());
    sides.push_back({"xi" + n, "x" + n, SideRole::Target, base + 1});
    sides.push_back({"xi" + n + "'", "x" + n, SideRole::Source, base});
  }

  const auto& cycles = s.period_cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    auto n = std::to_string(i + 1);
    int len = static_cast<int>(cycles[i].size());
    int eps = static_cast<int>(sides.size());
    sides.push_back({"eps" + n, "e" + n, SideRole::Target, -1});
    for (int j = len; j >= 0; --j) {
      auto c = reflection_name(static_cast<int>(i + 1), j, len == 0);
      std::string label = len == 0 ? "gam" + n : "gam" + n + "." + std::to_string(j);
      sides.push_back({label, c, SideRole::Fixed, -1});
    }
    int eps2 = static_cast<int>(sides.size());
    sides.push_back({"eps" + n + "'", "e" + n, SideRole::Source, eps});
    sides[eps].partner = eps2;
  }

  for (int i = 1; i <= s.genus(); ++i) {
    auto n = std::to_string(i);
    int base = static_cast<int>(sides.size());
    if (s.orientable()) {
      sides.push_back({"alpha" + n, "a" + n, SideRole::Target, base + 2});
      sides.push_back({"beta" + n, "b" + n, SideRole::Source, base + 3});
      sides.push_back({"alpha" + n + "'", "a" + n, SideRole::Source, base});
      sides.push_back({"beta" + n + "'", "b" + n, SideRole::Target, base + 1});
    } else {
      sides.push_back({"alpha" + n, "d" + n, SideRole::Target, base + 1});
      sides.push_back({"alpha" + n + "*", "d" + n, SideRole::Source, base});
    }
  }
  return sides;
}

std::string format_surface_symbol(const std::vector<Side>& sides) {
  std::string out;
  for (const auto& side : sides) {
    if (!out.empty()) out += ' ';
    out += side.label;
  }
  return out;
}

}  // namespace klein
