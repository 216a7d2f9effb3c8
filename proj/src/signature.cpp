#include "klein/signature.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <regex>
#include <sstream>

#include "klein/errors.hpp"

namespace klein {

NecSignature::NecSignature(int genus, Sign sign, std::vector<int> proper_periods,
                           std::vector<PeriodCycle> period_cycles)
    : genus_(genus),
      sign_(sign),
      periods_(std::move(proper_periods)),
      cycles_(std::move(period_cycles)) {
  if (genus_ < 0) throw DomainError("genus must be non-negative");
  if (sign_ == Sign::Minus && genus_ < 1)
    throw DomainError("Minus sign requires genus >= 1 (a non-orientable surface has at least one crosscap)");
  for (int m : periods_)
    if (m < 2) throw DomainError("proper period " + std::to_string(m) + " < 2");
  for (const auto& c : cycles_)
    for (int n : c)
      if (n < 2) throw DomainError("link period " + std::to_string(n) + " < 2");
  std::sort(periods_.begin(), periods_.end());
}

NecSignature NecSignature::surface(int genus, Sign sign, int boundary) {
  if (boundary < 0) throw DomainError("boundary count must be non-negative");
  return NecSignature(genus, sign, {}, std::vector<PeriodCycle>(boundary));
}

bool NecSignature::is_surface() const noexcept {
  return periods_.empty() &&
         std::all_of(cycles_.begin(), cycles_.end(), [](const auto& c) { return c.empty(); });
}

TopType::TopType(int g, bool orient, int k) : genus(g), orientable(orient), boundary(k) {
  if (g < 0 || k < 0) throw DomainError("genus and boundary count must be non-negative");
  if (!orient && g < 1) throw DomainError("a non-orientable surface has genus >= 1");
}

NecSignature TopType::to_signature() const {
  return NecSignature::surface(genus, orientable ? Sign::Plus : Sign::Minus, boundary);
}

TopType TopType::from_signature(const NecSignature& s) {
  if (!s.is_surface())
    throw DomainError("signature " + format_signature(s) + " is not a surface group signature");
  return TopType(s.genus(), s.orientable(), static_cast<int>(s.period_cycles().size()));
}

namespace {

class SignatureParser {
 public:
  explicit SignatureParser(std::string_view text) : text_(text) {}

  NecSignature parse() {
    expect('(');
    int genus = integer();
    expect(';');
    Sign sign = sign_token();
    expect(';');
    std::vector<int> periods = period_list();
    expect(';');
    expect('{');
    std::vector<PeriodCycle> cycles = cycle_list();
    expect('}');
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return NecSignature(genus, sign, std::move(periods), std::move(cycles));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  Sign sign_token() {
    if (accept('+')) return Sign::Plus;
    if (accept('-')) return Sign::Minus;
    fail("expected '+' or '-'");
  }

  std::vector<int> period_list() {
    expect('[');
    std::vector<int> out;
    if (!accept('-')) {
      out.push_back(integer());
      while (accept(',')) out.push_back(integer());
    }
    expect(']');
    return out;
  }

  PeriodCycle cycle() {
    expect('(');
    PeriodCycle out;
    if (!accept('-')) {
      out.push_back(integer());
      while (accept(',')) out.push_back(integer());
    }
    expect(')');
    return out;
  }

  std::vector<PeriodCycle> cycle_list() {
    std::vector<PeriodCycle> out;
    if (accept('-')) return out;
    do {
      PeriodCycle c = cycle();
      int reps = 1;
      if (accept('^')) reps = integer();
      for (int i = 0; i < reps; ++i) out.push_back(c);
    } while (accept(','));
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_int_list(const std::vector<int>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

NecSignature parse_signature(std::string_view text) { return SignatureParser(text).parse(); }

std::string format_signature(const NecSignature& s) {
  std::string out = "(" + std::to_string(s.genus()) + ";" + (s.orientable() ? "+" : "-") + ";[" +
                    format_int_list(s.proper_periods()) + "];{";
  const auto& cycles = s.period_cycles();
  if (cycles.empty()) out += "-";
  for (std::size_t i = 0; i < cycles.size();) {
    std::size_t j = i;
    while (j < cycles.size() && cycles[j] == cycles[i]) ++j;
    if (i) out += ",";
    out += "(" + format_int_list(cycles[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + "})";
}

TopType parse_top_type(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '(') {
    // (g;±;k) is the short form printed by format_top_type; anything else in
    // parentheses is a full signature.
    static const std::regex short_form(R"(\s*\(\s*(\d+)\s*;\s*([+-])\s*;\s*(\d+)\s*\)\s*)");
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_match(text.begin(), text.end(), m, short_form))
      return TopType(std::stoi(m[1].str()), m[2].str() == "+", std::stoi(m[3].str()));
    return TopType::from_signature(parse_signature(text));
  }

  // shorthand g=G,±,k=K
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
    if (start == pos) throw SyntaxError("expected integer in topological type", start);
    return std::stoi(compact.substr(start, pos - start));
  };
  std::size_t pos = 0;
  auto expect = [&](std::string_view lit) {
    if (compact.compare(pos, lit.size(), lit) != 0)
      throw SyntaxError("expected '" + std::string(lit) + "' in topological type", pos);
    pos += lit.size();
  };
  expect("g=");
  int g = read_int(pos);
  expect(",");
  if (pos >= compact.size() || (compact[pos] != '+' && compact[pos] != '-'))
    throw SyntaxError("expected '+' or '-' in topological type", pos);
  bool orientable = compact[pos++] == '+';
  expect(",k=");
  int k = read_int(pos);
  if (pos != compact.size()) throw SyntaxError("trailing characters in topological type", pos);
  return TopType(g, orientable, k);
}

std::string format_top_type(const TopType& t) {
  return "(" + std::to_string(t.genus) + ";" + (t.orientable ? "+" : "-") + ";" +
         std::to_string(t.boundary) + ")";
}

int algebraic_genus(const TopType& t) {
  return t.orientable ? 2 * t.genus + t.boundary - 1 : t.genus + t.boundary - 1;
}

Rational euler_char_orb(const NecSignature& s) {
  Rational area(s.orientable() ? 2 * s.genus() : s.genus());
  area += static_cast<std::int64_t>(s.period_cycles().size()) - 2;
  for (int m : s.proper_periods()) area += Rational(m - 1, m);
  for (const auto& c : s.period_cycles())
    for (int n : c) area += Rational(n - 1, 2 * n);
  return -area;
}

std::ostream& operator<<(std::ostream& os, const NecSignature& s) {
  return os << format_signature(s);
}

std::ostream& operator<<(std::ostream& os, const TopType& t) { return os << format_top_type(t); }

}  // namespace klein
