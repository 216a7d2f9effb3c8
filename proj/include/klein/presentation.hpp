#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "klein/signature.hpp"

namespace klein {

enum class GenKind { HandleA, HandleB, Glide, Elliptic, Boundary, Reflection };

/// A canonical generator. `block` is the 1-based index of the handle, glide,
/// elliptic or boundary block; reflections also carry their position in the
/// period cycle (0..s).
struct Generator {
  std::string name;
  GenKind kind;
  int block = 0;
  int position = 0;  // reflections only
  int order = 0;     // elliptics only

  bool reverses_orientation() const noexcept {
    return kind == GenKind::Glide || kind == GenKind::Reflection;
  }
};

struct Letter {
  std::string generator;
  int exponent = 1;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

/// A word in generator names, each letter raised to ±1.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Free reduction: cancels adjacent g g^-1 pairs.
  Word reduced() const;
  Word inverse() const;
  /// `w` repeated `n` times (n >= 0).
  Word power(int n) const;

  Word operator*(const Word& other) const;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Parses "d1 c1 d1^-1 c1" or "d1*c1*d1^-1"; "1" or "" is the empty word.
/// Exponents other than ±1 expand ("x1^3" = x1 x1 x1).
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

enum class RelatorKind { Long, EllipticPower, ReflectionSquare, Link, Conjugation };

struct Relator {
  Word word;
  RelatorKind kind;
};

class Presentation {
 public:
  Presentation(NecSignature signature, std::vector<Generator> generators,
               std::vector<Relator> relators);

  const NecSignature& signature() const noexcept { return signature_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<Relator>& relators() const noexcept { return relators_; }

  /// Index of a generator; also resolves the unindexed shorthand "x" for
  /// "x1" when only one such generator exists, and "c1.0" for "c1".
  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find(), but throws DomainError for unknown names.
  std::size_t index_of(std::string_view name) const;
  const Generator& generator(std::string_view name) const { return generators_[index_of(name)]; }

 private:
  NecSignature signature_;
  std::vector<Generator> generators_;
  std::vector<Relator> relators_;
};

/// Canonical presentation. Long relation ordering: elliptic generators, then
/// boundary generators, then the handle or glide block, e.g.
/// x1 e1 a1 b1 a1^-1 b1^-1 for (1;+;[3];{(3)}).
Presentation canonical_presentation(const NecSignature& s);

/// Orientation character on generators: true for glides and reflections.
std::vector<std::pair<std::string, bool>> orientation_character(const NecSignature& s);
/// Parity of orientation-reversing letters in `w` (true = reverses).
bool reverses_orientation(const Presentation& p, const Word& w);

/// Role of a polygon side with respect to its pairing generator g:
/// Target sides are images g(partner), Source sides are mapped by g onto the
/// partner, Fixed sides are fixed pointwise by a reflection.
enum class SideRole { Target, Source, Fixed };

struct Side {
  std::string label;      // "alpha1", "alpha1*", "eps2'", "gam1.0", ...
  std::string generator;  // pairing or fixing generator
  SideRole role;
  int partner = -1;  // index of the paired side, -1 for Fixed
};

/// Side sequence of the fundamental polygon, read in the positive direction.
/// Blocks: xi xi' per elliptic, eps gam_s ... gam_0 eps' per period cycle, then
/// alpha beta alpha' beta' per handle or alpha alpha* per glide. Pairings:
/// x(xi')=xi, e(eps')=eps, a(alpha')=alpha, b(beta)=beta', d(alpha*)=alpha.
/// With this choice every vertex cycle of the polygon spells a relator of
/// canonical_presentation().
std::vector<Side> surface_symbol(const NecSignature& s);
std::string format_surface_symbol(const std::vector<Side>& sides);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace klein
