#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace klein {

using Rational = boost::rational<std::int64_t>;

enum class Sign { Plus, Minus };

using PeriodCycle = std::vector<int>;

/// Signature (g; ±; [m_1,...,m_r]; {C_1,...,C_k}) of an NEC group.
///
/// Proper periods are kept sorted; period cycles keep the order they were
/// given in. Invariants are checked on construction and violations throw
/// DomainError.
class NecSignature {
 public:
  NecSignature(int genus, Sign sign, std::vector<int> proper_periods = {},
               std::vector<PeriodCycle> period_cycles = {});

  /// Surface group signature (g; ±; [-]; {(-)^k}).
  static NecSignature surface(int genus, Sign sign, int boundary);

  int genus() const noexcept { return genus_; }
  Sign sign() const noexcept { return sign_; }
  bool orientable() const noexcept { return sign_ == Sign::Plus; }
  const std::vector<int>& proper_periods() const noexcept { return periods_; }
  const std::vector<PeriodCycle>& period_cycles() const noexcept { return cycles_; }

  /// No proper periods and every period cycle empty.
  bool is_surface() const noexcept;

  bool operator==(const NecSignature&) const = default;

 private:
  int genus_;
  Sign sign_;
  std::vector<int> periods_;
  std::vector<PeriodCycle> cycles_;
};

/// Topological type (g; ±; k) of a compact surface.
struct TopType {
  int genus = 0;
  bool orientable = true;
  int boundary = 0;

  TopType() = default;
  TopType(int g, bool orient, int k);

  NecSignature to_signature() const;
  /// Throws DomainError for signatures with periods or non-empty cycles.
  static TopType from_signature(const NecSignature& s);

  int euler_char() const noexcept {
    return (orientable ? 2 - 2 * genus : 2 - genus) - boundary;
  }

  bool operator==(const TopType&) const = default;
};

NecSignature parse_signature(std::string_view text);
std::string format_signature(const NecSignature& s);

/// Accepts either the shorthand "g=2,-,k=3" or a surface signature.
TopType parse_top_type(std::string_view text);
/// "(g;±;k)"
std::string format_top_type(const TopType& t);

int algebraic_genus(const TopType& t);

/// Orbifold Euler characteristic -(αg + c - 2 + Σ(1-1/m) + ½ΣΣ(1-1/n)).
Rational euler_char_orb(const NecSignature& s);

std::ostream& operator<<(std::ostream& os, const NecSignature& s);
std::ostream& operator<<(std::ostream& os, const TopType& t);

}  // namespace klein
