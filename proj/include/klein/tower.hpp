#pragma once

#include <array>
#include <string>
#include <utility>

#include "klein/homomorphism.hpp"
#include "klein/presentation.hpp"
#include "klein/signature.hpp"

namespace klein {

/// The three involutions s, t, st of C2 x C2. Reflections map to s, glides
/// to t, so s is the involution with fixed curves and t is free.
enum class Involution { S, T, ST };

std::string to_string(Involution u);

struct TowerQuotient {
  Involution involution = Involution::S;
  TopType type;
  std::string label;  // "OX", "SX" or "X+"
};

struct TowerReport {
  TopType x;
  TopType dx;
  std::array<TowerQuotient, 3> quotients;  // indexed by Involution
  std::array<int, 3> fix_circle_counts{};  // boundary count of each quotient
  /// Components of DX after cutting along the curves lying over ∂X.
  int fix_s_cut_components = 0;
  bool fix_s_separating = false;

  const TowerQuotient& quotient(Involution u) const { return quotients[static_cast<int>(u)]; }
};

/// Builds DX = U/ker ω and its quotients by <s>, <t>, <st> with the covering
/// engine, and checks each against the closed-form doubles. Requires a
/// non-orientable bordered surface of genus >= 1.
TowerReport build_tower(const TopType& t);

/// Diagram of DX over OX, X+, SX over X.
std::string format_tower_diagram(const TowerReport& r);

/// Parity of reflection letters in `w`; true is the nontrivial element of C2.
/// Throws DomainError for letters that are not canonical generators of `t`.
bool dd_monodromy(const TopType& t, const Word& w);

struct LiftingKernel {
  TopType x;
  TopType dx;
};

/// X = U/ker θ and the surface uniformized by ker θ'. Throws DomainError when
/// ker θ is not a bordered non-orientable surface group and InconsistencyError
/// when ker θ' does not have type dd_type(X).
LiftingKernel lifting_kernel_type(const NecSignature& delta, const GroupHom& theta);

}  // namespace klein
