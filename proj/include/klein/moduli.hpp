#pragma once

#include <vector>

#include "klein/signature.hpp"

namespace klein {

/// Type (h; -; k) of the quotient of a non-separating real curve of
/// algebraic genus p = h + k - 1.
struct RealCurveType {
  TopType top_type;
  int algebraic_genus = 0;

  bool operator==(const RealCurveType&) const = default;
};

/// All (h; -; k) with h >= 1, k >= 0 and h + k - 1 = p, by increasing h.
/// Throws DomainError for p < 1.
std::vector<RealCurveType> real_curve_types(int p);

/// Type of DK; genus 2p - 1. Refuses k = 0, where the map onto C2 x C2 is not
/// surjective and DK is undefined.
TopType psi_image(const RealCurveType& t);

struct MembershipReport {
  TopType dx;
  TopType conformal_quotient;      // DX / <st>
  TopType anticonformal_quotient;  // DX / <t>
  bool free_conformal = false;
  bool free_anticonformal = false;

  bool passed() const noexcept { return free_conformal && free_anticonformal; }
};

/// Checks that DX carries a free conformal and a free anticonformal
/// involution. Throws InconsistencyError if either check fails.
MembershipReport n_membership_check(const RealCurveType& t);

}  // namespace klein
