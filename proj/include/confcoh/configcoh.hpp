#pragma once

#include <optional>
#include <string>

#include "confcoh/abelian.hpp"
#include "confcoh/groupcoh.hpp"
#include "confcoh/report.hpp"

namespace confcoh {

enum class SpaceKind { OrderedF, UnorderedB };

struct SpaceId {
  SpaceKind kind;
  int m;
  GroupId group() const { return kind == SpaceKind::UnorderedB ? GroupId::D8 : GroupId::Z2xZ2; }
  std::string name() const;
};

inline SpaceId ordered(int m) { return {SpaceKind::OrderedF, m}; }
inline SpaceId unordered(int m) { return {SpaceKind::UnorderedB, m}; }

// Integral cohomology of F(P^m,2) or B(P^m,2).
AbGroup2 cohomology(const SpaceId& s, int i);
GradedGroups cohomology_table(const SpaceId& s);

int mod2_dimension(const SpaceId& s, int i);

GradedGroups homology(const SpaceId& s);

bool space_orientable(const SpaceId& s);

// Cohomology with coefficients twisted by the orientation character.
AbGroup2 twisted_cohomology(const SpaceId& s, int j);

VerificationReport duality_symmetry_check(const SpaceId& s);

enum class PStarBehavior { Iso, Epi, MonoOntoTorsion, Zero, Open };

const char* behavior_name(PStarBehavior b);

struct PStarProfile {
  PStarBehavior behavior;
  std::optional<int> kernel_rank;  // log2 of |T H^i(BG)| / |T H^i(space)| where meaningful
};

// The map H^i(BG) -> H^i(space) induced by the classifying map.
PStarProfile p_star_profile(GroupId g, int m, int i);

VerificationReport global_checks(const SpaceId& s);

}  // namespace confcoh
