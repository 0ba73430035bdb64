#pragma once

#include <string>

#include "confcoh/abelian.hpp"
#include "confcoh/report.hpp"

namespace confcoh {

enum class GroupId { D8, Z2xZ2 };
enum class CoeffId { IntegerTrivial, IntegerTwisted, ModTwo };

const char* group_name(GroupId g);
const char* coeff_name(CoeffId c);

// H^i(BG; c). ModTwo answers are returned as elementary abelian groups.
AbGroup2 classifying_cohomology(GroupId g, CoeffId c, int i);

int classifying_mod2_dimension(GroupId g, int i);

// rank(H^i (x) F2) + rank(ker 2 on H^{i+1}) against the mod 2 dimension and
// against the F2 engine, for 0 <= i <= i_max.
VerificationReport uct_mod2_check(GroupId g, int i_max);

}  // namespace confcoh
