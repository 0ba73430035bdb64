#pragma once

#include "confcoh/abelian.hpp"
#include "confcoh/chart.hpp"

namespace confcoh {

enum class Subgroup { D8, Z2xZ2, O2 };

const char* subgroup_name(Subgroup s);

enum class ActionSign { Plus = 1, Minus = -1 };

// H^q(V_{n,2}; Z)
AbGroup2 stiefel_cohomology(int n, int q);

// Action of the D8 generators on H^q(V_{n,2}); all three agree.
ActionSign d8_action_sign(int n, int q);

struct SphereBundleSSS {
  Chart e2;                       // lines q = 0 and q = n-2
  int differential_coefficient;   // d_{n-1} : E^{0,n-2} -> E^{n-1,0} is multiplication by this
  GradedGroups abutment;
};

// Serre spectral sequence of S^{n-2} -> V_{n,2} -> S^{n-1}.
SphereBundleSSS sphere_bundle_sss_e2(int n);

bool quotient_orientable(int n, Subgroup s);

// H^{2n-3}(V_{n,2}/G) for G = D8 or Z2xZ2.
AbGroup2 top_group_V_quotient(int n, Subgroup s);

// H^t of the oriented Grassmannian V_{n,2}/SO(2) from its presented ring.
AbGroup2 oriented_grassmannian_group(int n, int t);
GradedGroups oriented_grassmannian_groups(int n);

}  // namespace confcoh
