#include "confcoh/groupcoh.hpp"

#include "confcoh/f2algebra.hpp"

namespace confcoh {

const char* group_name(GroupId g) { return g == GroupId::D8 ? "D8" : "Z2xZ2"; }

const char* coeff_name(CoeffId c) {
  switch (c) {
    case CoeffId::IntegerTrivial: return "Z";
    case CoeffId::IntegerTwisted: return "Z_alpha";
    case CoeffId::ModTwo: return "F2";
  }
  return "?";
}

namespace {

AbGroup2 d8_trivial(int i) {
  if (i == 0) return AbGroup2::integers();
  int a = i / 4, b = i % 4;
  switch (b) {
    case 0: return AbGroup2::braces(2 * a);
    case 1: return AbGroup2::elementary(2 * a);
    case 2: return AbGroup2::elementary(2 * a + 2);
    default: return AbGroup2::elementary(2 * a + 1);
  }
}

AbGroup2 d8_twisted(int i) {
  int a = i / 4, b = i % 4;
  switch (b) {
    case 0: return AbGroup2::elementary(2 * a);
    case 1: return AbGroup2::elementary(2 * a + 1);
    case 2: return AbGroup2::braces(2 * a);
    default: return AbGroup2::elementary(2 * a + 2);
  }
}

AbGroup2 torus_trivial(int i) {
  if (i == 0) return AbGroup2::integers();
  return i % 2 == 0 ? AbGroup2::elementary(i / 2 + 1) : AbGroup2::elementary((i - 1) / 2);
}

AbGroup2 torus_twisted(int i) {
  return i % 2 == 0 ? AbGroup2::elementary(i / 2) : AbGroup2::elementary((i + 1) / 2);
}

}  // namespace

int classifying_mod2_dimension(GroupId, int i) { return i < 0 ? 0 : i + 1; }

AbGroup2 classifying_cohomology(GroupId g, CoeffId c, int i) {
  if (i < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  switch (c) {
    case CoeffId::IntegerTrivial: return g == GroupId::D8 ? d8_trivial(i) : torus_trivial(i);
    case CoeffId::IntegerTwisted: return g == GroupId::D8 ? d8_twisted(i) : torus_twisted(i);
    case CoeffId::ModTwo: return AbGroup2::elementary(classifying_mod2_dimension(g, i));
  }
  return {};
}

VerificationReport uct_mod2_check(GroupId g, int i_max) {
  VerificationReport rep("uct");
  PresentedF2Algebra ring = g == GroupId::D8 ? bd8_ring(i_max) : pinf_squared_ring(i_max);
  for (CoeffId c : {CoeffId::IntegerTrivial, CoeffId::IntegerTwisted}) {
    std::string tag = std::string(group_name(g)) + " " + coeff_name(c);
    for (int i = 0; i <= i_max; ++i) {
      int lhs = stats(classifying_cohomology(g, c, i)).two_rank_tensor +
                stats(classifying_cohomology(g, c, i + 1)).mult2_kernel_rank;
      rep.check(-1, i, tag + " mod 2 UCT", classifying_mod2_dimension(g, i), lhs);
    }
  }
  for (int i = 0; i <= i_max; ++i)
    rep.check(-1, i, std::string(group_name(g)) + " F2 engine dimension", classifying_mod2_dimension(g, i),
              static_cast<long long>(quotient_dimension(ring, i)));
  return rep;
}

}  // namespace confcoh
