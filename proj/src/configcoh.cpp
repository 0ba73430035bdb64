#include "confcoh/configcoh.hpp"

#include "confcoh/stiefel.hpp"

namespace confcoh {

std::string SpaceId::name() const {
  return std::string(kind == SpaceKind::UnorderedB ? "B" : "F") + "(P^" + std::to_string(m) + ",2)";
}

namespace {

void require_m(const SpaceId& s) {
  if (s.m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
}

AbGroup2 z_plus(int k) { return direct_sum(AbGroup2::integers(), AbGroup2::elementary(k)); }

AbGroup2 ordered_even(int n, int i) {
  if (i == 0 || i == 4 * n - 1) return AbGroup2::integers();
  if (i < 0 || i > 4 * n - 1) return {};
  if (i <= 2 * n) return i % 2 == 0 ? AbGroup2::elementary(i / 2 + 1) : AbGroup2::elementary((i - 1) / 2);
  return i % 2 == 0 ? AbGroup2::elementary(2 * n + 1 - i / 2) : AbGroup2::elementary(2 * n - (i + 1) / 2);
}

AbGroup2 ordered_odd(int n, int i) {
  if (i == 0) return AbGroup2::integers();
  if (i < 0 || i > 4 * n + 1) return {};
  if (i <= 2 * n) return i % 2 == 0 ? AbGroup2::elementary(i / 2 + 1) : AbGroup2::elementary((i - 1) / 2);
  if (i == 2 * n + 1) return z_plus(n);
  return i % 2 == 0 ? AbGroup2::elementary(2 * n + 1 - i / 2) : AbGroup2::elementary(2 * n + 1 - (i - 1) / 2);
}

AbGroup2 lower_range(int a, int b) {
  switch (b) {
    case 0: return AbGroup2::braces(2 * a);
    case 1: return AbGroup2::elementary(2 * a);
    case 2: return AbGroup2::elementary(2 * a + 2);
    default: return AbGroup2::elementary(2 * a + 1);
  }
}

AbGroup2 unordered_even(int n, int i) {
  if (i == 0 || i == 4 * n - 1) return AbGroup2::integers();
  if (i < 0 || i > 4 * n - 1) return {};
  int a = i / 4, b = i % 4;
  if (i <= 2 * n) return lower_range(a, b);
  switch (b) {
    case 0: return AbGroup2::braces(2 * n - 2 * a);
    case 1: return AbGroup2::elementary(2 * n - 2 * a - 1);
    case 2: return AbGroup2::elementary(2 * n - 2 * a);
    default: return AbGroup2::elementary(2 * n - 2 * a - 2);
  }
}

AbGroup2 unordered_odd(int n, int i) {
  if (i == 0) return AbGroup2::integers();
  if (i < 0 || i > 4 * n + 1) return {};
  int a = i / 4, b = i % 4;
  if (i < 2 * n + 1) return lower_range(a, b);
  if (i == 2 * n + 1) return z_plus(n);
  switch (b) {
    case 0: return AbGroup2::braces(2 * n - 2 * a);
    case 1: return AbGroup2::elementary(2 * n + 1 - 2 * a);
    default: return AbGroup2::elementary(2 * n - 2 * a);
  }
}

}  // namespace

AbGroup2 cohomology(const SpaceId& s, int i) {
  require_m(s);
  int n = s.m / 2;
  bool even = s.m % 2 == 0;
  if (s.kind == SpaceKind::OrderedF) return even ? ordered_even(n, i) : ordered_odd(n, i);
  return even ? unordered_even(n, i) : unordered_odd(n, i);
}

GradedGroups cohomology_table(const SpaceId& s) {
  require_m(s);
  GradedGroups g(2 * s.m - 1);
  for (int i = 0; i <= 2 * s.m - 1; ++i) g.set(i, cohomology(s, i));
  return g;
}

int mod2_dimension(const SpaceId& s, int i) {
  require_m(s);
  if (i < 0) return 0;
  if (i <= s.m - 1) return i + 1;
  if (i <= 2 * s.m - 1) return 2 * s.m - i;
  return 0;
}

GradedGroups homology(const SpaceId& s) { return uct_homology(cohomology_table(s)); }

bool space_orientable(const SpaceId& s) {
  require_m(s);
  return quotient_orientable(s.m + 1, s.kind == SpaceKind::UnorderedB ? Subgroup::D8 : Subgroup::Z2xZ2);
}

AbGroup2 twisted_cohomology(const SpaceId& s, int j) {
  require_m(s);
  if (j < 0 || j > 2 * s.m - 1) throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(j));
  if (space_orientable(s)) return cohomology(s, j);
  // twisted Poincare duality for the free part, linking form for torsion
  return direct_sum(cohomology(s, 2 * s.m - 1 - j).free_part(), cohomology(s, 2 * s.m - j).torsion());
}

VerificationReport duality_symmetry_check(const SpaceId& s) {
  require_m(s);
  VerificationReport rep("duality");
  const int m = s.m;
  const std::string tag = s.name();
  if (space_orientable(s)) {
    for (int i = 0; i <= 2 * m; ++i)
      rep.check(m, i, tag + " T(H^i) = T(H^{2m-i})", cohomology(s, 2 * m - i).torsion(), cohomology(s, i).torsion());
  } else {
    for (int j = 0; j <= m - 2; ++j)
      rep.check(m, j, tag + " T(H^{2m-j}) = H^j(BG; twisted)", classifying_cohomology(s.group(), CoeffId::IntegerTwisted, j),
                cohomology(s, 2 * m - j).torsion());
    for (int j = 0; j <= 2 * m - 1; ++j)
      rep.check(m, j, tag + " T(twisted H^j) = T(H^{2m-j})", cohomology(s, 2 * m - j).torsion(),
                twisted_cohomology(s, j).torsion());
  }
  return rep;
}

const char* behavior_name(PStarBehavior b) {
  switch (b) {
    case PStarBehavior::Iso: return "Iso";
    case PStarBehavior::Epi: return "Epi";
    case PStarBehavior::MonoOntoTorsion: return "MonoOntoTorsion";
    case PStarBehavior::Zero: return "Zero";
    case PStarBehavior::Open: return "Open";
  }
  return "?";
}

PStarProfile p_star_profile(GroupId g, int m, int i) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
  if (i < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  SpaceId s{g == GroupId::D8 ? SpaceKind::UnorderedB : SpaceKind::OrderedF, m};
  auto ratio = [&] {
    return classifying_cohomology(g, CoeffId::IntegerTrivial, i).torsion_order_log2() -
           cohomology(s, i).torsion_order_log2();
  };
  if (m % 2 == 0) {
    if (i <= m) return {PStarBehavior::Iso, std::nullopt};
    if (i < 2 * m - 1) return {PStarBehavior::Epi, ratio()};
    return {PStarBehavior::Zero, ratio()};
  }
  if (i < m) return {PStarBehavior::Iso, std::nullopt};
  if (i == m) return {PStarBehavior::MonoOntoTorsion, std::nullopt};
  if (i <= 2 * m - 1) {
    if (g == GroupId::D8 && m % 4 == 3) return {PStarBehavior::Open, std::nullopt};
    return {PStarBehavior::Epi, ratio()};
  }
  return {PStarBehavior::Zero, ratio()};
}

VerificationReport global_checks(const SpaceId& s) {
  require_m(s);
  if (s.m < 2) throw Error(ErrorKind::InvalidArgument, "global checks need m >= 2");
  VerificationReport rep("global");
  const int m = s.m;
  const std::string tag = s.name();
  const int top_free = m % 2 == 0 ? 2 * m - 1 : m;
  for (int i = 0; i <= 2 * m + 1; ++i) {
    int expected = (i == 0 || i == top_free) ? 1 : 0;
    rep.check(m, i, tag + " free rank", expected, cohomology(s, i).free_rank());
  }
  Subgroup sub = s.kind == SpaceKind::UnorderedB ? Subgroup::D8 : Subgroup::Z2xZ2;
  rep.check(m, 2 * m - 1, tag + " top group", top_group_V_quotient(m + 1, sub), cohomology(s, 2 * m - 1));
  for (int i = 0; i <= 2 * m + 1; ++i)
    rep.check(m, i, tag + " mod 2 UCT", mod2_dimension(s, i),
              stats(cohomology(s, i)).two_rank_tensor + stats(cohomology(s, i + 1)).mult2_kernel_rank);
  int euler = 0;
  for (int i = 0; i <= 2 * m - 1; ++i) euler += (i % 2 ? -1 : 1) * cohomology(s, i).free_rank();
  rep.check(m, -1, tag + " Euler characteristic", 0, euler);
  int bound = s.kind == SpaceKind::UnorderedB ? 2 : 1;
  for (int i = 0; i <= 2 * m - 1; ++i) {
    const auto e = cohomology(s, i).torsion_exponents();
    int worst = e.empty() ? 0 : e.back();
    rep.check_true(m, i, tag + " torsion exponent <= " + std::to_string(bound), worst <= bound,
                   "exponent " + std::to_string(worst));
  }
  return rep;
}

}  // namespace confcoh
