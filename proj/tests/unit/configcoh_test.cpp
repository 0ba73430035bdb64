#include <doctest.h>

#include "confcoh/configcoh.hpp"
#include "confcoh/f2algebra.hpp"
#include "confcoh/groupcoh.hpp"

using namespace confcoh;

TEST_SUITE("configcoh") {
  TEST_CASE("closed forms") {
    CHECK(cohomology(unordered(6), 8) == AbGroup2::braces(2));
    CHECK(cohomology(unordered(5), 8) == AbGroup2::braces(0));
    CHECK(cohomology(ordered(5), 5) == direct_sum(AbGroup2::integers(), AbGroup2::elementary(2)));
    CHECK(cohomology(unordered(3), 4) == AbGroup2::braces(0));
    CHECK(cohomology(ordered(1), 1) == AbGroup2::integers());
    CHECK(cohomology(unordered(1), 1) == AbGroup2::integers());
    CHECK(cohomology(unordered(2), 3) == AbGroup2::integers());
    CHECK(cohomology(unordered(3), 5) == AbGroup2::elementary(1));
    CHECK(cohomology(unordered(7), 7) == direct_sum(AbGroup2::integers(), AbGroup2::elementary(3)));
    CHECK(cohomology(unordered(4), 9).is_zero());
    CHECK_THROWS_AS(cohomology(unordered(0), 0), Error);
  }

  TEST_CASE("mod 2 dimensions") {
    CHECK(mod2_dimension(unordered(4), 6) == 2);
    CHECK(mod2_dimension(ordered(5), 0) == 1);
    CHECK(mod2_dimension(unordered(6), 12) == 0);
  }

  TEST_CASE("mod 2 universal coefficients against the ring engine") {
    for (int m = 1; m <= 12; ++m)
      for (SpaceId s : {unordered(m), ordered(m)}) {
        PresentedF2Algebra ring = s.kind == SpaceKind::UnorderedB ? unordered_config_ring(m) : ordered_config_ring(m);
        GradedQuotient q(ring, 2 * m + 1);
        for (int i = 0; i <= 2 * m + 1; ++i) {
          int uct = stats(cohomology(s, i)).two_rank_tensor + stats(cohomology(s, i + 1)).mult2_kernel_rank;
          CHECK(uct == static_cast<int>(q.dimension(i)));
          CHECK(mod2_dimension(s, i) == static_cast<int>(q.dimension(i)));
        }
      }
  }

  TEST_CASE("homology") {
    CHECK(homology(unordered(2)).at(3) == AbGroup2::integers());
    CHECK(homology(ordered(5)).at(1) == AbGroup2::elementary(2));
    CHECK(homology(unordered(1)).at(1) == AbGroup2::integers());
  }

  TEST_CASE("twisted coefficients") {
    CHECK(twisted_cohomology(unordered(5), 2).torsion() == AbGroup2::braces(0));
    CHECK(twisted_cohomology(unordered(5), 2).torsion() ==
          classifying_cohomology(GroupId::D8, CoeffId::IntegerTwisted, 2));
    CHECK(twisted_cohomology(ordered(5), 3).torsion() == AbGroup2::elementary(2));
    CHECK(twisted_cohomology(ordered(5), 3).torsion() ==
          classifying_cohomology(GroupId::Z2xZ2, CoeffId::IntegerTwisted, 3));
    CHECK(twisted_cohomology(unordered(4), 5) == AbGroup2::elementary(1));
    CHECK_THROWS_AS(twisted_cohomology(unordered(4), 8), Error);
  }

  TEST_CASE("duality") {
    for (int m = 2; m <= 12; ++m) {
      CHECK(duality_symmetry_check(unordered(m)).passed());
      CHECK(duality_symmetry_check(ordered(m)).passed());
    }
    CHECK(cohomology(unordered(6), 3).torsion() == cohomology(unordered(6), 9).torsion());
    CHECK(cohomology(unordered(5), 9).torsion() == classifying_cohomology(GroupId::D8, CoeffId::IntegerTwisted, 1));
    CHECK(cohomology(ordered(4), 2).torsion() == cohomology(ordered(4), 6).torsion());
  }

  TEST_CASE("p* profiles") {
    PStarProfile a = p_star_profile(GroupId::D8, 6, 8);
    CHECK(a.behavior == PStarBehavior::Epi);
    CHECK(a.kernel_rank == 2);
    PStarProfile b = p_star_profile(GroupId::D8, 5, 8);
    CHECK(b.behavior == PStarBehavior::Epi);
    CHECK(b.kernel_rank == 4);
    CHECK(p_star_profile(GroupId::D8, 6, 3).behavior == PStarBehavior::Iso);
    CHECK_FALSE(p_star_profile(GroupId::D8, 6, 3).kernel_rank.has_value());
    CHECK(p_star_profile(GroupId::D8, 7, 10).behavior == PStarBehavior::Open);
    CHECK(p_star_profile(GroupId::D8, 7, 7).behavior == PStarBehavior::MonoOntoTorsion);
  }

  TEST_CASE("kernel ranks of p*") {
    for (int m = 2; m <= 12; ++m)
      for (int i = m + 1; i <= 2 * m - 1; ++i) {
        if (m % 2 == 0) {
          CHECK(p_star_profile(GroupId::D8, m, i).kernel_rank == i - m);
          CHECK(p_star_profile(GroupId::Z2xZ2, m, i).kernel_rank == i - m);
        } else if (m % 4 == 1) {
          CHECK(p_star_profile(GroupId::D8, m, i).kernel_rank == i - m + (i % 2 == 0 ? 1 : -1));
        } else {
          CHECK(p_star_profile(GroupId::D8, m, i).behavior == PStarBehavior::Open);
        }
      }
  }

  TEST_CASE("iso range is literal equality") {
    for (int m = 2; m <= 12; ++m)
      for (int i = 0; i <= m - 2; ++i) {
        CHECK(cohomology(unordered(m), i) == classifying_cohomology(GroupId::D8, CoeffId::IntegerTrivial, i));
        CHECK(cohomology(ordered(m), i) == classifying_cohomology(GroupId::Z2xZ2, CoeffId::IntegerTrivial, i));
      }
  }

  TEST_CASE("shape of the tables") {
    for (int m = 1; m <= 12; ++m) {
      for (int i = 0; i <= 2 * m - 1; ++i) {
        AbGroup2 f = cohomology(ordered(m), i);
        CHECK(f.count_exponent(2) == 0);
        CHECK(f.torsion().is_elementary());
        AbGroup2 b = cohomology(unordered(m), i);
        const bool z4_here = i > 0 && i < 2 * m - 1 && i % 4 == 0;
        CHECK(b.count_exponent(2) == (z4_here ? 1 : 0));
        for (int e : b.torsion_exponents()) CHECK(e <= 2);
      }
      CHECK(cohomology(unordered(m), 0) == AbGroup2::integers());
      // closed manifolds, orientable exactly for even m; m = 1 is a circle
      const int top_free = m % 2 == 0 || m == 1 ? 1 : 0;
      CHECK(cohomology(unordered(m), 2 * m - 1).free_rank() == top_free);
      CHECK(cohomology(ordered(m), 2 * m - 1).free_rank() == top_free);
    }
  }

  TEST_CASE("global checks") {
    CHECK(global_checks(ordered(7)).passed());
    CHECK(global_checks(unordered(2)).passed());
    for (int m = 2; m <= 12; ++m) {
      CHECK(global_checks(ordered(m)).passed());
      CHECK(global_checks(unordered(m)).passed());
    }
  }
}
