#include <doctest.h>

#include <random>

#include "confcoh/abelian.hpp"
#include "support/minors.hpp"

using namespace confcoh;
using testing_support::invariant_factors_by_minors;

namespace {

std::vector<long> diag_of(const SmithForm& s) {
  std::vector<long> out;
  for (const auto& d : s.diagonal) out.push_back(d.get_si());
  return out;
}

}  // namespace

TEST_SUITE("abelian") {
  TEST_CASE("smith normal form examples") {
    CHECK(diag_of(smith_normal_form({{2}})) == std::vector<long>{2});
    CHECK(smith_normal_form({{2}}).rank == 1);
    CHECK(diag_of(smith_normal_form({{2, 0}, {0, 4}})) == std::vector<long>{2, 4});
    // hand reduction: column op c2 -= c1 gives [[2,0],[0,4]]
    SmithForm s = smith_normal_form({{2, 2}, {0, 4}});
    CHECK(diag_of(s) == std::vector<long>{2, 4});
    CHECK(s.rank == 2);
    CHECK(diag_of(smith_normal_form({{2, 0}, {0, 3}})) == std::vector<long>{1, 6});
    CHECK(smith_normal_form(IntMatrix(2, 3)).rank == 0);
  }

  TEST_CASE("group from presentation") {
    CHECK(group_from_presentation({{2}}) == AbGroup2::elementary(1));
    CHECK(group_from_presentation({{4}}) == AbGroup2::braces(0));
    CHECK(group_from_presentation(IntMatrix(0, 1)) == AbGroup2::integers());
    CHECK(group_from_presentation({{2, 0, 0}}) == AbGroup2(2, {1}));
    CHECK_THROWS_AS(group_from_presentation({{6}}), Error);
    try {
      group_from_presentation({{3}});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonTwoPrimary);
    }
  }

  TEST_CASE("direct sums and notation") {
    CHECK(direct_sum(AbGroup2::elementary(2), AbGroup2::cyclic(2)) == AbGroup2::braces(2));
    CHECK(direct_sum(AbGroup2::integers(), AbGroup2::elementary(3)).to_string() == "Z + <3>");
    CHECK(direct_sum(AbGroup2::zero(), AbGroup2::braces(1)) == AbGroup2::braces(1));
    CHECK(AbGroup2::braces(4).to_string() == "{4}");
    CHECK(AbGroup2::braces(0).to_string() == "Z/4");
    CHECK(AbGroup2::integers(3).to_string() == "Z^3");
    CHECK(AbGroup2::zero().to_string() == "0");
    CHECK(AbGroup2(0, {2, 2}).to_string() == "Z/4 + Z/4");
    CHECK(AbGroup2(0, {1, 3}).to_string() == "<1> + Z/8");
  }

  TEST_CASE("stats") {
    CHECK(stats(AbGroup2::braces(2)) == GroupStats{3, 3, 4, 1});
    CHECK(stats(direct_sum(AbGroup2::integers(), AbGroup2::elementary(2))) == GroupStats{3, 2, 2, 0});
    CHECK(stats(AbGroup2::braces(4)) == GroupStats{5, 5, 6, 1});
  }

  TEST_CASE("json encoding") {
    AbGroup2 g(1, {1, 1, 2});
    nlohmann::json j = to_json(g);
    CHECK(j.dump() == R"({"free":1,"torsion":[2,2,4]})");
    CHECK(group_from_json(j) == g);
    CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"({"free":0,"torsion":[6]})")), Error);
  }

  TEST_CASE("graded groups") {
    GradedGroups g(3);
    g.set(1, AbGroup2::elementary(1));
    g.set(2, AbGroup2::zero());
    CHECK(g.groups().size() == 1);
    CHECK(g.at(2).is_zero());
    CHECK_THROWS_AS(g.set(4, AbGroup2::integers()), Error);
    CHECK_THROWS_AS(g.set(-1, AbGroup2::integers()), Error);
  }

  TEST_CASE("uct examples") {
    // B(P^4,2): Z, 0, <2>, <1>, {2}, <1>, <2>, Z
    GradedGroups coh(7);
    const AbGroup2 row[] = {AbGroup2::integers(), {}, AbGroup2::elementary(2), AbGroup2::elementary(1),
                            AbGroup2::braces(2), AbGroup2::elementary(1), AbGroup2::elementary(2), AbGroup2::integers()};
    for (int i = 0; i < 8; ++i) coh.set(i, row[i]);
    GradedGroups hom = uct_homology(coh);
    CHECK(hom.at(6).is_zero());
    CHECK(hom.at(7) == AbGroup2::integers());
    CHECK(hom.at(1) == AbGroup2::elementary(2));
    CHECK(hom.at(3) == AbGroup2::braces(2));
    CHECK(uct_cohomology(hom) == coh);
  }

  TEST_CASE("smith normal form against determinantal divisors") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> dim(1, 6), entry(-8, 8), sparse(0, 3);
    int tested = 0;
    for (int trial = 0; trial < 600; ++trial) {
      IntMatrix m(dim(rng), dim(rng));
      const bool thin = trial % 3 == 0;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = thin && sparse(rng) != 0 ? 0 : entry(rng);
      SmithForm s = smith_normal_form(m);
      std::vector<mpz_class> want = invariant_factors_by_minors(m);
      REQUIRE(s.diagonal.size() == want.size());
      CHECK(s.rank == static_cast<int>(want.size()));
      for (std::size_t i = 0; i < want.size(); ++i) CHECK(s.diagonal[i] == want[i]);
      for (std::size_t i = 1; i < s.diagonal.size(); ++i) CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
      ++tested;
    }
    CHECK(tested >= 500);
  }

  TEST_CASE("smith normal form is idempotent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-8, 8);
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix m(dim(rng), dim(rng));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
      SmithForm s = smith_normal_form(m);
      IntMatrix d(s.diagonal.size(), s.diagonal.size());
      for (std::size_t i = 0; i < s.diagonal.size(); ++i) d(i, i) = s.diagonal[i];
      SmithForm again = smith_normal_form(d);
      CHECK(again.diagonal == s.diagonal);
    }
  }

  TEST_CASE("presentation round trip") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> free(0, 3), count(0, 5), exp(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> e(count(rng));
      for (auto& x : e) x = exp(rng);
      AbGroup2 g(free(rng), e);
      CHECK(group_from_presentation(presentation_of(g)) == g);
    }
  }

  TEST_CASE("uct round trip on random tables") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> small(0, 2), exp(1, 2);
    for (int trial = 0; trial < 200; ++trial) {
      const int top = 2 + trial % 9;
      GradedGroups coh(top);
      coh.set(0, AbGroup2::integers());
      for (int i = 1; i <= top; ++i) {
        std::vector<int> e(small(rng));
        for (auto& x : e) x = exp(rng);
        coh.set(i, AbGroup2(i == top ? 1 : small(rng), e));
      }
      // degree 1 torsion cannot come from a missing H_0 torsion
      coh.set(1, coh.at(1).free_part());
      GradedGroups hom = uct_homology(coh);
      for (int i = 0; i < top; ++i)
        if (coh.at(i + 1).torsion().is_zero()) CHECK(hom.at(i).torsion().is_zero());
      CHECK(uct_cohomology(hom) == coh);
    }
  }
}
