#include <doctest.h>

#include "confcoh/clss.hpp"
#include "confcoh/configcoh.hpp"

using namespace confcoh;

namespace {

const Chart& page(const ScenarioRun& run, int r) {
  for (const auto& c : run.pages)
    if (c.page() == r) return c;
  FAIL("page " << r << " not recorded");
  return run.pages.front();
}

// entries listed from column `first` onwards
void expect_line(const Chart& c, int q, int first, const std::vector<std::string>& want) {
  for (std::size_t k = 0; k < want.size(); ++k) {
    const int p = first + static_cast<int>(k);
    INFO("page " << c.page() << " node (" << p << "," << q << ")");
    CHECK(c.at(p, q).to_string() == want[k]);
  }
}

// q = 0 and q = 3 of the E4 page under option (a)
const std::vector<std::string> kBaseE4a = {"Z",  "0",   "<2>", "<1>", "{1}", "<1>", "<2>",
                                           "<1>", "{1}", "<1>", "<2>", "<1>", "{1}", "<1>"};

}  // namespace

TEST_SUITE("clss") {
  TEST_CASE("E2 pages") {
    Chart d2 = build_e2(GroupId::D8, 2);
    CHECK(d2.at(0, 2) == AbGroup2::elementary(1));
    CHECK(d2.at(3, 0) == AbGroup2::elementary(1));
    CHECK(d2.at(1, 2) == AbGroup2::elementary(2));
    CHECK(d2.at(2, 2) == AbGroup2::elementary(3));
    CHECK(build_e2(GroupId::D8, 5).at(2, 4) == AbGroup2::braces(0));
    Chart z4 = build_e2(GroupId::Z2xZ2, 4);
    for (int p = 0; p <= 9; ++p) CHECK(z4.at(p, 4) == AbGroup2::elementary(p + 1));
    CHECK(build_e2(GroupId::D8, 5).lines().size() == 4);
    CHECK(build_e2(GroupId::D8, 4).lines().size() == 3);
  }

  TEST_CASE("chart json") {
    Chart c = build_e2(GroupId::D8, 2, 3);
    nlohmann::json j = c.to_json();
    CHECK(j["page"] == 2);
    CHECK(j["lines"][0]["q"] == 0);
    CHECK(j["lines"][0]["entries"][0]["p"] == 0);
    CHECK(j["lines"][0]["entries"][0]["group"]["free"] == 1);
    CHECK_THROWS_AS(c.set(9, 0, AbGroup2::integers()), Error);
    CHECK_THROWS_AS(c.set(0, 1, AbGroup2::integers()), Error);
  }

  TEST_CASE("differential bookkeeping") {
    Chart c = build_e2(GroupId::D8, 4);
    DifferentialOutcome o = apply_differential(c, {5, 0, 4, Effect::injective(1)});
    CHECK(o.source_after.is_zero());
    CHECK(o.target_after.torsion_order_log2() + 1 == o.target_before.torsion_order_log2());
    CHECK_THROWS_AS(apply_differential(c, {5, 2, 4, Effect::injective(9)}), Error);
    try {
      apply_differential(c, {5, 2, 4, Effect::injective(9)});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InconsistentOrders);
    }
    CHECK_THROWS_AS(apply_differential(c, {2, 0, 0, Effect::given(AbGroup2::zero(), AbGroup2::braces(5))}), Error);
  }

  TEST_CASE("cokernels into the base line for even m") {
    CHECK(prop_algebraico_cokernel(6, 4) == AbGroup2::braces(2));
    CHECK(prop_algebraico_cokernel(4, 3) == AbGroup2::elementary(1));
    CHECK(prop_algebraico_cokernel(8, 2) == AbGroup2::elementary(2));
    CHECK_THROWS_AS(prop_algebraico_cokernel(5, 2), Error);
    for (int m = 4; m <= 12; m += 2)
      for (int l = 2; l <= m - 1; ++l) {
        AbGroup2 c = prop_algebraico_cokernel(m, l);
        CHECK(c == cohomology(unordered(m), 2 * m - l));
        AbGroup2 base = classifying_cohomology(GroupId::D8, CoeffId::IntegerTrivial, 2 * m - l);
        CHECK(base.torsion_order_log2() == (m - l) + c.torsion_order_log2());
      }
  }

  TEST_CASE("even m executor") {
    ClssRun r2 = run_even(2);
    CHECK(r2.abutment.at(2) == AbGroup2::elementary(2));
    CHECK(r2.abutment.at(3) == AbGroup2::integers());
    ClssRun r4 = run_even(4);
    CHECK(r4.abutment.at(5) == AbGroup2::elementary(1));
    CHECK(r4.abutment.at(6) == AbGroup2::elementary(2));
    for (int m = 2; m <= 12; m += 2) {
      ClssRun d8 = run_even(GroupId::D8, m);
      CHECK(d8.report.passed());
      CHECK(d8.abutment == cohomology_table(unordered(m)));
      ClssRun z = run_even(GroupId::Z2xZ2, m);
      CHECK(z.report.passed());
      CHECK(z.abutment == cohomology_table(ordered(m)));
      // nothing into the base line halves a Z4
      Chart e2 = build_e2(GroupId::D8, m, 2 * m);
      for (const auto& d : d8.differentials)
        if (d.target_q() == 0) CHECK(d.effect.kind != EffectKind::HalveZ4s);
      for (int t = m + 1; t <= 2 * m - 2; ++t)
        CHECK(d8.e_infinity.at(t, 0).count_exponent(2) == e2.at(t, 0).count_exponent(2));
    }
  }

  TEST_CASE("odd m executor") {
    ClssRun r5 = run_1mod4(5);
    CHECK(r5.report.passed());
    CHECK(r5.abutment.at(9) == AbGroup2::elementary(1));
    // degree 8: |{4}| = |<2>| |<2>| |Z4|
    int killed = 0;
    for (const auto& d : r5.differentials)
      if (d.target_p() == 8 && d.target_q() == 0) {
        CHECK(d.effect.kind == EffectKind::InjectiveElementary);
        killed += d.effect.rank;
      }
    CHECK(killed == 4);
    CHECK(killed + cohomology(unordered(5), 8).torsion_order_log2() ==
          build_e2(GroupId::D8, 5).at(8, 0).torsion_order_log2());
    for (int m : {5, 9}) {
      ClssRun r = run_1mod4(m);
      CHECK(r.report.passed());
      for (int t = 0; t <= 2 * m - 1; ++t) CHECK(r.abutment.at(t).torsion() == cohomology(unordered(m), t).torsion());
      for (int l = 2; l <= m - 1; ++l) CHECK(odd_upper_closed_form(m, l) == cohomology(unordered(m), 2 * m - l));
    }
    for (int m = 3; m <= 11; m += 2) {
      ClssRun z = run_odd(GroupId::Z2xZ2, m);
      CHECK(z.report.passed());
      CHECK(z.abutment == cohomology_table(ordered(m)));
    }
  }

  TEST_CASE("m = 3, option (a)") {
    ScenarioRun a = m3_scenario('a');
    CHECK(a.report.passed());
    const Chart& e4 = page(a, 4);
    expect_line(e4, 0, 0, kBaseE4a);
    expect_line(e4, 3, 0, kBaseE4a);
    for (int q : {2, 5})
      for (int p = 0; p <= 10; ++p) CHECK(e4.at(p, q).to_string() == (p % 4 == 2 ? "<1>" : "0"));
    const Chart& e5 = page(a, 5);
    // everything in total degree <= 12 outside the listed nodes is gone
    for (int q : {0, 2, 3, 5})
      for (int p = 0; p + q <= 12; ++p) {
        std::string want = "0";
        if (q == 0 && p <= 5) want = std::vector<std::string>{"Z", "0", "<2>", "<1>", "<1>", "<1>"}[p];
        if (q == 2 && p == 2) want = "<1>";
        if (q == 3 && p == 0) want = "Z";
        INFO("node (" << p << "," << q << ")");
        CHECK(e5.at(p, q).to_string() == want);
      }
    CHECK(a.e_infinity.at(4, 0) == AbGroup2::elementary(1));
    CHECK(a.e_infinity.at(2, 2) == AbGroup2::elementary(1));
  }

  TEST_CASE("m = 3, option (b)") {
    ScenarioRun b = m3_scenario('b');
    CHECK(b.report.passed());
    const Chart& e3 = page(b, 3);
    expect_line(e3, 0, 0, {"Z", "0", "<2>", "<1>", "{2}", "<2>", "<4>", "<3>", "{4}", "<4>", "<6>", "<5>", "{6}", "<6>"});
    expect_line(e3, 2, 1, {"<1>", "<1>", "<2>", "<2>", "<3>", "<3>", "<4>", "<4>", "<5>", "<5>", "<6>", "<6>", "<7>"});
    expect_line(e3, 3, 0, {"Z", "0", "<2>", "<1>", "<3>", "<2>", "<4>", "<3>", "<5>", "<4>", "<6>", "<5>", "<7>", "<6>"});
    expect_line(e3, 5, 1,
                {"<1>", "Z/4", "<2>", "<2>", "<3>", "{2}", "<4>", "<4>", "<5>", "{4}", "<6>", "<6>", "<7>"});
    // the undecided d4 from (0,3) leaves Z4 at (4,0)
    CHECK(page(b, 4).at(4, 0) == AbGroup2::braces(1));
    CHECK(b.e_infinity.at(4, 0) == AbGroup2::braces(0));
    CHECK(b.e_infinity.at(2, 2).is_zero());
    CHECK(b.e_infinity.at(1, 3).is_zero());
  }

  TEST_CASE("m = 3, both options") {
    VerificationReport r = m3_scenarios();
    CHECK(r.passed());
    for (char o : {'a', 'b'}) {
      ScenarioRun s = m3_scenario(o);
      int order4 = 0;
      for (int p = 0; p <= 4; ++p) order4 += s.e_infinity.at(p, 4 - p).torsion_order_log2();
      CHECK(order4 == 2);
      int order5 = 0;
      for (int p = 0; p <= 5; ++p) order5 += s.e_infinity.at(p, 5 - p).torsion_order_log2();
      CHECK(order5 == 1);
      // pages are labelled in increasing order
      for (std::size_t i = 1; i < s.pages.size(); ++i) CHECK(s.pages[i].page() > s.pages[i - 1].page());
    }
  }

  TEST_CASE("degree m fragment for m = 3 mod 4") {
    for (int a = 0; a <= 3; ++a) CHECK(dimm_check(a).passed());
    CHECK(cohomology(unordered(3), 3).torsion() == classifying_cohomology(GroupId::D8, CoeffId::IntegerTrivial, 3));
    CHECK(cohomology(unordered(7), 7) == direct_sum(AbGroup2::integers(), AbGroup2::elementary(3)));
    CHECK_THROWS_AS(dimm_check(4), Error);
    try {
      dimm_check(4);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RangeError);
    }
  }
}
