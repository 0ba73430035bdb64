#include "confcoh/clss.hpp"

#include <algorithm>

#include "confcoh/bockstein.hpp"
#include "confcoh/configcoh.hpp"

namespace confcoh {

const char* effect_name(EffectKind k) {
  switch (k) {
    case EffectKind::Zero: return "zero";
    case EffectKind::InjectiveElementary: return "injective";
    case EffectKind::HalveZ4s: return "halve-Z4";
    case EffectKind::KernelTwoZ: return "kernel-2Z";
    case EffectKind::Explicit: return "explicit";
  }
  return "?";
}

const char* extension_name(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::Trivial: return "Trivial";
    case ExtensionKind::Nontrivial: return "Nontrivial";
    case ExtensionKind::ForcedByOrder: return "Forced-by-order";
  }
  return "?";
}

std::string DifferentialSpec::describe() const {
  std::string s = "d" + std::to_string(page) + " (" + std::to_string(p) + "," + std::to_string(q) + ")->(" +
                  std::to_string(target_p()) + "," + std::to_string(target_q()) + ") " + effect_name(effect.kind);
  if (effect.kind == EffectKind::InjectiveElementary) s += " rank " + std::to_string(effect.rank);
  if (effect.kind == EffectKind::Explicit)
    s += " ker " + effect.kernel.to_string() + " coker " + effect.cokernel.to_string();
  return s;
}

namespace {

[[noreturn]] void inconsistent(const DifferentialSpec& d, const std::string& why) {
  throw Error(ErrorKind::InconsistentOrders, d.describe() + ": " + why);
}

AbGroup2 drop_ones(const AbGroup2& g, int k, const DifferentialSpec& d) {
  std::vector<int> e = g.torsion_exponents();
  for (int i = 0; i < k; ++i) {
    auto it = std::find(e.begin(), e.end(), 1);
    if (it == e.end()) inconsistent(d, "target " + g.to_string() + " has fewer than " + std::to_string(k) + " Z2 summands");
    e.erase(it);
  }
  return AbGroup2(g.free_rank(), e);
}

AbGroup2 halve_one(const AbGroup2& g) {
  std::vector<int> e = g.torsion_exponents();
  auto it = std::find(e.begin(), e.end(), 2);
  *it = 1;
  return AbGroup2(g.free_rank(), e);
}

}  // namespace

DifferentialOutcome apply_differential(Chart& chart, const DifferentialSpec& d) {
  if (d.page < 2) inconsistent(d, "page must be at least 2");
  if (!chart.has_line(d.q)) inconsistent(d, "source line not in chart");
  if (!chart.has_line(d.target_q())) inconsistent(d, "target line not in chart");
  if (d.target_p() > chart.p_max()) inconsistent(d, "target column outside chart");
  if (d.page < chart.page()) inconsistent(d, "differentials must be applied in page order");
  chart.set_page(d.page);

  DifferentialOutcome out;
  out.source_before = out.source_after = chart.at(d.p, d.q);
  out.target_before = out.target_after = chart.at(d.target_p(), d.target_q());
  const AbGroup2& a = out.source_before;
  const AbGroup2& b = out.target_before;

  switch (d.effect.kind) {
    case EffectKind::Zero:
      break;
    case EffectKind::InjectiveElementary:
      if (!a.is_elementary() || a.torsion_rank() != d.effect.rank)
        inconsistent(d, "source " + a.to_string() + " is not elementary of rank " + std::to_string(d.effect.rank));
      out.source_after = AbGroup2{};
      out.target_after = drop_ones(b, d.effect.rank, d);
      break;
    case EffectKind::HalveZ4s:
      if (b.count_exponent(2) == 0) inconsistent(d, "target " + b.to_string() + " has no Z4");
      if (a.count_exponent(2) > 0)
        out.source_after = halve_one(a);
      else if (a.free_rank() == 0)
        inconsistent(d, "source " + a.to_string() + " has neither Z nor Z4");
      out.target_after = halve_one(b);
      break;
    case EffectKind::KernelTwoZ:
      if (a.free_rank() != 1 || !a.torsion().is_zero()) inconsistent(d, "source " + a.to_string() + " is not Z");
      out.target_after = drop_ones(b, 1, d);
      break;
    case EffectKind::Explicit: {
      const AbGroup2& k = d.effect.kernel;
      const AbGroup2& c = d.effect.cokernel;
      if (k.free_rank() != a.free_rank()) inconsistent(d, "kernel must keep the free rank of the source");
      if (c.free_rank() != b.free_rank()) inconsistent(d, "cokernel must keep the free rank of the target");
      if (k.torsion_rank() > a.torsion_rank() && a.free_rank() == 0) inconsistent(d, "kernel larger than source");
      if (c.torsion_rank() > b.torsion_rank()) inconsistent(d, "cokernel has more summands than target");
      int image = b.torsion_order_log2() - c.torsion_order_log2();
      if (image < 0) inconsistent(d, "cokernel larger than target");
      if (a.free_rank() == 0 && a.torsion_order_log2() - k.torsion_order_log2() != image)
        inconsistent(d, "|source| != |kernel| * |cokernel-complement|");
      if (a.free_rank() == 0 && image > 0 && a.is_zero()) inconsistent(d, "zero source");
      out.source_after = k;
      out.target_after = c;
      break;
    }
  }
  chart.set(d.p, d.q, out.source_after);
  chart.set(d.target_p(), d.target_q(), out.target_after);
  return out;
}

Chart build_e2(GroupId g, int m, int p_max) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "chart needs m >= 2");
  if (p_max < 0) p_max = 2 * m + 1;
  Chart c(2, m, g, p_max);
  auto fill = [&](int q, CoeffId coeff) {
    c.declare_line(q, coeff_name(coeff));
    for (int p = 0; p <= p_max; ++p) c.set(p, q, classifying_cohomology(g, coeff, p));
  };
  fill(0, CoeffId::IntegerTrivial);
  if (m % 2 == 0) {
    fill(m, CoeffId::ModTwo);
    fill(2 * m - 1, CoeffId::IntegerTrivial);
  } else {
    fill(m - 1, CoeffId::IntegerTwisted);
    fill(m, CoeffId::IntegerTrivial);
    fill(2 * m - 1, CoeffId::IntegerTwisted);
  }
  return c;
}

AbGroup2 prop_algebraico_cokernel(int m, int l) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorKind::RangeError, "m must be even");
  if (l < 2 || l > m - 1) throw Error(ErrorKind::RangeError, "l must lie in 2..m-1");
  if (l % 4 == 0) return AbGroup2::braces(l / 2);
  if (l % 4 == 2) return AbGroup2::elementary(l / 2 + 1);
  return AbGroup2::elementary((l - 1) / 2);
}

AbGroup2 odd_upper_closed_form(int m, int l) {
  if (m % 4 != 1) throw Error(ErrorKind::RangeError, "m must be 1 mod 4");
  if (l < 2 || l > m - 1) throw Error(ErrorKind::RangeError, "l must lie in 2..m-1");
  if (l % 4 == 0) return AbGroup2::elementary(l / 2);
  if (l % 4 == 2) return AbGroup2::braces(l / 2 - 1);
  return AbGroup2::elementary((l + 1) / 2);
}

namespace {

struct Node {
  int p, q;
  AbGroup2 g;
};

std::vector<Node> total_degree(const Chart& c, int t) {
  std::vector<Node> out;
  for (const auto& [q, line] : c.lines()) {
    int p = t - q;
    if (p < 0 || p > c.p_max()) continue;
    AbGroup2 g = c.at(p, q);
    if (!g.is_zero()) out.push_back({p, q, g});
  }
  return out;
}

// Sum of the entries in total degree t. With two or more torsion entries the
// caller has to decree the extension; a free quotient always splits.
AbGroup2 assemble(const Chart& c, int t, int m, VerificationReport& rep, std::vector<ExtensionRecord>& ext,
                  const AbGroup2* decree = nullptr) {
  auto nodes = total_degree(c, t);
  AbGroup2 sum;
  int torsion_nodes = 0;
  for (const auto& n : nodes) {
    sum = direct_sum(sum, n.g);
    if (!n.g.torsion().is_zero()) ++torsion_nodes;
  }
  if (nodes.size() < 2) return sum;
  if (torsion_nodes >= 2) {
    if (!decree) throw Error(ErrorKind::NotApplicable, "undecided extension in degree " + std::to_string(t));
    rep.check(m, t, "extension order", sum.torsion_order_log2(), decree->torsion_order_log2());
    rep.check(m, t, "extension free rank", sum.free_rank(), decree->free_rank());
    ExtensionKind k = *decree == sum ? ExtensionKind::Trivial : ExtensionKind::Nontrivial;
    ext.push_back({t, k, *decree});
    rep.note(m, t, "extension", extension_name(k));
    return *decree;
  }
  ext.push_back({t, ExtensionKind::Trivial, sum});
  rep.note(m, t, "extension", std::string(extension_name(ExtensionKind::Trivial)) + " (free quotient)");
  return sum;
}

SpaceId space_of(GroupId g, int m) { return g == GroupId::D8 ? unordered(m) : ordered(m); }

void record(ClssRun& run, Chart& chart, const DifferentialSpec& d, int m) {
  DifferentialOutcome o = apply_differential(chart, d);
  run.differentials.push_back(d);
  if (d.effect.kind == EffectKind::InjectiveElementary || d.effect.kind == EffectKind::KernelTwoZ)
    run.report.check(m, d.target_p() + d.target_q(), "Z4 preserved by " + d.describe(),
                     o.target_before.count_exponent(2), o.target_after.count_exponent(2));
}

}  // namespace

ClssRun run_even(GroupId g, int m) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorKind::RangeError, "run_even needs even m >= 2");
  ClssRun run{GradedGroups(2 * m - 1), VerificationReport("clss"), build_e2(g, m, 2 * m), {}, {}};
  Chart& chart = run.e_infinity;
  const SpaceId s = space_of(g, m);
  const RankSequence ranks = rank_recursion(s);
  const std::string tag = std::string(group_name(g)) + " even";

  for (int l = m - 1; l >= 0; --l) {
    DifferentialSpec d{m + 1, m - l - 1, m, Effect::injective(m - l)};
    AbGroup2 target_e2 = chart.at(2 * m - l, 0);
    record(run, chart, d, m);
    if (l == 0) continue;
    AbGroup2 coker = chart.at(2 * m - l, 0);
    if (g == GroupId::D8 && l >= 2) {
      run.report.check(m, 2 * m - l, tag + " cokernel closed form", prop_algebraico_cokernel(m, l), coker);
      run.report.check(m, 2 * m - l, tag + " cokernel order", target_e2.torsion_order_log2(),
                       m - l + prop_algebraico_cokernel(m, l).torsion_order_log2());
    }
    if (l >= 2) {
      run.report.check_true(m, 2 * m - l, tag + " 2-rank of cokernel <= r", coker.torsion_rank() <= ranks.r.at(2 * m - l),
                            std::to_string(coker.torsion_rank()) + " > " + std::to_string(ranks.r.at(2 * m - l)));
      run.report.check(m, 2 * m - l, tag + " r closed form", expected_rank_from_top(m, l), ranks.r.at(2 * m - l));
    }
  }

  for (int t = 0; t <= 2 * m - 1; ++t) {
    AbGroup2 got = assemble(chart, t, m, run.report, run.extensions);
    run.abutment.set(t, got);
    AbGroup2 want = cohomology(s, t);
    run.report.check(m, t, tag + " abutment", want, got);
  }
  return run;
}

ClssRun run_odd(GroupId g, int m) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorKind::RangeError, "run_odd needs odd m >= 3");
  if (g == GroupId::D8 && (m % 4 != 1 || m < 5))
    throw Error(ErrorKind::RangeError, "the D8 executor covers m = 1 mod 4, m >= 5");
  ClssRun run{GradedGroups(2 * m - 1), VerificationReport("clss"), build_e2(g, m, 2 * m), {}, {}};
  Chart& chart = run.e_infinity;
  const SpaceId s = space_of(g, m);
  const RankSequence ranks = rank_recursion(s);
  const std::string tag = std::string(group_name(g)) + " odd";

  if (g == GroupId::D8) {
    for (int p = 0; p + 2 <= chart.p_max(); p += 4) record(run, chart, {2, p, m, Effect::halve()}, m);
    const int a = (m - 1) / 4;
    for (int l = 2; l <= m - 1; ++l) {
      AbGroup2 e_low = l % 2 == 0 ? AbGroup2::elementary(2 * a + 1 - l / 2) : AbGroup2::elementary(2 * a - (l - 1) / 2);
      run.report.check(m, 2 * m - l - 1, "E3 twisted line", e_low, chart.at(m - l, m - 1));
      AbGroup2 e_mid = l == m - 1 ? AbGroup2::integers()
                       : l % 2 == 0 ? AbGroup2::elementary(2 * a + 1 - l / 2)
                                    : AbGroup2::elementary(2 * a - (l + 1) / 2);
      run.report.check(m, 2 * m - l - 1, "E3 line q=m", e_mid, chart.at(m - l - 1, m));
    }
  }

  Chart e3 = chart;
  for (int l = m - 1; l >= 0; --l) {
    AbGroup2 src = chart.at(m - l, m - 1);
    if (!src.is_zero()) record(run, chart, {m, m - l, m - 1, Effect::injective(src.torsion_rank())}, m);
  }
  for (int l = m - 1; l >= 0; --l) {
    AbGroup2 src = chart.at(m - l - 1, m);
    Effect e = src.free_rank() ? Effect::kernel_two_z() : Effect::injective(src.torsion_rank());
    if (!src.is_zero()) record(run, chart, {m + 1, m - l - 1, m, e}, m);
  }

  for (int l = 1; l <= m - 1; ++l) {
    const int t = 2 * m - l;
    AbGroup2 src_m = e3.at(m - l, m - 1);
    AbGroup2 src_m1 = e3.at(m - l - 1, m);
    int image = src_m.torsion_order_log2() + (src_m1.free_rank() ? 1 : src_m1.torsion_order_log2());
    run.report.check(m, t, tag + " order equation", e3.at(t, 0).torsion_order_log2(),
                     image + cohomology(s, t).torsion_order_log2());
    AbGroup2 survivor = chart.at(t, 0);
    run.report.check_true(m, t, tag + " 2-rank of survivor <= r", survivor.torsion_rank() <= ranks.r.at(t),
                          std::to_string(survivor.torsion_rank()));
    if (g == GroupId::D8 && l >= 2)
      run.report.check(m, t, tag + " closed form after the proof", odd_upper_closed_form(m, l), survivor);
  }

  for (int t = 0; t <= 2 * m - 1; ++t) {
    AbGroup2 got = assemble(chart, t, m, run.report, run.extensions);
    run.abutment.set(t, got);
    run.report.check(m, t, tag + " abutment", cohomology(s, t), got);
  }
  return run;
}

namespace {

void push_range(std::vector<DifferentialSpec>& v, int page, int q, const std::vector<std::pair<int, Effect>>& items) {
  for (const auto& [p, e] : items) v.push_back({page, p, q, e});
}

std::vector<DifferentialSpec> scenario_differentials(char option) {
  const AbGroup2 none, z = AbGroup2::integers(), one = AbGroup2::elementary(1);
  const Effect iso = Effect::given(none, none);
  const Effect keep_one = Effect::given(one, one);
  std::vector<DifferentialSpec> v;
  if (option == 'a') {
    push_range(v, 2, 3, {{0, Effect::zero()}, {4, Effect::zero()}, {8, Effect::zero()}, {12, Effect::zero()}});
    std::vector<std::pair<int, Effect>> d3 = {
        {1, Effect::injective(1)}, {2, keep_one}, {3, Effect::injective(2)}, {4, Effect::injective(2)},
        {5, Effect::injective(3)}, {6, keep_one}, {7, Effect::injective(4)}, {8, Effect::injective(4)},
        {9, Effect::injective(5)}, {10, keep_one}};
    push_range(v, 3, 2, d3);
    push_range(v, 3, 5, d3);
    push_range(v, 4, 3, {{0, Effect::given(z, one)}, {2, iso}, {3, iso}, {4, iso}, {5, iso}, {6, iso}, {7, iso},
                         {8, iso}, {9, iso}});
    push_range(v, 4, 5, {{2, iso}, {6, iso}});
    return v;
  }
  if (option != 'b') throw Error(ErrorKind::InvalidArgument, "option must be 'a' or 'b'");
  push_range(v, 2, 3, {{0, Effect::halve()}, {4, Effect::halve()}, {8, Effect::halve()}, {12, Effect::halve()}});
  push_range(v, 3, 2,
             {{1, Effect::injective(1)}, {2, Effect::injective(1)}, {3, Effect::injective(2)}, {4, Effect::injective(2)},
              {5, Effect::injective(3)}, {6, Effect::injective(3)}, {7, Effect::injective(4)}, {8, Effect::injective(4)},
              {9, Effect::injective(5)}, {10, Effect::injective(5)}});
  push_range(v, 3, 5,
             {{1, Effect::injective(1)}, {2, keep_one}, {3, Effect::injective(2)}, {4, Effect::injective(2)},
              {5, Effect::injective(3)}, {6, keep_one}, {7, Effect::injective(4)}, {8, Effect::injective(4)},
              {9, Effect::injective(5)}, {10, keep_one}});
  push_range(v, 4, 3, {{0, Effect::given(z, AbGroup2::cyclic(2))}, {2, iso}, {3, iso}, {4, Effect::given(none, one)},
                       {5, iso}, {6, iso}, {7, iso}, {8, Effect::given(none, one)}, {9, iso}});
  push_range(v, 6, 5, {{2, iso}, {6, iso}});
  return v;
}

}  // namespace

ScenarioRun m3_scenario(char option) {
  const int m = 3;
  ScenarioRun run{std::string("option (") + option + ")", scenario_differentials(option), {}, build_e2(GroupId::D8, m, 15),
                  VerificationReport("clss")};
  Chart& chart = run.e_infinity;
  run.pages.push_back(chart);
  const std::string tag = "m=3 " + run.name;
  try {
    for (const auto& d : run.differentials) {
      if (d.page > chart.page()) {
        chart.set_page(d.page);
        run.pages.push_back(chart);
      }
      apply_differential(chart, d);
    }
    chart.set_page(chart.page() + 1);
    run.pages.push_back(chart);
  } catch (const Error& e) {
    run.report.check_true(m, -1, tag + " differentials consistent", false, e.what());
    return run;
  }
  run.report.check_true(m, -1, tag + " differentials consistent", true);

  const SpaceId s = unordered(m);
  std::vector<ExtensionRecord> ext;
  for (int t = 0; t <= 12; ++t) {
    auto nodes = total_degree(chart, t);
    int log_order = 0, free = 0;
    for (const auto& n : nodes) {
      log_order += n.g.torsion_order_log2();
      free += n.g.free_rank();
    }
    AbGroup2 want = cohomology(s, t);
    run.report.check(m, t, tag + " torsion order", want.torsion_order_log2(), log_order);
    run.report.check(m, t, tag + " free rank", want.free_rank(), free);
    int torsion_nodes = static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const Node& n) {
      return !n.g.torsion().is_zero();
    }));
    AbGroup2 got = torsion_nodes >= 2 ? assemble(chart, t, m, run.report, ext, &want) : assemble(chart, t, m, run.report, ext);
    run.report.check(m, t, tag + " abutment", want, got);
  }
  return run;
}

VerificationReport m3_scenarios() {
  VerificationReport rep("clss");
  for (char o : {'a', 'b'}) {
    ScenarioRun r = m3_scenario(o);
    rep.merge(r.report);
    auto nodes = total_degree(r.e_infinity, 4);
    int order = 0;
    for (const auto& n : nodes) order += n.g.torsion_order_log2();
    rep.check(3, 4, "m=3 " + r.name + " degree-4 torsion order (log2)", 2, order);
  }
  return rep;
}

VerificationReport dimm_check(int a) {
  if (a < 0 || 4 * a + 3 > 15) throw Error(ErrorKind::RangeError, "dimm_check covers m = 4a+3 <= 15");
  const int m = 4 * a + 3;
  VerificationReport rep("clss");
  Chart chart = build_e2(GroupId::D8, m, m + 1);
  const std::string tag = "m=" + std::to_string(m);
  rep.check(m, m - 1, tag + " star E2^{m-1,0}", AbGroup2::elementary(2 * a + 2), chart.at(m - 1, 0));
  rep.check(m, m, tag + " bullet E2^{m,0}", AbGroup2::elementary(2 * a + 1), chart.at(m, 0));
  rep.check(m, m + 1, tag + " E2^{m+1,0}", AbGroup2::braces(2 * a + 2), chart.at(m + 1, 0));

  // nothing reaches (1,m-1) or (m+1,0) before page m
  DifferentialSpec dm{m, 1, m - 1, Effect::injective(1)};
  DifferentialOutcome o = apply_differential(chart, dm);
  rep.check(m, m + 1, tag + " d_m cokernel", AbGroup2::braces(2 * a + 1), o.target_after);
  rep.check(m, m + 1, tag + " d_m cokernel order", o.target_before.torsion_order_log2() - o.source_before.torsion_order_log2(),
            o.target_after.torsion_order_log2());

  RankSequence ranks = rank_recursion(unordered(m));
  rep.check(m, m + 1, tag + " r_{m+1}", 2 * a + 1, ranks.r.at(m + 1));
  rep.check_true(m, m + 1, tag + " d_{m+1} forced nonzero", o.target_after.torsion_rank() > ranks.r.at(m + 1));

  // E^{0,m} = Z only maps to finite groups, so a copy of Z survives
  rep.check(m, m, tag + " E_inf^{0,m} free rank", 1, chart.at(0, m).free_rank());
  rep.check(m, m, tag + " E_inf^{1,m-1}", "0", chart.at(1, m - 1).to_string());

  AbGroup2 base = classifying_cohomology(GroupId::D8, CoeffId::IntegerTrivial, m);
  rep.check(m, m, tag + " T H^m(BD8)", AbGroup2::elementary(2 * a + 1), base.torsion());
  rep.check(m, m, tag + " mono onto torsion", base.torsion(), cohomology(unordered(m), m).torsion());
  rep.check(m, m, tag + " p* behavior", "MonoOntoTorsion", behavior_name(p_star_profile(GroupId::D8, m, m).behavior));
  rep.check(m, m, tag + " H^m", direct_sum(AbGroup2::integers(), base), cohomology(unordered(m), m));
  for (int i = 0; i < m; ++i)
    rep.check(m, i, tag + " iso below m", classifying_cohomology(GroupId::D8, CoeffId::IntegerTrivial, i),
              cohomology(unordered(m), i));
  return rep;
}

}  // namespace confcoh
