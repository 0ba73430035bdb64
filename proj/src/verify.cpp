#include "confcoh/verify.hpp"

#include <future>
#include <vector>

#include "confcoh/bockstein.hpp"
#include "confcoh/clss.hpp"
#include "confcoh/configcoh.hpp"
#include "confcoh/f2algebra.hpp"
#include "confcoh/groupcoh.hpp"
#include "confcoh/stiefel.hpp"

namespace confcoh {

Suite parse_suite(const std::string& s) {
  for (Suite x : {Suite::All, Suite::Uct, Suite::Bockstein, Suite::Duality, Suite::Clss, Suite::Sq1, Suite::Stiefel})
    if (s == suite_name(x)) return x;
  throw Error(ErrorKind::InvalidArgument, "unknown suite " + s);
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Uct: return "uct";
    case Suite::Bockstein: return "bockstein";
    case Suite::Duality: return "duality";
    case Suite::Clss: return "clss";
    case Suite::Sq1: return "sq1";
    case Suite::Stiefel: return "stiefel";
  }
  return "?";
}

MRange parse_m_range(const std::string& s) {
  auto num = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw Error(ErrorKind::InvalidArgument, "bad m range " + s);
    return v;
  };
  MRange r;
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = num(s);
  } else {
    r.lo = num(s.substr(0, dots));
    r.hi = num(s.substr(dots + 2));
  }
  if (r.lo < 1 || r.hi < r.lo) throw Error(ErrorKind::InvalidArgument, "bad m range " + s);
  return r;
}

namespace {

void uct_suite(int m, VerificationReport& rep) {
  for (SpaceId s : {unordered(m), ordered(m)}) {
    if (m >= 2) rep.merge(global_checks(s));
    GradedGroups h = homology(s);
    GradedGroups back = uct_cohomology(h);
    for (int i = 0; i <= 2 * m - 1; ++i)
      rep.check(m, i, s.name() + " cohomology from homology", cohomology(s, i), back.at(i));
    PresentedF2Algebra ring = s.kind == SpaceKind::UnorderedB ? unordered_config_ring(m) : ordered_config_ring(m);
    GradedQuotient q(ring, 2 * m + 1);
    for (int d = 0; d <= 2 * m + 1; ++d)
      rep.check(m, d, s.name() + " mod 2 ring dimension", mod2_dimension(s, d), q.dimension(d));
  }
}

void bockstein_suite(int m, VerificationReport& rep) {
  if (m >= 2) {
    SpaceId s = unordered(m);
    RankSequence rs = rank_recursion(s);
    for (int i = 0; i <= 2 * m - 1; ++i)
      rep.check(m, i, s.name() + " recursion 2-rank", cohomology(s, i).torsion_rank(), rs.r.count(i) ? rs.r.at(i) : 0);
    for (int l = 2; l <= m - 1; ++l)
        rep.check(m, 2 * m - l, s.name() + " 2-rank from the top", expected_rank_from_top(m, l), rs.r.at(2 * m - l));
    SpaceId f = ordered(m);
    RankSequence rf = rank_recursion(f);
    for (int i = 0; i <= 2 * m - 1; ++i)
      rep.check(m, i, f.name() + " recursion 2-rank", cohomology(f, i).torsion_rank(), rf.r.count(i) ? rf.r.at(i) : 0);
  }
  rep.merge(page1_compare(unordered(m)));
  rep.merge(page1_compare(ordered(m)));
}

void duality_suite(int m, VerificationReport& rep) {
  if (m < 2) {
    rep.skip(m, -1, "duality", "m >= 2 only", false);
    return;
  }
  rep.merge(duality_symmetry_check(unordered(m)));
  rep.merge(duality_symmetry_check(ordered(m)));
  for (GroupId g : {GroupId::D8, GroupId::Z2xZ2}) {
    SpaceId s{g == GroupId::D8 ? SpaceKind::UnorderedB : SpaceKind::OrderedF, m};
    const std::string tag = s.name() + " p*";
    for (int i = 0; i <= 2 * m + 1; ++i) {
      PStarProfile p = p_star_profile(g, m, i);
      AbGroup2 base = classifying_cohomology(g, CoeffId::IntegerTrivial, i);
      AbGroup2 top = cohomology(s, i);
      switch (p.behavior) {
        case PStarBehavior::Open:
          rep.skip(m, i, tag, "behaviour of p* is not settled here", true);
          break;
        case PStarBehavior::Iso:
          rep.check(m, i, tag + " iso", base, top);
          break;
        case PStarBehavior::MonoOntoTorsion:
          rep.check(m, i, tag + " mono onto torsion", base.torsion(), top.torsion());
          break;
        case PStarBehavior::Epi: {
          int expect = m % 2 == 0 ? i - m : i - m + (i % 2 == 0 ? 1 : -1);
          rep.check(m, i, tag + " epi kernel 2-rank", expect, p.kernel_rank.value_or(-1));
          rep.check(m, i, tag + " epi order drop", base.torsion_order_log2() - top.torsion_order_log2(),
                    p.kernel_rank.value_or(-1));
          break;
        }
        case PStarBehavior::Zero:
          rep.check(m, i, tag + " zero kernel is all torsion", base.torsion_order_log2(), p.kernel_rank.value_or(-1));
          break;
      }
    }
  }
}

void clss_suite(int m, VerificationReport& rep) {
  auto guarded = [&](const std::string& what, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      rep.check_true(m, -1, what, false, e.what());
    }
  };
  if (m % 2 == 0) {
    guarded("run_even D8", [&] { rep.merge(run_even(GroupId::D8, m).report); });
    guarded("run_even Z2xZ2", [&] { rep.merge(run_even(GroupId::Z2xZ2, m).report); });
    return;
  }
  if (m == 1) {
    rep.skip(m, -1, "odd executor", "m = 1 has no range 2 <= l <= m-1", false);
    return;
  }
  if (m % 4 == 1)
    guarded("run_odd D8", [&] { rep.merge(run_odd(GroupId::D8, m).report); });
  else
    rep.skip(m, -1, "odd executor D8", "the d2 on the q = m line is not determined for m = 3 mod 4", true);
  guarded("run_odd Z2xZ2", [&] { rep.merge(run_odd(GroupId::Z2xZ2, m).report); });
  if (m == 3) guarded("m=3 scenarios", [&] { rep.merge(m3_scenarios()); });
  if (m % 4 == 3 && m <= 15) guarded("degree m fragment", [&] { rep.merge(dimm_check((m - 3) / 4)); });
}

void sq1_suite(int m, VerificationReport& rep) {
  for (SpaceId s : {unordered(m), ordered(m)}) {
    PresentedF2Algebra ring = s.kind == SpaceKind::UnorderedB ? unordered_config_ring(m) : ordered_config_ring(m);
    try {
      GradedQuotient q(ring, 2 * m + 1);
      rep.check_true(m, -1, s.name() + " Sq1 well defined", true);
      for (int d = 0; d + 2 <= 2 * m + 1; ++d)
        rep.check_true(m, d, s.name() + " Sq1 Sq1 = 0", (q.sq1_matrix(d + 1) * q.sq1_matrix(d)).is_zero());
    } catch (const Error& e) {
      rep.check_true(m, -1, s.name() + " Sq1 well defined", false, e.what());
    }
  }
  if (m % 4 == 3) {
    rep.merge(prop_sq1_check((m - 3) / 4));
    SplitRanks sr = split_sq1_homology(m, m + 1);
    GradedQuotient q(unordered_config_ring(m), m + 2);
    rep.check(m, m + 1, "split Sq1 homology adds up", q.sq1_homology_rank(m + 1), sr.rank_R + sr.rank_xR);
  }
}

void stiefel_suite(int m, VerificationReport& rep) {
  const int n = m + 1;
  if (n < 3) {
    rep.skip(m, -1, "sphere bundle", "n >= 3 only", false);
    return;
  }
  SphereBundleSSS sss = sphere_bundle_sss_e2(n);
  for (int q = 0; q <= 2 * n - 3; ++q) {
    rep.check(m, q, "V_{" + std::to_string(n) + ",2} from the sphere bundle", stiefel_cohomology(n, q), sss.abutment.at(q));
  }
  if (n >= 3)
    rep.check_true(m, 2 * n - 3, "D8 orientable iff it fixes the top class",
                   quotient_orientable(n, Subgroup::D8) == (d8_action_sign(n, 2 * n - 3) == ActionSign::Plus));
  rep.check_true(m, -1, "orientability of F(P^m,2)", quotient_orientable(n, Subgroup::Z2xZ2) == space_orientable(ordered(m)));
  rep.check_true(m, -1, "orientability of B(P^m,2)", quotient_orientable(n, Subgroup::D8) == space_orientable(unordered(m)));
  rep.check(m, 2 * m - 1, "top group of B(P^m,2)", cohomology(unordered(m), 2 * m - 1), top_group_V_quotient(n, Subgroup::D8));
  rep.check(m, 2 * m - 1, "top group of F(P^m,2)", cohomology(ordered(m), 2 * m - 1),
            top_group_V_quotient(n, Subgroup::Z2xZ2));
  {
    GradedGroups gr = oriented_grassmannian_groups(n);
    long long euler = 0;
    for (int t = 0; t <= 2 * n - 4; ++t) {
      AbGroup2 g = gr.at(t);
      if (t % 2 == 1) rep.check(m, t, "oriented Grassmannian odd degree", "0", g.to_string());
      euler += g.free_rank();
      if (g.torsion_rank() != 0) rep.check(m, t, "oriented Grassmannian torsion free", "0", g.torsion().to_string());
    }
    rep.check(m, n - 2, "oriented Grassmannian middle rank", n % 2 == 0 ? 2 : 0, gr.at(n - 2).free_rank());
    // Euler characteristic of the oriented Grassmannian of 2-planes in R^n
    rep.check(m, -1, "oriented Grassmannian Euler characteristic", n % 2 == 0 ? n : n - 1, euler);
  }
}

}  // namespace

VerificationReport run_suite_for_m(Suite s, int m) {
  VerificationReport rep(suite_name(s));
  auto want = [&](Suite x) { return s == Suite::All || s == x; };
  if (want(Suite::Uct)) uct_suite(m, rep);
  if (want(Suite::Bockstein)) bockstein_suite(m, rep);
  if (want(Suite::Duality)) duality_suite(m, rep);
  if (want(Suite::Clss)) clss_suite(m, rep);
  if (want(Suite::Sq1)) sq1_suite(m, rep);
  if (want(Suite::Stiefel)) stiefel_suite(m, rep);
  return rep;
}

VerificationReport run_suite(Suite s, MRange range) {
  VerificationReport rep(suite_name(s));
  if (s == Suite::All || s == Suite::Uct) {
    int cap = 2 * range.hi + 2;
    rep.merge(uct_mod2_check(GroupId::D8, cap));
    rep.merge(uct_mod2_check(GroupId::Z2xZ2, cap));
  }
  std::vector<std::future<VerificationReport>> jobs;
  for (int m = range.lo; m <= range.hi; ++m)
    jobs.push_back(std::async(std::launch::async, [s, m] { return run_suite_for_m(s, m); }));
  for (auto& j : jobs) rep.merge(j.get());
  return rep;
}

}  // namespace confcoh
