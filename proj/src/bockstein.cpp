#include "confcoh/bockstein.hpp"

#include "confcoh/f2algebra.hpp"

namespace confcoh {

namespace {

int rule_free_rank(const SpaceId& s, int i) {
  int top = s.m % 2 == 0 ? 2 * s.m - 1 : s.m;
  return (i == 0 || i == top) ? 1 : 0;
}

}  // namespace

RankSequence rank_recursion(const SpaceId& s) {
  if (s.m < 2) throw Error(ErrorKind::InvalidArgument, "rank recursion needs m >= 2");
  RankSequence seq;
  seq.m = s.m;
  seq.space = s;
  const int top = 2 * s.m - 1;
  seq.r[top] = s.m % 2 == 0 ? 0 : 1;
  for (int i = top - 1; i >= 0; --i) {
    int r = mod2_dimension(s, i) - rule_free_rank(s, i) - seq.r[i + 1];
    if (r < 0) throw Error(ErrorKind::InconsistentRecursion, "negative rank in degree " + std::to_string(i));
    seq.r[i] = r;
  }
  return seq;
}

int expected_rank_from_top(int m, int l) {
  if (l < 2 || l > m - 1) throw Error(ErrorKind::RangeError, "l must lie in 2..m-1");
  if (m % 2 == 0) return l % 2 == 0 ? l / 2 + 1 : (l - 1) / 2;
  return (l + 1) / 2;
}

int page1_expected(const SpaceId& s, int d) {
  return cohomology(s, d).free_rank() + cohomology(s, d).count_exponent(2) + cohomology(s, d + 1).count_exponent(2);
}

VerificationReport page1_compare(const SpaceId& s, int m_cap) {
  if (s.m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
  if (s.m > m_cap) throw Error(ErrorKind::DegreeCapExceeded, "m above cap " + std::to_string(m_cap));
  VerificationReport rep("bockstein");
  PresentedF2Algebra ring = s.kind == SpaceKind::UnorderedB ? unordered_config_ring(s.m) : ordered_config_ring(s.m);
  GradedQuotient q(ring, 2 * s.m + 1);
  for (int d = 0; d <= 2 * s.m; ++d)
    rep.check(s.m, d, s.name() + " Sq1 homology rank", page1_expected(s, d),
              static_cast<long long>(q.sq1_homology_rank(d)));
  return rep;
}

VerificationReport prop_sq1_check(int a) {
  if (a < 0) throw Error(ErrorKind::InvalidArgument, "a must be non-negative");
  const int m = 4 * a + 3;
  VerificationReport rep("sq1");
  SplitRanks sr = split_sq1_homology(m, m + 1);
  rep.check(m, m + 1, "Sq1 homology of R", 1, static_cast<long long>(sr.rank_R));
  rep.check(m, m + 1, "Sq1 homology of xR", 0, static_cast<long long>(sr.rank_xR));
  rep.check(m, m + 1, "H^{m+1}(B)", AbGroup2::braces(2 * a), cohomology(unordered(m), m + 1));
  rep.check(m, m + 1, "page 1 rank", page1_expected(unordered(m), m + 1),
            static_cast<long long>(sr.rank_R + sr.rank_xR));
  return rep;
}

}  // namespace confcoh
