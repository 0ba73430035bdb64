#pragma once

#include <map>

#include "confcoh/configcoh.hpp"
#include "confcoh/report.hpp"

namespace confcoh {

struct RankSequence {
  int m = 0;
  SpaceId space{SpaceKind::UnorderedB, 0};
  std::map<int, int> r;  // 2-rank of the torsion of H^i
};

// Top-down solve of  dim H^i(F2) = (free_i + r_i) + r_{i+1}.
RankSequence rank_recursion(const SpaceId& s);

// Closed forms for r_{2m-l}, 2 <= l <= m-1.
int expected_rank_from_top(int m, int l);

int page1_expected(const SpaceId& s, int d);

// Sq1-homology of the presented mod 2 ring against page1_expected, d <= 2m.
VerificationReport page1_compare(const SpaceId& s, int m_cap = 12);

// m = 4a+3: Sq1-homology in degree m+1 sits in R and H^{m+1} = {2a}.
VerificationReport prop_sq1_check(int a);

}  // namespace confcoh
