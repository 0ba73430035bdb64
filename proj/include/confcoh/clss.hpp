#pragma once

#include <string>
#include <vector>

#include "confcoh/abelian.hpp"
#include "confcoh/chart.hpp"
#include "confcoh/groupcoh.hpp"
#include "confcoh/report.hpp"

namespace confcoh {

enum class EffectKind {
  Zero,
  InjectiveElementary,  // elementary source of the given rank, injective even after (x) Z2
  HalveZ4s,             // hits twice a Z4 generator: one Z4 in source and target becomes Z2
  KernelTwoZ,           // Z source, image of order 2, kernel 2Z
  Explicit,             // kernel and cokernel given outright
};

const char* effect_name(EffectKind k);

struct Effect {
  EffectKind kind = EffectKind::Zero;
  int rank = 0;
  AbGroup2 kernel;
  AbGroup2 cokernel;

  static Effect zero() { return {}; }
  static Effect injective(int rank) { return {EffectKind::InjectiveElementary, rank, {}, {}}; }
  static Effect halve() { return {EffectKind::HalveZ4s, 0, {}, {}}; }
  static Effect kernel_two_z() { return {EffectKind::KernelTwoZ, 0, {}, {}}; }
  static Effect given(AbGroup2 kernel, AbGroup2 cokernel) { return {EffectKind::Explicit, 0, kernel, cokernel}; }
};

struct DifferentialSpec {
  int page;
  int p, q;
  Effect effect;
  int target_p() const { return p + page; }
  int target_q() const { return q - page + 1; }
  std::string describe() const;
};

struct DifferentialOutcome {
  AbGroup2 source_before, target_before, source_after, target_after;
};

// Applies one differential in place. Throws InconsistentOrders when the
// effect does not fit the current source and target.
DifferentialOutcome apply_differential(Chart& chart, const DifferentialSpec& d);

// E2 page of the Cartan-Leray spectral sequence of G acting on V_{m+1,2},
// columns 0..p_max (default 2m+1).
Chart build_e2(GroupId g, int m, int p_max = -1);

// Cokernel of d_{m+1} into E^{2m-l,0} for even m.
AbGroup2 prop_algebraico_cokernel(int m, int l);

// H^{2m-l}(B(P^m,2)) for m = 1 mod 4, 2 <= l <= m-1.
AbGroup2 odd_upper_closed_form(int m, int l);

enum class ExtensionKind { Trivial, Nontrivial, ForcedByOrder };
const char* extension_name(ExtensionKind k);

struct ExtensionRecord {
  int degree;
  ExtensionKind kind;
  AbGroup2 group;
};

struct ClssRun {
  GradedGroups abutment;
  VerificationReport report;
  Chart e_infinity;
  std::vector<DifferentialSpec> differentials;
  std::vector<ExtensionRecord> extensions;
};

ClssRun run_even(GroupId g, int m);
ClssRun run_odd(GroupId g, int m);
inline ClssRun run_even(int m) { return run_even(GroupId::D8, m); }
inline ClssRun run_1mod4(int m) { return run_odd(GroupId::D8, m); }

struct ScenarioRun {
  std::string name;
  std::vector<DifferentialSpec> differentials;
  std::vector<Chart> pages;  // chart after each page's differentials, starting with E2
  Chart e_infinity;
  VerificationReport report;
};

// The two d2 options for m = 3, charted through column 13.
ScenarioRun m3_scenario(char option);
VerificationReport m3_scenarios();

// m = 4a+3: the fragment through total degree m+1.
VerificationReport dimm_check(int a);

}  // namespace confcoh
