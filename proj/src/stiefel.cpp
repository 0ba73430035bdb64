#include "confcoh/stiefel.hpp"

#include <array>

#include "confcoh/f2algebra.hpp"

namespace confcoh {

const char* subgroup_name(Subgroup s) {
  switch (s) {
    case Subgroup::D8: return "D8";
    case Subgroup::Z2xZ2: return "Z2xZ2";
    case Subgroup::O2: return "O2";
  }
  return "?";
}

AbGroup2 stiefel_cohomology(int n, int q) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "V_{n,2} needs n >= 2");
  if (n == 2) return (q == 0 || q == 1) ? AbGroup2::integers(2) : AbGroup2{};
  if (q == 0 || q == 2 * n - 3) return AbGroup2::integers();
  if (n % 2 == 0) return (q == n - 2 || q == n - 1) ? AbGroup2::integers() : AbGroup2{};
  return q == n - 1 ? AbGroup2::elementary(1) : AbGroup2{};
}

ActionSign d8_action_sign(int n, int q) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "action signs need n >= 3");
  if (n % 2 == 0 && (q == n - 2 || q == 2 * n - 3)) return ActionSign::Minus;
  return ActionSign::Plus;
}

SphereBundleSSS sphere_bundle_sss_e2(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "sphere bundle chart needs n >= 3");
  Chart e2(2, n - 1, std::nullopt, n - 1);
  e2.declare_line(0, "Z");
  e2.declare_line(n - 2, "Z");
  for (int q : {0, n - 2})
    for (int p : {0, n - 1}) e2.set(p, q, AbGroup2::integers());

  // Euler class of the tangent bundle of S^{n-1}
  int coeff = (n - 1) % 2 == 0 ? 2 : 0;

  GradedGroups ab(2 * n - 3);
  ab.set(0, AbGroup2::integers());
  ab.set(2 * n - 3, AbGroup2::integers());
  if (coeff == 0) {
    ab.set(n - 2, AbGroup2::integers());
    ab.set(n - 1, AbGroup2::integers());
  } else {
    IntMatrix d(1, 1);
    d(0, 0) = coeff;
    ab.set(n - 1, group_from_presentation(d));
  }
  return {e2, coeff, ab};
}

bool quotient_orientable(int n, Subgroup s) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
  if (n == 2) return true;  // the quotient is a point or a circle
  return s == Subgroup::O2 ? n % 2 == 0 : n % 2 == 1;
}

AbGroup2 top_group_V_quotient(int n, Subgroup s) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  if (s == Subgroup::O2) throw Error(ErrorKind::NotApplicable, "top group is tabulated for D8 and Z2xZ2");
  return quotient_orientable(n, s) ? AbGroup2::integers() : AbGroup2::elementary(1);
}

namespace {

struct Term {
  std::array<int, 2> e;
  long c;
};
using IntPoly = std::vector<Term>;

struct IntRing {
  std::array<int, 2> degrees;
  std::vector<IntPoly> relations;
};

IntRing grassmannian_ring(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "oriented Grassmannian needs n >= 3");
  if (n % 2 == 1) {
    int a = (n - 1) / 2;
    // generators x (degree n-1) and z (degree 2)
    return {{n - 1, 2}, {{{{2, 0}, 1}}, {{{1, a}, 1}}, {{{0, a}, 1}, {{1, 0}, -2}}}};
  }
  int a = n / 2;
  long eps = a % 2;
  // generators kappa (degree 2a-2) and z (degree 2)
  IntPoly first{{{2, 0}, 1}};
  if (eps) first.push_back({{1, a - 1}, -eps});
  return {{2 * a - 2, 2}, {first, {{{0, a}, 1}, {{1, 1}, -2}}}};
}

int term_degree(const IntRing& r, const std::array<int, 2>& e) { return e[0] * r.degrees[0] + e[1] * r.degrees[1]; }

}  // namespace

AbGroup2 oriented_grassmannian_group(int n, int t) {
  IntRing ring = grassmannian_ring(n);
  std::vector<int> degs{ring.degrees[0], ring.degrees[1]};
  auto cols = monomials_of_degree(degs, t);
  if (cols.empty()) return {};
  std::map<Monomial, std::size_t> col;
  for (std::size_t i = 0; i < cols.size(); ++i) col[cols[i]] = i;

  std::vector<std::vector<long>> rows;
  for (const auto& rel : ring.relations) {
    int s = term_degree(ring, rel.front().e);
    for (const auto& u : monomials_of_degree(degs, t - s)) {
      std::vector<long> row(cols.size(), 0);
      for (const auto& term : rel) row[col.at({term.e[0] + u[0], term.e[1] + u[1]})] += term.c;
      rows.push_back(std::move(row));
    }
  }
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = rows[i][j];
  return group_from_presentation(m);
}

GradedGroups oriented_grassmannian_groups(int n) {
  GradedGroups g(2 * n - 4);
  for (int t = 0; t <= 2 * n - 4; ++t) g.set(t, oriented_grassmannian_group(n, t));
  return g;
}

}  // namespace confcoh
