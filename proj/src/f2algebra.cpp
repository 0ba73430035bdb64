#include "confcoh/f2algebra.hpp"

#include <algorithm>

namespace confcoh {

bool binom_mod2(long long n, long long k) {
  if (n < 0 || k < 0) throw Error(ErrorKind::InvalidArgument, "binom_mod2 needs non-negative arguments");
  return k <= n && (k & (n - k)) == 0;
}

void F2Poly::toggle(const Monomial& m) {
  auto [it, inserted] = terms_.insert(m);
  if (!inserted) terms_.erase(it);
}

F2Poly& F2Poly::operator+=(const F2Poly& o) {
  for (const auto& m : o.terms_) toggle(m);
  return *this;
}

F2Poly F2Poly::times(const Monomial& m) const {
  F2Poly out;
  for (const auto& t : terms_) {
    Monomial p = t;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += m[i];
    out.toggle(p);
  }
  return out;
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
  F2Poly out;
  for (const auto& m : o.terms_) out += times(m);
  return out;
}

PresentedF2Algebra::PresentedF2Algebra(std::vector<Generator> generators, std::vector<F2Poly> relations,
                                       std::vector<F2Poly> sq1, int degree_cap)
    : gens_(std::move(generators)), rels_(std::move(relations)), sq1_(std::move(sq1)), cap_(degree_cap) {
  for (const auto& g : gens_)
    if (g.degree < 1) throw Error(ErrorKind::InvalidArgument, "generator " + g.name + " must have positive degree");
  auto check_poly = [&](const F2Poly& p, const std::string& what) {
    for (const auto& m : p.terms())
      if (m.size() != gens_.size()) throw Error(ErrorKind::InvalidArgument, what + ": wrong exponent vector length");
    if (p.terms().empty()) return;
    int d = degree(*p.terms().begin());
    for (const auto& m : p.terms())
      if (degree(m) != d) throw Error(ErrorKind::InvalidArgument, what + " is not homogeneous");
  };
  for (const auto& r : rels_) check_poly(r, "relation");
  if (!sq1_.empty()) {
    if (sq1_.size() != gens_.size()) throw Error(ErrorKind::InvalidArgument, "Sq1 must be given on every generator");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      check_poly(sq1_[i], "Sq1(" + gens_[i].name + ")");
      auto d = degree(sq1_[i]);
      if (d && *d != gens_[i].degree + 1)
        throw Error(ErrorKind::InvalidArgument, "Sq1(" + gens_[i].name + ") has the wrong degree");
    }
  }
}

std::vector<int> PresentedF2Algebra::generator_degrees() const {
  std::vector<int> d;
  for (const auto& g : gens_) d.push_back(g.degree);
  return d;
}

int PresentedF2Algebra::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += m[i] * gens_[i].degree;
  return d;
}

std::optional<int> PresentedF2Algebra::degree(const F2Poly& p) const {
  if (p.is_zero()) return std::nullopt;
  return degree(*p.terms().begin());
}

F2Poly PresentedF2Algebra::sq1(const Monomial& m) const {
  F2Poly out;
  if (sq1_.empty()) throw Error(ErrorKind::NotApplicable, "algebra carries no Sq1");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] % 2 == 0) continue;
    Monomial rest = m;
    rest[i] -= 1;
    out += sq1_[i].times(rest);
  }
  return out;
}

F2Poly PresentedF2Algebra::sq1(const F2Poly& p) const {
  F2Poly out;
  for (const auto& m : p.terms()) out += sq1(m);
  return out;
}

Monomial PresentedF2Algebra::power(const std::string& name, int e) const {
  Monomial m(gens_.size(), 0);
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) {
      m[i] = e;
      return m;
    }
  throw Error(ErrorKind::InvalidArgument, "unknown generator " + name);
}

namespace {

void enumerate(const std::vector<int>& degs, std::size_t i, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (i == degs.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int e = left / degs[i]; e >= 0; --e) {
    cur[i] = e;
    enumerate(degs, i + 1, left - e * degs[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const std::vector<int>& gen_degrees, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(gen_degrees.size(), 0);
  enumerate(gen_degrees, 0, d, cur, out);
  return out;
}

Bits DegreeBasis::reduce(const F2Poly& p) const {
  Bits out(dimension());
  for (const auto& m : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "monomial not of degree " + std::to_string(degree));
    out ^= reduction[it->second];
  }
  return out;
}

DegreeBasis compute_degree_basis(const PresentedF2Algebra& a, int d) {
  if (d > a.degree_cap())
    throw Error(ErrorKind::DegreeCapExceeded, "degree " + std::to_string(d) + " exceeds cap " + std::to_string(a.degree_cap()));
  DegreeBasis b;
  b.degree = d;
  const auto degs = a.generator_degrees();
  b.monomials = monomials_of_degree(degs, d);
  const std::size_t n = b.monomials.size();
  for (std::size_t i = 0; i < n; ++i) b.index[b.monomials[i]] = i;

  std::vector<Bits> rows;
  for (const auto& r : a.relations()) {
    auto e = a.degree(r);
    if (!e || *e > d) continue;
    for (const auto& u : monomials_of_degree(degs, d - *e)) {
      Bits row(n);
      const F2Poly ru = r.times(u);
      for (const auto& t : ru.terms()) row.flip(b.index.at(t));
      if (row.any()) rows.push_back(std::move(row));
    }
  }

  // reduced row echelon form; the pivot of a row is its lex-largest monomial
  std::vector<long> pivot_row(n, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && !rows[r][c]) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != rank && rows[k][c]) rows[k] ^= rows[rank];
    pivot_row[c] = static_cast<long>(rank);
    ++rank;
  }

  std::vector<long> basis_pos(n, -1);
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c] < 0) {
      basis_pos[c] = static_cast<long>(b.basis_monomials.size());
      b.basis_monomials.push_back(b.monomials[c]);
    }
  const std::size_t dim = b.basis_monomials.size();
  b.reduction.assign(n, Bits(dim));
  for (std::size_t c = 0; c < n; ++c) {
    if (basis_pos[c] >= 0) {
      b.reduction[c].set(basis_pos[c]);
      continue;
    }
    const Bits& row = rows[pivot_row[c]];
    for (auto j = row.find_first(); j != Bits::npos; j = row.find_next(j))
      if (j != c) b.reduction[c].set(basis_pos[j]);
  }
  return b;
}

std::size_t F2Matrix::rank() const {
  std::vector<Bits> m = rows_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < m.size(); ++c) {
    std::size_t r = rank;
    while (r < m.size() && !m[r][c]) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[rank]);
    for (std::size_t k = rank + 1; k < m.size(); ++k)
      if (m[k][c]) m[k] ^= m[rank];
    ++rank;
  }
  return rank;
}

bool F2Matrix::is_zero() const {
  return std::none_of(rows_.begin(), rows_.end(), [](const Bits& r) { return r.any(); });
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
  if (cols_ != o.rows()) throw Error(ErrorKind::InvalidArgument, "matrix shapes do not compose");
  F2Matrix out(rows(), o.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (auto k = rows_[i].find_first(); k != Bits::npos; k = rows_[i].find_next(k)) out.rows_[i] ^= o.rows_[k];
  return out;
}

F2Matrix F2Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  F2Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, get(rows[i], cols[j]));
  return out;
}

GradedQuotient::GradedQuotient(const PresentedF2Algebra& a, int max_degree) : alg_(a), max_(max_degree) {
  if (max_degree > a.degree_cap())
    throw Error(ErrorKind::DegreeCapExceeded, "degree " + std::to_string(max_degree) + " exceeds cap");
  for (int d = 0; d <= max_degree; ++d) bases_.push_back(compute_degree_basis(a, d));
  if (!a.has_sq1()) return;
  for (const auto& r : a.relations()) {
    auto e = a.degree(r);
    if (!e || *e + 1 > max_degree) continue;
    if (basis(*e + 1).reduce(a.sq1(r)).any())
      throw Error(ErrorKind::IllDefinedDerivation, "Sq1 of a relation in degree " + std::to_string(*e) + " is not in the ideal");
  }
}

const DegreeBasis& GradedQuotient::basis(int d) const {
  if (d < 0 || d > max_) throw Error(ErrorKind::DegreeCapExceeded, "degree " + std::to_string(d) + " not computed");
  return bases_[d];
}

std::size_t GradedQuotient::dimension(int d) const { return d < 0 ? 0 : basis(d).dimension(); }

F2Matrix GradedQuotient::sq1_matrix(int d) const {
  if (d + 1 > max_) throw Error(ErrorKind::DegreeCapExceeded, "Sq1 out of degree " + std::to_string(d) + " needs degree " + std::to_string(d + 1));
  if (d < 0) return F2Matrix(dimension(d + 1), 0);
  const DegreeBasis& src = basis(d);
  const DegreeBasis& dst = basis(d + 1);
  F2Matrix m(dst.dimension(), src.dimension());
  for (std::size_t k = 0; k < src.dimension(); ++k) {
    Bits img = dst.reduce(alg_.sq1(src.basis_monomials[k]));
    for (auto r = img.find_first(); r != Bits::npos; r = img.find_next(r)) m.set(r, k, true);
  }
  return m;
}

std::size_t GradedQuotient::sq1_homology_rank(int d) const {
  if (d < 0) return 0;
  return dimension(d) - sq1_matrix(d).rank() - sq1_matrix(d - 1).rank();
}

std::size_t quotient_dimension(const PresentedF2Algebra& a, int d) {
  if (d < 0) return 0;
  return compute_degree_basis(a, d).dimension();
}

F2Matrix sq1_matrix(const PresentedF2Algebra& a, int d) { return GradedQuotient(a, d + 1).sq1_matrix(d); }

std::size_t sq1_homology_rank(const PresentedF2Algebra& a, int d) {
  return GradedQuotient(a, std::max(d + 1, 0)).sq1_homology_rank(d);
}

SplitRanks split_sq1_homology(int m, int d) {
  if (m < 3 || m % 4 != 3) throw Error(ErrorKind::NotApplicable, "split Sq1 homology is defined for m = 3 mod 4");
  GradedQuotient q(unordered_config_ring(m, std::max(2 * m + 2, d + 1)), d + 1);
  auto split = [&](int deg, std::vector<std::size_t>& r, std::vector<std::size_t>& xr) {
    r.clear();
    xr.clear();
    if (deg < 0) return;
    const auto& b = q.basis(deg).basis_monomials;
    for (std::size_t k = 0; k < b.size(); ++k) (b[k][0] == 0 ? r : xr).push_back(k);
  };
  std::vector<std::size_t> r_lo, x_lo, r_mid, x_mid, r_hi, x_hi;
  split(d - 1, r_lo, x_lo);
  split(d, r_mid, x_mid);
  split(d + 1, r_hi, x_hi);
  F2Matrix in = q.sq1_matrix(d - 1);
  F2Matrix out = q.sq1_matrix(d);
  if (!in.submatrix(x_mid, r_lo).is_zero() || !in.submatrix(r_mid, x_lo).is_zero() ||
      !out.submatrix(x_hi, r_mid).is_zero() || !out.submatrix(r_hi, x_mid).is_zero())
    throw Error(ErrorKind::NotApplicable, "basis does not split along R + xR");
  SplitRanks s;
  s.rank_R = r_mid.size() - out.submatrix(r_hi, r_mid).rank() - in.submatrix(r_mid, r_lo).rank();
  s.rank_xR = x_mid.size() - out.submatrix(x_hi, x_mid).rank() - in.submatrix(x_mid, x_lo).rank();
  return s;
}

namespace {

Monomial mono(std::initializer_list<int> e) { return Monomial(e); }

F2Poly sum(std::initializer_list<Monomial> ms) {
  F2Poly p;
  for (const auto& m : ms) p.toggle(m);
  return p;
}

int default_cap(int m, int cap) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
  return cap < 0 ? 2 * m + 2 : cap;
}

}  // namespace

PresentedF2Algebra polynomial_ring(const std::vector<Generator>& gens, int cap) {
  std::vector<F2Poly> sq1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree != 1) {
      sq1.clear();
      break;
    }
    Monomial sq(gens.size(), 0);
    sq[i] = 2;
    sq1.push_back(F2Poly::monomial(sq));
  }
  return PresentedF2Algebra(gens, {}, sq1, cap);
}

PresentedF2Algebra bd8_ring(int cap) {
  return PresentedF2Algebra({{"x", 1}, {"x1", 1}, {"x2", 2}},
                            {sum({mono({2, 0, 0}), mono({1, 1, 0})})},
                            {sum({mono({2, 0, 0})}), sum({mono({0, 2, 0})}), sum({mono({0, 1, 1})})}, cap);
}

PresentedF2Algebra pinf_squared_ring(int cap) { return polynomial_ring({{"x1", 1}, {"y1", 1}}, cap); }

PresentedF2Algebra unordered_config_ring(int m, int cap) {
  cap = default_cap(m, cap);
  auto grassmann_relation = [](int k) {
    F2Poly p;
    for (int i = 0; 2 * i <= k; ++i)
      if (binom_mod2(k - i, i)) p.toggle(mono({0, k - 2 * i, i}));
    return p;
  };
  PresentedF2Algebra base = bd8_ring(cap);
  std::vector<F2Poly> rels = base.relations();
  rels.push_back(grassmann_relation(m));
  rels.push_back(grassmann_relation(m + 1));
  return PresentedF2Algebra(base.generators(), rels,
                            {sum({mono({2, 0, 0})}), sum({mono({0, 2, 0})}), sum({mono({0, 1, 1})})}, cap);
}

PresentedF2Algebra ordered_config_ring(int m, int cap) {
  cap = default_cap(m, cap);
  F2Poly mixed;
  for (int i = 0; i <= m; ++i) mixed.toggle(mono({i, m - i}));
  return PresentedF2Algebra({{"x1", 1}, {"y1", 1}},
                            {sum({mono({m + 1, 0})}), sum({mono({0, m + 1})}), mixed},
                            {sum({mono({2, 0})}), sum({mono({0, 2})})}, cap);
}

}  // namespace confcoh
