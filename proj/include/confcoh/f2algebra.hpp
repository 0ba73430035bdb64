#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "confcoh/error.hpp"

namespace confcoh {

bool binom_mod2(long long n, long long k);

using Monomial = std::vector<int>;
using Bits = boost::dynamic_bitset<>;

class F2Poly {
 public:
  F2Poly() = default;
  explicit F2Poly(std::set<Monomial> terms) : terms_(std::move(terms)) {}
  static F2Poly monomial(Monomial m) { return F2Poly({std::move(m)}); }

  void toggle(const Monomial& m);
  F2Poly& operator+=(const F2Poly& o);
  F2Poly times(const Monomial& m) const;
  F2Poly operator*(const F2Poly& o) const;

  const std::set<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const F2Poly&, const F2Poly&) = default;

 private:
  std::set<Monomial> terms_;
};

struct Generator {
  std::string name;
  int degree;
};

class PresentedF2Algebra {
 public:
  // sq1 is either empty or holds Sq1 of each generator (degree deg+1).
  PresentedF2Algebra(std::vector<Generator> generators, std::vector<F2Poly> relations,
                     std::vector<F2Poly> sq1 = {}, int degree_cap = 26);

  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<F2Poly>& relations() const { return rels_; }
  bool has_sq1() const { return !sq1_.empty(); }
  int degree_cap() const { return cap_; }
  std::vector<int> generator_degrees() const;

  int degree(const Monomial& m) const;
  std::optional<int> degree(const F2Poly& p) const;

  F2Poly sq1(const Monomial& m) const;
  F2Poly sq1(const F2Poly& p) const;

  // x_i^e as a monomial, for building polynomials by generator name
  Monomial power(const std::string& name, int e) const;

 private:
  std::vector<Generator> gens_;
  std::vector<F2Poly> rels_;
  std::vector<F2Poly> sq1_;
  int cap_;
};

// All monomials of degree d, lexicographically descending in the declared
// generator order.
std::vector<Monomial> monomials_of_degree(const std::vector<int>& gen_degrees, int d);

struct DegreeBasis {
  int degree = 0;
  std::vector<Monomial> basis_monomials;
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;  // monomial -> position in monomials
  std::vector<Bits> reduction;            // per monomial: coordinates in basis_monomials

  std::size_t dimension() const { return basis_monomials.size(); }
  Bits reduce(const F2Poly& p) const;
};

DegreeBasis compute_degree_basis(const PresentedF2Algebra& a, int d);

class F2Matrix {
 public:
  F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Bits(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r][c] = v; }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  std::size_t rank() const;
  bool is_zero() const;
  F2Matrix operator*(const F2Matrix& o) const;
  F2Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::size_t cols_;
  std::vector<Bits> rows_;
};

// Bases for every degree 0..max_degree, computed once. Checks that Sq1 respects
// the relations when the algebra carries Sq1.
class GradedQuotient {
 public:
  GradedQuotient(const PresentedF2Algebra& a, int max_degree);

  const PresentedF2Algebra& algebra() const { return alg_; }
  int max_degree() const { return max_; }
  const DegreeBasis& basis(int d) const;
  std::size_t dimension(int d) const;

  // Sq1 from degree d to d+1: rows index basis(d+1), columns basis(d).
  F2Matrix sq1_matrix(int d) const;
  std::size_t sq1_homology_rank(int d) const;

 private:
  PresentedF2Algebra alg_;
  int max_;
  std::vector<DegreeBasis> bases_;
};

std::size_t quotient_dimension(const PresentedF2Algebra& a, int d);
F2Matrix sq1_matrix(const PresentedF2Algebra& a, int d);
std::size_t sq1_homology_rank(const PresentedF2Algebra& a, int d);

struct SplitRanks {
  std::size_t rank_R = 0;
  std::size_t rank_xR = 0;
  friend bool operator==(const SplitRanks&, const SplitRanks&) = default;
};

// Sq1-homology of H*(B(P^m,2);F2) split along R + x.R.
SplitRanks split_sq1_homology(int m, int d);

// Ring presentations. A negative cap selects the default 2m+2 (at least 26
// for the classifying spaces).
PresentedF2Algebra polynomial_ring(const std::vector<Generator>& gens, int cap = 26);
PresentedF2Algebra bd8_ring(int cap = 26);
PresentedF2Algebra pinf_squared_ring(int cap = 26);
PresentedF2Algebra unordered_config_ring(int m, int cap = -1);
PresentedF2Algebra ordered_config_ring(int m, int cap = -1);

}  // namespace confcoh
