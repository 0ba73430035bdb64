#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "confcoh/error.hpp"

namespace confcoh {

// Finitely generated abelian group whose torsion is a 2-group:
// Z^free  +  sum of Z/2^e over the stored exponents.
class AbGroup2 {
 public:
  AbGroup2() = default;
  AbGroup2(int free_rank, std::vector<int> exponents);

  static AbGroup2 zero() { return {}; }
  static AbGroup2 integers(int rank = 1) { return AbGroup2(rank, {}); }
  // <k>: elementary abelian of rank k
  static AbGroup2 elementary(int k);
  // {k}: <k> + Z4
  static AbGroup2 braces(int k);
  static AbGroup2 cyclic(int exponent) { return AbGroup2(0, {exponent}); }

  int free_rank() const { return free_; }
  const std::vector<int>& torsion_exponents() const { return exps_; }

  AbGroup2 torsion() const { return AbGroup2(0, exps_); }
  AbGroup2 free_part() const { return AbGroup2(free_, {}); }

  bool is_zero() const { return free_ == 0 && exps_.empty(); }
  bool is_finite() const { return free_ == 0; }
  bool is_elementary() const;

  int torsion_rank() const { return static_cast<int>(exps_.size()); }
  int torsion_order_log2() const;
  int count_exponent(int e) const;

  std::string to_string() const;

  friend bool operator==(const AbGroup2&, const AbGroup2&) = default;

 private:
  int free_ = 0;
  std::vector<int> exps_;
};

AbGroup2 direct_sum(const AbGroup2& a, const AbGroup2& b);

struct GroupStats {
  int two_rank_tensor = 0;     // dim of G (x) F2
  int mult2_kernel_rank = 0;   // dim of ker(2: G -> G)
  int torsion_order_log2 = 0;
  int z4_count = 0;
  friend bool operator==(const GroupStats&, const GroupStats&) = default;
};

GroupStats stats(const AbGroup2& g);

nlohmann::json to_json(const AbGroup2& g);
AbGroup2 group_from_json(const nlohmann::json& j);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

struct SmithForm {
  std::vector<mpz_class> diagonal;  // invariant factors d1 | d2 | ... | dr, all positive
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Rows are relations, columns are generators.
AbGroup2 group_from_presentation(const IntMatrix& m);

// Diagonal presentation matrix of a group (one row per torsion summand,
// one column per generator).
IntMatrix presentation_of(const AbGroup2& g);

class GradedGroups {
 public:
  GradedGroups() = default;
  explicit GradedGroups(int support_bound) : bound_(support_bound) {}

  int support_bound() const { return bound_; }
  void set(int degree, const AbGroup2& g);
  AbGroup2 at(int degree) const;
  const std::map<int, AbGroup2>& groups() const { return groups_; }

  friend bool operator==(const GradedGroups&, const GradedGroups&) = default;

 private:
  int bound_ = -1;
  std::map<int, AbGroup2> groups_;
};

// H_i = free(H^i) + T(H^{i+1})
GradedGroups uct_homology(const GradedGroups& cohomology);
// H^i = free(H_i) + T(H_{i-1})
GradedGroups uct_cohomology(const GradedGroups& homology);

}  // namespace confcoh
