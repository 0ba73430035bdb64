#include "confcoh/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace confcoh {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonTwoPrimary: return "NonTwoPrimary";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::IllDefinedDerivation: return "IllDefinedDerivation";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::InconsistentRecursion: return "InconsistentRecursion";
    case ErrorKind::InconsistentOrders: return "InconsistentOrders";
  }
  return "Error";
}

AbGroup2::AbGroup2(int free_rank, std::vector<int> exponents) : free_(free_rank), exps_(std::move(exponents)) {
  if (free_ < 0) throw Error(ErrorKind::InvalidArgument, "negative free rank");
  for (int e : exps_)
    if (e < 1) throw Error(ErrorKind::InvalidArgument, "torsion exponent must be positive");
  std::sort(exps_.begin(), exps_.end());
}

AbGroup2 AbGroup2::elementary(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative rank");
  return AbGroup2(0, std::vector<int>(k, 1));
}

AbGroup2 AbGroup2::braces(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative rank");
  std::vector<int> e(k, 1);
  e.push_back(2);
  return AbGroup2(0, std::move(e));
}

bool AbGroup2::is_elementary() const {
  return free_ == 0 && std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 1; });
}

int AbGroup2::torsion_order_log2() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

int AbGroup2::count_exponent(int e) const { return static_cast<int>(std::count(exps_.begin(), exps_.end(), e)); }

std::string AbGroup2::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_ == 1)
    parts.push_back("Z");
  else if (free_ > 1)
    parts.push_back("Z^" + std::to_string(free_));
  int ones = count_exponent(1);
  int twos = count_exponent(2);
  int higher = torsion_rank() - ones - twos;
  if (twos == 1 && ones == 0) {
    parts.push_back("Z/4");
  } else if (twos == 1) {
    parts.push_back("{" + std::to_string(ones) + "}");
  } else {
    if (ones > 0) parts.push_back("<" + std::to_string(ones) + ">");
    for (int i = 0; i < twos; ++i) parts.push_back("Z/4");
  }
  if (higher > 0)
    for (int e : exps_)
      if (e > 2) parts.push_back("Z/" + mpz_class(mpz_class(1) << e).get_str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out;
}

AbGroup2 direct_sum(const AbGroup2& a, const AbGroup2& b) {
  std::vector<int> e = a.torsion_exponents();
  e.insert(e.end(), b.torsion_exponents().begin(), b.torsion_exponents().end());
  return AbGroup2(a.free_rank() + b.free_rank(), std::move(e));
}

GroupStats stats(const AbGroup2& g) {
  GroupStats s;
  s.two_rank_tensor = g.free_rank() + g.torsion_rank();
  s.mult2_kernel_rank = g.torsion_rank();
  s.torsion_order_log2 = g.torsion_order_log2();
  s.z4_count = g.count_exponent(2);
  return s;
}

nlohmann::json to_json(const AbGroup2& g) {
  nlohmann::json t = nlohmann::json::array();
  for (int e : g.torsion_exponents()) {
    if (e >= 63) throw Error(ErrorKind::RangeError, "torsion order does not fit JSON integer");
    t.push_back(std::uint64_t{1} << e);
  }
  return {{"free", g.free_rank()}, {"torsion", t}};
}

AbGroup2 group_from_json(const nlohmann::json& j) {
  int free = j.at("free").get<int>();
  std::vector<int> exps;
  for (const auto& v : j.at("torsion")) {
    auto order = v.get<std::uint64_t>();
    if (order < 2 || (order & (order - 1)) != 0) throw Error(ErrorKind::NonTwoPrimary, "order " + std::to_string(order));
    int e = 0;
    while ((std::uint64_t{1} << e) != order) ++e;
    exps.push_back(e);
  }
  return AbGroup2(free, std::move(exps));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

namespace {

struct Work {
  std::size_t rows, cols;
  std::vector<std::vector<mpz_class>> a;
  void swap_rows(std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
  }
  // row_i -= q * row_j
  void row_axpy(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
  }
  void col_axpy(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
  }
};

bool place_min_pivot(Work& w, std::size_t t) {
  bool found = false;
  mpz_class best;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = t; i < w.rows; ++i)
    for (std::size_t j = t; j < w.cols; ++j) {
      if (sgn(w.a[i][j]) == 0) continue;
      mpz_class v = abs(w.a[i][j]);
      if (!found || v < best) {
        found = true;
        best = v;
        bi = i;
        bj = j;
      }
    }
  if (!found) return false;
  w.swap_rows(t, bi);
  w.swap_cols(t, bj);
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Work w{m.rows(), m.cols(), {}};
  w.a.assign(w.rows, std::vector<mpz_class>(w.cols));
  for (std::size_t i = 0; i < w.rows; ++i)
    for (std::size_t j = 0; j < w.cols; ++j) w.a[i][j] = m(i, j);

  SmithForm out;
  std::size_t limit = std::min(w.rows, w.cols);
  for (std::size_t t = 0; t < limit; ++t) {
    if (!place_min_pivot(w, t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < w.rows; ++i) {
        if (sgn(w.a[i][t]) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), w.a[i][t].get_mpz_t(), w.a[t][t].get_mpz_t());
        w.row_axpy(i, t, q);
        if (sgn(w.a[i][t]) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < w.cols; ++j) {
        if (sgn(w.a[t][j]) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), w.a[t][j].get_mpz_t(), w.a[t][t].get_mpz_t());
        w.col_axpy(j, t, q);
        if (sgn(w.a[t][j]) != 0) dirty = true;
      }
      if (dirty) {
        place_min_pivot(w, t);
        continue;
      }
      // pivot must divide the remaining block
      bool fixed = false;
      for (std::size_t i = t + 1; i < w.rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < w.cols; ++j)
          if (!mpz_divisible_p(w.a[i][j].get_mpz_t(), w.a[t][t].get_mpz_t())) {
            w.row_axpy(t, i, -1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    out.diagonal.push_back(abs(w.a[t][t]));
    ++out.rank;
  }
  return out;
}

AbGroup2 group_from_presentation(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<int> exps;
  for (const auto& d : s.diagonal) {
    if (d == 1) continue;
    if (mpz_popcount(d.get_mpz_t()) != 1) throw Error(ErrorKind::NonTwoPrimary, "invariant factor " + d.get_str());
    exps.push_back(static_cast<int>(mpz_scan1(d.get_mpz_t(), 0)));
  }
  return AbGroup2(static_cast<int>(m.cols()) - s.rank, std::move(exps));
}

IntMatrix presentation_of(const AbGroup2& g) {
  const auto& e = g.torsion_exponents();
  IntMatrix m(e.size(), e.size() + g.free_rank());
  for (std::size_t i = 0; i < e.size(); ++i) m(i, i) = mpz_class(1) << e[i];
  return m;
}

void GradedGroups::set(int degree, const AbGroup2& g) {
  if (degree < 0 || degree > bound_)
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(degree) + " outside support");
  if (g.is_zero())
    groups_.erase(degree);
  else
    groups_[degree] = g;
}

AbGroup2 GradedGroups::at(int degree) const {
  auto it = groups_.find(degree);
  return it == groups_.end() ? AbGroup2{} : it->second;
}

GradedGroups uct_homology(const GradedGroups& coh) {
  GradedGroups out(coh.support_bound());
  for (int i = 0; i <= coh.support_bound(); ++i)
    out.set(i, direct_sum(coh.at(i).free_part(), coh.at(i + 1).torsion()));
  return out;
}

GradedGroups uct_cohomology(const GradedGroups& hom) {
  GradedGroups out(hom.support_bound());
  for (int i = 0; i <= hom.support_bound(); ++i)
    out.set(i, direct_sum(hom.at(i).free_part(), hom.at(i - 1).torsion()));
  return out;
}

}  // namespace confcoh
