#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "confcoh/abelian.hpp"
#include "confcoh/groupcoh.hpp"

namespace confcoh {

struct ChartLine {
  std::string coefficients;
  std::map<int, AbGroup2> entries;  // zero entries are not stored
};

// One page of a first-quadrant spectral sequence living on finitely many
// horizontal lines, with columns 0..p_max.
class Chart {
 public:
  Chart(int page, int m, std::optional<GroupId> group, int p_max)
      : page_(page), m_(m), group_(group), p_max_(p_max) {}

  int page() const { return page_; }
  void set_page(int r) { page_ = r; }
  int m() const { return m_; }
  std::optional<GroupId> group() const { return group_; }
  int p_max() const { return p_max_; }

  void declare_line(int q, std::string coefficients);
  bool has_line(int q) const { return lines_.count(q) != 0; }
  void set(int p, int q, const AbGroup2& g);
  AbGroup2 at(int p, int q) const;
  const std::map<int, ChartLine>& lines() const { return lines_; }

  nlohmann::json to_json() const;

 private:
  int page_;
  int m_;
  std::optional<GroupId> group_;
  int p_max_;
  std::map<int, ChartLine> lines_;
};

}  // namespace confcoh
