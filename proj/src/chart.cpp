#include "confcoh/chart.hpp"

namespace confcoh {

void Chart::declare_line(int q, std::string coefficients) {
  if (q < 0) throw Error(ErrorKind::InvalidArgument, "negative line index");
  lines_[q].coefficients = std::move(coefficients);
}

void Chart::set(int p, int q, const AbGroup2& g) {
  auto it = lines_.find(q);
  if (it == lines_.end()) throw Error(ErrorKind::InvalidArgument, "line q=" + std::to_string(q) + " not declared");
  if (p < 0 || p > p_max_) throw Error(ErrorKind::DegreeOutOfRange, "column p=" + std::to_string(p) + " outside chart");
  if (g.is_zero())
    it->second.entries.erase(p);
  else
    it->second.entries[p] = g;
}

AbGroup2 Chart::at(int p, int q) const {
  auto it = lines_.find(q);
  if (it == lines_.end() || p < 0) return {};
  auto e = it->second.entries.find(p);
  return e == it->second.entries.end() ? AbGroup2{} : e->second;
}

nlohmann::json Chart::to_json() const {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& [q, line] : lines_) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [p, g] : line.entries) entries.push_back({{"p", p}, {"group", confcoh::to_json(g)}});
    lines.push_back({{"q", q}, {"entries", entries}});
  }
  return {{"page", page_}, {"lines", lines}};
}

}  // namespace confcoh
