#include "confcoh/render.hpp"

#include <iomanip>
#include <sstream>

#include "confcoh/bockstein.hpp"
#include "confcoh/f2algebra.hpp"

namespace confcoh {

OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::InvalidArgument, "unknown format " + s);
}

Coefficients parse_coefficients(const std::string& s) {
  if (s == "Z") return Coefficients::Integer;
  if (s == "twisted") return Coefficients::Twisted;
  if (s == "F2") return Coefficients::ModTwo;
  throw Error(ErrorKind::InvalidArgument, "unknown coefficients " + s);
}

SpaceKind parse_space(const std::string& s) {
  if (s == "F") return SpaceKind::OrderedF;
  if (s == "B") return SpaceKind::UnorderedB;
  throw Error(ErrorKind::InvalidArgument, "unknown space " + s);
}

namespace {

const char* coeff_label(Coefficients c) {
  switch (c) {
    case Coefficients::Integer: return "Z";
    case Coefficients::Twisted: return "twisted";
    case Coefficients::ModTwo: return "F2";
  }
  return "?";
}

std::string orders_field(const AbGroup2& g) {
  std::string out;
  const nlohmann::json doc = to_json(g);
  for (const auto& v : doc["torsion"]) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v.get<std::uint64_t>());
  }
  return out;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

std::string render_groups(const SpaceId& s, OutputFormat f, Coefficients c, bool homology) {
  if (s.m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
  if (homology && c != Coefficients::Integer)
    throw Error(ErrorKind::InvalidArgument, "homology is tabulated with integer coefficients only");
  const int top = 2 * s.m - 1;
  GradedGroups hom = homology ? confcoh::homology(s) : GradedGroups{};
  auto group = [&](int i) -> AbGroup2 {
    if (homology) return hom.at(i);
    switch (c) {
      case Coefficients::Integer: return cohomology(s, i);
      case Coefficients::Twisted: return twisted_cohomology(s, i);
      case Coefficients::ModTwo: return AbGroup2::elementary(mod2_dimension(s, i));
    }
    return {};
  };
  const std::string kind = homology ? "homology" : "cohomology";
  std::ostringstream out;
  if (f == OutputFormat::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i <= top; ++i) rows.push_back({{"degree", i}, {"group", to_json(group(i))}});
    nlohmann::json doc{{"space", s.kind == SpaceKind::UnorderedB ? "B" : "F"},
                       {"m", s.m},
                       {"kind", kind},
                       {"coefficients", coeff_label(c)},
                       {"groups", rows}};
    out << doc.dump(2) << "\n";
  } else if (f == OutputFormat::Csv) {
    out << "degree,free,torsion\n";
    for (int i = 0; i <= top; ++i) out << i << "," << group(i).free_rank() << "," << orders_field(group(i)) << "\n";
  } else {
    out << s.name() << " " << kind << ", " << coeff_label(c) << " coefficients\n";
    for (int i = 0; i <= top; ++i) out << rstrip(pad(std::to_string(i), 4) + group(i).to_string()) << "\n";
  }
  return out.str();
}

std::string table1_cell(int m, int column) {
  AbGroup2 t = cohomology(unordered(m), column).torsion();
  return t.is_zero() ? "" : t.to_string();
}

std::string render_table1(OutputFormat f) {
  const int rows[] = {2, 4, 6, 8};
  std::ostringstream out;
  if (f == OutputFormat::Json) {
    nlohmann::json doc{{"columns", nlohmann::json::array()}, {"rows", nlohmann::json::array()}};
    for (int c = 2; c <= 14; ++c) doc["columns"].push_back(c);
    for (int m : rows) {
      nlohmann::json cells = nlohmann::json::object();
      for (int c = 2; c <= 14; ++c)
        if (auto s = table1_cell(m, c); !s.empty()) cells[std::to_string(c)] = s;
      doc["rows"].push_back({{"m", m}, {"cells", cells}});
    }
    out << doc.dump(2) << "\n";
  } else if (f == OutputFormat::Csv) {
    out << "m";
    for (int c = 2; c <= 14; ++c) out << "," << c;
    out << "\n";
    for (int m : rows) {
      out << m;
      for (int c = 2; c <= 14; ++c) out << "," << table1_cell(m, c);
      out << "\n";
    }
  } else {
    std::string line = pad("", 6);
    for (int c = 2; c <= 14; ++c) line += pad(std::to_string(c), 5);
    out << rstrip(line) << "\n";
    for (int m : rows) {
      line = pad("m=" + std::to_string(m), 6);
      for (int c = 2; c <= 14; ++c) line += pad(table1_cell(m, c), 5);
      out << rstrip(line) << "\n";
    }
  }
  return out.str();
}

std::string render_report(const VerificationReport& r, OutputFormat f, bool failures_only) {
  std::ostringstream out;
  if (f == OutputFormat::Json) {
    out << r.to_json().dump(2) << "\n";
    return out.str();
  }
  auto opt = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
  if (f == OutputFormat::Csv) {
    auto q = [](const std::string& s) {
      std::string o = "\"";
      for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return o + "\"";
    };
    out << "status,suite,m,degree,label,expected,computed\n";
    for (const auto& c : r.records())
      out << status_name(c.status) << "," << c.suite << "," << opt(c.m) << "," << opt(c.degree) << "," << q(c.label)
          << "," << q(c.expected) << "," << q(c.computed) << "\n";
    return out.str();
  }
  for (const auto& c : r.records()) {
    if (failures_only && c.status != CheckStatus::Fail) continue;
    out << pad(status_name(c.status), 13) << pad(c.suite, 10) << pad(c.m < 0 ? "-" : "m=" + opt(c.m), 6)
        << pad(c.degree < 0 ? "-" : "d=" + opt(c.degree), 6) << c.label;
    if (c.status == CheckStatus::Fail)
      out << "  expected " << c.expected << " got " << c.computed;
    else if (c.status == CheckStatus::Skipped || c.status == CheckStatus::SkippedOpen)
      out << "  (" << c.computed << ")";
    out << "\n";
  }
  out << r.records().size() << " checks, " << r.failures() << " failed, " << r.count(CheckStatus::SkippedOpen)
      << " skipped (open), " << r.count(CheckStatus::Skipped) << " skipped\n";
  return out.str();
}

std::string render_hilbert(const SpaceId& s, OutputFormat f) {
  PresentedF2Algebra ring = s.kind == SpaceKind::UnorderedB ? unordered_config_ring(s.m) : ordered_config_ring(s.m);
  const int top = 2 * s.m + 1;
  GradedQuotient q(ring, top + 1);
  std::ostringstream out;
  if (f == OutputFormat::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (int d = 0; d <= top; ++d)
      rows.push_back({{"degree", d},
                      {"dimension", q.dimension(d)},
                      {"sq1_homology", q.sq1_homology_rank(d)},
                      {"expected_dimension", mod2_dimension(s, d)},
                      {"expected_sq1_homology", page1_expected(s, d)}});
    out << nlohmann::json{{"space", s.name()}, {"rows", rows}}.dump(2) << "\n";
  } else if (f == OutputFormat::Csv) {
    out << "degree,dimension,sq1_homology,expected_dimension,expected_sq1_homology\n";
    for (int d = 0; d <= top; ++d)
      out << d << "," << q.dimension(d) << "," << q.sq1_homology_rank(d) << "," << mod2_dimension(s, d) << ","
          << page1_expected(s, d) << "\n";
  } else {
    out << s.name() << " mod 2 cohomology\n";
    out << "i   dim  Sq1-homology\n";
    for (int d = 0; d <= top; ++d)
      out << pad(std::to_string(d), 4) << pad(std::to_string(q.dimension(d)), 5) << q.sq1_homology_rank(d) << "\n";
  }
  return out.str();
}

std::string render_chart(const Chart& c, OutputFormat f) {
  std::ostringstream out;
  if (f == OutputFormat::Json) {
    out << c.to_json().dump(2) << "\n";
  } else if (f == OutputFormat::Csv) {
    out << "page,q,p,free,torsion\n";
    for (const auto& [q, line] : c.lines())
      for (const auto& [p, g] : line.entries)
        out << c.page() << "," << q << "," << p << "," << g.free_rank() << "," << orders_field(g) << "\n";
  } else {
    out << "E" << c.page() << " page\n";
    for (auto it = c.lines().rbegin(); it != c.lines().rend(); ++it) {
      std::string line = pad("q=" + std::to_string(it->first), 6);
      for (int p = 0; p <= c.p_max(); ++p) {
        AbGroup2 g = c.at(p, it->first);
        line += pad(g.is_zero() ? "." : g.to_string(), 6);
      }
      out << rstrip(line) << "\n";
    }
    std::string axis = pad("", 6);
    for (int p = 0; p <= c.p_max(); ++p) axis += pad("p=" + std::to_string(p), 6);
    out << rstrip(axis) << "\n";
  }
  return out.str();
}

}  // namespace confcoh
