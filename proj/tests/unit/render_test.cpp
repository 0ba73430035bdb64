#include <doctest.h>

#include <sstream>

#include "confcoh/render.hpp"
#include "confcoh/verify.hpp"

using namespace confcoh;

namespace {

// Published torsion table, cell by cell, columns 2..14.
const std::map<int, std::vector<std::string>> kTable1 = {
    {2, {"<2>", "", "", "", "", "", "", "", "", "", "", "", ""}},
    {4, {"<2>", "<1>", "{2}", "<1>", "<2>", "", "", "", "", "", "", "", ""}},
    {6, {"<2>", "<1>", "{2}", "<2>", "<4>", "<2>", "{2}", "<1>", "<2>", "", "", "", ""}},
    {8, {"<2>", "<1>", "{2}", "<2>", "<4>", "<3>", "{4}", "<3>", "<4>", "<2>", "{2}", "<1>", "<2>"}},
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("table 1 cells") {
    for (const auto& [m, row] : kTable1)
      for (int c = 2; c <= 14; ++c) {
        INFO("m=" << m << " column " << c);
        CHECK(table1_cell(m, c) == row[c - 2]);
      }
    CHECK(table1_cell(8, 8) == "{4}");
    CHECK(table1_cell(6, 10) == "<2>");
    CHECK(table1_cell(2, 3) == "");
  }

  TEST_CASE("table 1 renderings agree") {
    const std::string csv = render_table1(OutputFormat::Csv);
    auto lines = split(csv, '\n');
    REQUIRE(lines.size() >= 5);
    CHECK(lines[0] == "m,2,3,4,5,6,7,8,9,10,11,12,13,14");
    for (int k = 0; k < 4; ++k) {
      auto cells = split(lines[k + 1], ',');
      REQUIRE(cells.size() == 14);
      int m = std::stoi(cells[0]);
      for (int c = 2; c <= 14; ++c) CHECK(cells[c - 1] == kTable1.at(m)[c - 2]);
    }
    nlohmann::json j = nlohmann::json::parse(render_table1(OutputFormat::Json));
    for (const auto& row : j["rows"]) {
      int m = row["m"];
      for (int c = 2; c <= 14; ++c) {
        std::string key = std::to_string(c);
        std::string got = row["cells"].contains(key) ? row["cells"][key].get<std::string>() : "";
        CHECK(got == kTable1.at(m)[c - 2]);
      }
    }
    CHECK(render_table1(OutputFormat::Table) == render_table1(OutputFormat::Table));
    std::string table = render_table1(OutputFormat::Table);
    CHECK(table.find("m=8   <2>  <1>  {2}  <2>  <4>  <3>  {4}  <3>  <4>  <2>  {2}  <1>  <2>") != std::string::npos);
  }

  TEST_CASE("group renderings carry the same data") {
    for (int m = 1; m <= 8; ++m)
      for (SpaceKind k : {SpaceKind::OrderedF, SpaceKind::UnorderedB})
        for (Coefficients c : {Coefficients::Integer, Coefficients::Twisted, Coefficients::ModTwo}) {
          SpaceId s{k, m};
          nlohmann::json j = nlohmann::json::parse(render_groups(s, OutputFormat::Json, c, false));
          auto csv = split(render_groups(s, OutputFormat::Csv, c, false), '\n');
          auto table = split(render_groups(s, OutputFormat::Table, c, false), '\n');
          REQUIRE(j["groups"].size() == static_cast<std::size_t>(2 * m));
          for (int i = 0; i < 2 * m; ++i) {
            AbGroup2 g = group_from_json(j["groups"][i]["group"]);
            auto cells = split(csv[i + 1], ',');
            CHECK(std::stoi(cells[1]) == g.free_rank());
            std::string orders;
            for (const auto& o : j["groups"][i]["group"]["torsion"])
              orders += (orders.empty() ? "" : " ") + std::to_string(o.get<int>());
            CHECK(cells[2] == orders);
            CHECK(table[i + 1].substr(4) == g.to_string());
          }
        }
    CHECK_THROWS_AS(render_groups(unordered(3), OutputFormat::Json, Coefficients::Twisted, true), Error);
  }

  TEST_CASE("cli examples") {
    std::string b4 = render_groups(unordered(4), OutputFormat::Table, Coefficients::Integer, false);
    CHECK(b4.find("0   Z\n") != std::string::npos);
    CHECK(b4.find("4   {2}\n") != std::string::npos);
    CHECK(b4.find("7   Z\n") != std::string::npos);
    auto f1 = split(render_groups(ordered(1), OutputFormat::Csv, Coefficients::Integer, false), '\n');
    CHECK(f1[1] == "0,1,");
    CHECK(f1[2] == "1,1,");
    nlohmann::json tw = nlohmann::json::parse(render_groups(unordered(5), OutputFormat::Json, Coefficients::Twisted, false));
    for (int j = 0; j <= 9; ++j) CHECK(group_from_json(tw["groups"][j]["group"]) == twisted_cohomology(unordered(5), j));
  }

  TEST_CASE("parsers") {
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_format("xml"), Error);
    CHECK(parse_coefficients("F2") == Coefficients::ModTwo);
    CHECK(parse_space("F") == SpaceKind::OrderedF);
    MRange r = parse_m_range("3..7");
    CHECK(r.lo == 3);
    CHECK(r.hi == 7);
    CHECK(parse_m_range("5").hi == 5);
    CHECK_THROWS_AS(parse_m_range("7..3"), Error);
    CHECK_THROWS_AS(parse_m_range("0..3"), Error);
    CHECK_THROWS_AS(parse_m_range("a..b"), Error);
    CHECK(parse_suite("sq1") == Suite::Sq1);
    CHECK_THROWS_AS(parse_suite("nope"), Error);
  }

  TEST_CASE("report rendering") {
    VerificationReport r("t");
    r.check(3, 4, "x", 1, 1);
    r.check(3, 5, "y", 1, 2);
    r.skip(7, -1, "z", "open", true);
    std::string t = render_report(r, OutputFormat::Table);
    CHECK(t.find("FAIL") != std::string::npos);
    CHECK(t.find("SKIPPED-OPEN") != std::string::npos);
    CHECK(t.find("3 checks, 1 failed, 1 skipped (open)") != std::string::npos);
    std::string q = render_report(r, OutputFormat::Table, true);
    CHECK(q.find("PASS") == std::string::npos);
    nlohmann::json j = nlohmann::json::parse(render_report(r, OutputFormat::Json));
    CHECK(j["passed"] == false);
    CHECK(j["failures"] == 1);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("suites pass") {
    CHECK(run_suite(Suite::Sq1, {3, 7}).passed());
    CHECK(run_suite(Suite::Duality, {2, 12}).passed());
    VerificationReport clss = run_suite(Suite::Clss, {2, 12});
    CHECK(clss.passed());
    int open = 0;
    for (const auto& c : clss.records())
      if (c.status == CheckStatus::SkippedOpen) {
        CHECK(c.m % 4 == 3);
        ++open;
      }
    CHECK(open == 3);
    CHECK(run_suite(Suite::Stiefel, {2, 12}).passed());
  }

  TEST_CASE("runs are deterministic") {
    CHECK(run_suite(Suite::Uct, {2, 5}).to_json() == run_suite(Suite::Uct, {2, 5}).to_json());
  }
}
