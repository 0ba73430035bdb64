#include <CLI11.hpp>

#include <iostream>

#include "confcoh/clss.hpp"
#include "confcoh/render.hpp"
#include "confcoh/verify.hpp"

using namespace confcoh;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_m(int m, int max_m) {
  if (m < 1) throw Usage("--m must be at least 1");
  if (m > max_m) throw Usage("--m " + std::to_string(m) + " exceeds --max-m " + std::to_string(max_m));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of configuration spaces of two points in real projective space"};
  app.require_subcommand(1);
  int max_m = 12;
  app.add_option("--max-m", max_m, "Largest m accepted by any subcommand")->capture_default_str();

  std::string space = "B", format = "table", coeffs = "Z";
  int m = 0;
  bool homology = false;
  auto* groups = app.add_subcommand("groups", "Integral, twisted or mod 2 groups in degrees 0..2m-1");
  groups->add_option("--space", space, "F (ordered) or B (unordered)")->check(CLI::IsMember({"F", "B"}));
  groups->add_option("--m", m, "Dimension of the projective space")->required();
  groups->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  groups->add_option("--coefficients", coeffs)->check(CLI::IsMember({"Z", "twisted", "F2"}));
  groups->add_flag("--homology", homology, "Integral homology instead of cohomology");

  auto* table1 = app.add_subcommand("table1", "Torsion of H^i(B(P^m,2)) for m = 2,4,6,8 and i = 2..14");
  table1->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

  std::string suite = "all", m_range = "2..10";
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 0 iff every check passes");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "uct", "bockstein", "duality", "clss", "sq1", "stiefel"}));
  verify->add_option("--m-range", m_range, "Inclusive range a..b")->capture_default_str();
  verify->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  bool quiet = false;
  verify->add_flag("--quiet", quiet, "Only print failures and the summary");

  auto* hilbert = app.add_subcommand("hilbert", "Mod 2 dimensions and Sq1 homology of the presented ring");
  hilbert->add_option("--space", space)->check(CLI::IsMember({"F", "B"}));
  hilbert->add_option("--m", m)->required();
  hilbert->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

  char option = 'a';
  std::string scenario = "a";
  auto* chart = app.add_subcommand("chart", "Pages of the m = 3 spectral sequence under either d2 option");
  chart->add_option("--option", scenario)->check(CLI::IsMember({"a", "b"}));
  chart->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    OutputFormat f = parse_format(format);
    if (groups->parsed()) {
      require_m(m, max_m);
      std::cout << render_groups({parse_space(space), m}, f, parse_coefficients(coeffs), homology);
      return 0;
    }
    if (table1->parsed()) {
      std::cout << render_table1(f);
      return 0;
    }
    if (hilbert->parsed()) {
      require_m(m, max_m);
      std::cout << render_hilbert({parse_space(space), m}, f);
      return 0;
    }
    if (chart->parsed()) {
      option = scenario[0];
      ScenarioRun run = m3_scenario(option);
      if (f == OutputFormat::Json) {
        nlohmann::json doc{{"scenario", run.name}, {"pages", nlohmann::json::array()}};
        for (const auto& p : run.pages) doc["pages"].push_back(p.to_json());
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const auto& p : run.pages) std::cout << render_chart(p, f) << (f == OutputFormat::Table ? "\n" : "");
      }
      return run.report.passed() ? 0 : kExitFail;
    }
    if (verify->parsed()) {
      MRange r;
      try {
        r = parse_m_range(m_range);
      } catch (const Error& e) {
        throw Usage(e.what());
      }
      if (r.hi > max_m) throw Usage("--m-range exceeds --max-m " + std::to_string(max_m));
      VerificationReport rep = run_suite(parse_suite(suite), r);
      std::cout << render_report(rep, f, quiet);
      return rep.passed() ? 0 : kExitFail;
    }
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}
