#pragma once

#include <string>

#include "confcoh/chart.hpp"
#include "confcoh/configcoh.hpp"
#include "confcoh/report.hpp"

namespace confcoh {

enum class OutputFormat { Table, Json, Csv };
enum class Coefficients { Integer, Twisted, ModTwo };

OutputFormat parse_format(const std::string& s);
Coefficients parse_coefficients(const std::string& s);
SpaceKind parse_space(const std::string& s);

std::string render_groups(const SpaceId& s, OutputFormat f, Coefficients c, bool homology);

// Torsion of H^column(B(P^m,2)) in brace notation, "" when trivial.
std::string table1_cell(int m, int column);
std::string render_table1(OutputFormat f);

// failures_only drops passing and skipped lines from the table form; the
// summary line still counts everything.
std::string render_report(const VerificationReport& r, OutputFormat f, bool failures_only = false);

// Degreewise dimensions of the presented mod 2 ring and its Sq1 homology.
std::string render_hilbert(const SpaceId& s, OutputFormat f);

std::string render_chart(const Chart& c, OutputFormat f);

}  // namespace confcoh
