#pragma once

#include <string>

#include "confcoh/report.hpp"

namespace confcoh {

enum class Suite { All, Uct, Bockstein, Duality, Clss, Sq1, Stiefel };

Suite parse_suite(const std::string& s);
const char* suite_name(Suite s);

struct MRange {
  int lo = 1;
  int hi = 1;
};

// "a..b" or a single integer.
MRange parse_m_range(const std::string& s);

VerificationReport run_suite(Suite s, MRange range);
VerificationReport run_suite_for_m(Suite s, int m);

}  // namespace confcoh
