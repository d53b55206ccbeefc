/** \file    report_json.hpp
    \brief   JSON form of verification reports (the machine contract of the command-line tool)
*/
#pragma once
#include "haantjes/report.hpp"
#include <string>

namespace haantjes {

/// pretty-printed JSON, keys in a fixed order; non-finite numbers become null
std::string report_to_json(const VerificationReport& rep);

/// compact human table, one line per claim
std::string report_to_table(const VerificationReport& rep);

}  // namespace haantjes
