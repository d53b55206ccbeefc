/** \file    manifest.hpp
    \brief   Claim lines of a system manifest and their execution

    A claim line is  [info] [expect-fail] <kind> <args...> [key=value...]
    Recognized keys: tol, expect (a number or expression over the parameters), trials, mult, samples;
    any parameter name overrides that parameter for this claim only.

      haantjes OP [CHART]             nijenhuis OP [CHART]           omega OP
      powers OP                       inverse OP                     doubled OP
      chain OP H HA [CHART]           lsov H HA CHART OP             fit-chain H HA BASIS...
      involution F G                  benenti F G CHART              vanishes F
      diagonal OP CHART               proportional A B CHART         canonical CHART
      minpoly OP D                    semisimple OP yes|no           spectrum OP F1 F2 ...
      cyclic OP GEN DEG [C0 C1 ...]   ('-' skips a coefficient; GEN is an operator or a quoted combination)
      algebra OP... [abelian]         lift OP                        chart CHART
*/
#pragma once
#include "haantjes/report.hpp"
#include "haantjes/system.hpp"
#include <string>
#include <vector>

namespace haantjes {

struct ManifestOptions {
    std::uint64_t seed = 42;
    std::size_t samples = 100;
    double tol = 1e-8;
    std::string filter;     ///< run only claims whose text contains this substring (empty: all)
};

/// a parsed claim line
struct Claim {
    std::string text;
    std::string kind;
    std::vector<std::string> args;
    std::map<std::string, std::string> options;
    bool informational = false;
    bool expect_fail = false;
};

Claim parse_claim(const std::string& line);

/// executes one claim; errors are captured in the returned check, never thrown
Check run_claim(const SystemDefinition& def, const Claim& claim, const ManifestOptions& opt);

/// executes every manifest claim passing the filter
VerificationReport run_manifest(const SystemDefinition& def, const ManifestOptions& opt = {});

/** Both Jacobi-Sklyanin residuals at a reference-chart point, relative to max(1, sum of |additive terms|),
    from the fields listed in the [separation] section. */
std::vector<double> sklyanin_residual(const System& sys, std::span<const double> x);

}  // namespace haantjes
