#include "report_json.hpp"
#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace haantjes {

namespace {

nlohmann::ordered_json number(double v)
{
    if(!std::isfinite(v)) return nullptr;
    return v;
}

}  // namespace

std::string report_to_json(const VerificationReport& rep)
{
    nlohmann::ordered_json j;
    j["tool_version"] = rep.tool_version;
    j["command"] = rep.command;
    j["system"] = rep.system;
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    j["tol"] = rep.tol;
    auto& claims = j["claims"] = nlohmann::ordered_json::array();
    std::size_t id = 1;
    for(const Check& c : rep.claims) {
        nlohmann::ordered_json o;
        o["id"] = id++;
        o["claim"] = c.claim;
        o["kind"] = c.kind;
        o["pass"] = c.pass;
        o["satisfied"] = c.satisfied();
        o["error"] = c.error;
        o["expect_fail"] = c.expect_fail;
        o["informational"] = c.informational;
        o["residual"] = number(c.residual);
        o["threshold"] = number(c.threshold);
        o["samples"] = c.samples;
        o["failed_samples"] = c.failed_samples;
        o["notes"] = c.notes;
        auto& values = o["values"] = nlohmann::ordered_json::object();
        for(const auto& [k, v] : c.values) values[k] = number(v);
        claims.push_back(std::move(o));
    }
    j["pass"] = rep.pass();
    j["wall_time"] = rep.wall_time;
    return j.dump(2) + "\n";
}

std::string report_to_table(const VerificationReport& rep)
{
    std::string out;
    char line[512];
    std::snprintf(line, sizeof line, "%s  seed=%llu samples=%zu tol=%g\n", rep.system.c_str(),
        static_cast<unsigned long long>(rep.seed), rep.samples, rep.tol);
    out += line;
    for(const Check& c : rep.claims) {
        const char* status = c.informational ? "info" : c.satisfied() ? "ok" : c.error ? "ERROR" : "FAIL";
        std::snprintf(line, sizeof line, "  %-5s %-48s %10.3g / %-8.3g", status, c.claim.c_str(), c.residual, c.threshold);
        out += line;
        if(c.failed_samples) out += "  (" + std::to_string(c.failed_samples) + " failed samples)";
        out += "\n";
        if(!c.satisfied() || c.informational)
            for(const auto& n : c.notes) out += "        " + n + "\n";
    }
    std::size_t bad = 0;
    for(const Check& c : rep.claims) bad += !c.satisfied();
    std::snprintf(line, sizeof line, "%s: %zu claim(s), %zu unsatisfied, %.2f s\n", rep.pass() ? "PASS" : "FAIL",
        rep.claims.size(), bad, rep.wall_time);
    out += line;
    return out;
}

}  // namespace haantjes
