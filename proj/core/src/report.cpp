#include "haantjes/report.hpp"
#include <limits>

namespace haantjes {

void Check::set(const std::string& name, double v)
{
    for(auto& [k, x] : values)
        if(k == name) {
            x = v;
            return;
        }
    values.emplace_back(name, v);
}

double Check::get(const std::string& name) const
{
    for(const auto& [k, x] : values)
        if(k == name) return x;
    return std::numeric_limits<double>::quiet_NaN();
}

bool VerificationReport::pass() const
{
    for(const Check& c : claims)
        if(!c.satisfied()) return false;
    return true;
}

const char* tool_version() { return "0.1.0"; }

}  // namespace haantjes
