#include "haantjes/catalog.hpp"
#include "haantjes/error.hpp"
#include <algorithm>

namespace haantjes {

// defined in catalog_data.cpp
std::string catalog_source(const std::string& name, const std::string& F);

const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names = {"drach-holt", "sw1", "sw2", "sw3", "sw4", "aniso-rosochatius",
        "kepler-rosochatius", "gen-kepler", "aniso-e3"};
    return names;
}

const std::vector<std::pair<std::string, std::string>>& catalog_operators()
{
    static const std::vector<std::pair<std::string, std::string>> ops = {{"drach-holt", "KDH"}, {"sw1", "K2"},
        {"sw1", "K3"}, {"sw2", "K2"}, {"sw2", "K3"}, {"sw3", "K2"}, {"sw3", "K3"}, {"sw4", "K2"}, {"sw4", "K3"},
        {"aniso-rosochatius", "K1"}, {"aniso-rosochatius", "K2"}, {"kepler-rosochatius", "K2"},
        {"kepler-rosochatius", "K3"}, {"kepler-rosochatius", "K4"}, {"kepler-rosochatius", "K5"},
        {"kepler-rosochatius", "K6"}, {"kepler-rosochatius", "K7"}, {"aniso-e3", "K1"}};
    return ops;
}

std::string catalog_text(const std::string& name, const std::string& F)
{
    const auto& names = catalog_names();
    if(std::find(names.begin(), names.end(), name) == names.end()) {
        std::string known;
        for(const auto& n : names) known += (known.empty() ? "" : ", ") + n;
        throw LookupError("unknown catalog system '" + name + "' (known: " + known + ")");
    }
    const bool family = name == "gen-kepler" || name == "aniso-e3";
    if(!F.empty() && !family) throw PreconditionError("system '" + name + "' has no free function F");
    std::string profile = F.empty() ? "u^2" : F;
    if(family) {
        try {
            Expr::parse(profile, {"u"});
        } catch(const ParseError& e) {
            throw PreconditionError("F must be an expression in u alone: " + std::string(e.what()));
        }
    }
    return catalog_source(name, profile);
}

SystemDefinition get_system(const std::string& name, const std::string& F)
{
    return parse_system(catalog_text(name, F), "catalog:" + name);
}

}  // namespace haantjes
