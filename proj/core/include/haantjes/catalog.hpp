/** \file    catalog.hpp
    \brief   Built-in system definitions with their claim manifests
*/
#pragma once
#include "haantjes/system.hpp"
#include <string>
#include <vector>

namespace haantjes {

/// registry names, in listing order
const std::vector<std::string>& catalog_names();

/** Definition text of a catalog system.  F is the profile F(u) of the families with a free function of
    u = y/x (gen-kepler, aniso-e3); empty selects the default u^2.  F must depend on u only. */
std::string catalog_text(const std::string& name, const std::string& F = {});

SystemDefinition get_system(const std::string& name, const std::string& F = {});

/// the catalog operators swept by the Haantjes/compatibility acceptance check, as (system, operator)
const std::vector<std::pair<std::string, std::string>>& catalog_operators();

}  // namespace haantjes
