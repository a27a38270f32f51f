#pragma once

#include <string>
#include <vector>

#include "blocklab/numtheory.hpp"

namespace blocklab {

// A builtin group: name, advertised order, and the group file text (the
// external format, parsed by the public parser).
struct CatalogEntry {
    std::string name;
    i64 order;
    std::string text;
};

const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry* find_builtin(const std::string& name);

}  // namespace blocklab
