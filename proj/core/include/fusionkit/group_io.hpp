#pragma once

#include <string>

#include "fusionkit/caps.hpp"
#include "fusionkit/group_table.hpp"

namespace fusionkit {

/// Parses a group file:
///   {"degree": n, "generators": [[[1,2,3],[4,5]], ...]}  (1-based cycles)
///   {"table": [[...], ...]}                               (0-based Cayley table)
GroupPtr parse_group_json(std::string const& text, Caps const& caps = {});
GroupPtr load_group_file(std::string const& path, Caps const& caps = {});

}  // namespace fusionkit
