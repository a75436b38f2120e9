#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/caps.hpp"

namespace fusionkit::cli {

enum class Format { json, markdown };

struct RunConfig {
  std::vector<std::string> pairs;
  std::vector<std::string> specs;
  std::optional<unsigned> prime;
  std::string suite;
  std::string which;
  std::string n_range;
  Format format = Format::json;
  std::string out;
  Caps caps;
  double time_budget_secs = 0;  // 0: unlimited
  unsigned workers = 1;
  bool widen = false;
};

/// Applies a JSON object of cap overrides ({"max_group_order": 5000, ...}).
/// Throws ParseError on unknown keys or non-positive values.
void apply_caps_json(Caps& caps, std::string const& text);

}  // namespace fusionkit::cli
