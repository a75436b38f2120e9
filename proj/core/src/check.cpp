#include "fusionkit/check.hpp"

#include <algorithm>

namespace fusionkit {

char const* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

bool all_passed(std::vector<Check> const& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](Check const& c) { return c.status == CheckStatus::fail; });
}

}  // namespace fusionkit
