#pragma once

#include <string>
#include <vector>

namespace fusionkit {

enum class CheckStatus { pass, fail, skipped };
char const* to_string(CheckStatus s);

/// One verdict of a verification report.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string detail;

  static Check of(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
  }
};

/// No check failed (skipped checks do not count as failures).
bool all_passed(std::vector<Check> const& checks);

}  // namespace fusionkit
