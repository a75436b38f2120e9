#pragma once

#include <string>
#include <vector>

#include "fusionkit/serialize.hpp"

namespace fusionkit::cli {

enum class ItemStatus { pass, fail, skipped, error };
char const* to_string(ItemStatus s);

struct ItemResult {
  std::string item;
  ItemStatus status = ItemStatus::pass;
  std::vector<Check> checks;
  Json data = Json::object();
  /// Skip notice or error text.
  std::string message;
  /// "likely-bug" for a failed theorem check, "finding" for a failed
  /// conjecture or an unverifiable model.
  std::string violation_kind;
};

struct Report {
  std::string command;
  std::string selector;
  Json config = Json::object();
  std::vector<ItemResult> items;
};

Json report_json(Report const& report);
std::string render_markdown(Report const& report);
/// 1 if any item failed, else 2 if any item errored, else 0.
int exit_code(Report const& report);

}  // namespace fusionkit::cli
