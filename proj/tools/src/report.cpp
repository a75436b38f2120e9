#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace fusionkit::cli {

char const* to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::pass: return "pass";
    case ItemStatus::fail: return "fail";
    case ItemStatus::skipped: return "skipped";
    case ItemStatus::error: return "error";
  }
  return "?";
}

Json report_json(Report const& report) {
  Json items = Json::array();
  Json violations = Json::array();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (auto const& it : report.items) {
    ++counts[static_cast<int>(it.status)];
    Json j{{"item", it.item}, {"status", to_string(it.status)}, {"checks", to_json(it.checks)}};
    if (!it.data.empty()) j["data"] = it.data;
    if (!it.message.empty()) j["message"] = it.message;
    if (it.status == ItemStatus::fail) {
      j["kind"] = it.violation_kind;
      for (auto const& c : it.checks) {
        if (c.status != CheckStatus::fail) continue;
        violations.push_back({{"item", it.item},
                              {"kind", it.violation_kind},
                              {"check", c.name},
                              {"detail", c.detail}});
      }
      if (it.checks.empty() || std::none_of(it.checks.begin(), it.checks.end(), [](auto const& c) {
            return c.status == CheckStatus::fail;
          })) {
        violations.push_back({{"item", it.item}, {"kind", it.violation_kind}, {"detail", it.message}});
      }
    }
    items.push_back(std::move(j));
  }
  return Json{{"schema", 1},
              {"command", report.command},
              {"selector", report.selector},
              {"config", report.config},
              {"items", std::move(items)},
              {"violations", std::move(violations)},
              {"summary",
               {{"total", report.items.size()},
                {"passed", counts[0]},
                {"failed", counts[1]},
                {"skipped", counts[2]},
                {"errors", counts[3]}}},
              {"exit_code", exit_code(report)}};
}

namespace {

std::string cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_markdown(Report const& report) {
  std::ostringstream md;
  md << "# fusionkit " << report.command;
  if (!report.selector.empty()) md << " " << report.selector;
  md << "\n\nschema 1, exit code " << exit_code(report) << "\n\n";
  md << "| item | status | notes |\n|---|---|---|\n";
  for (auto const& it : report.items) {
    std::string note = it.message;
    if (it.status == ItemStatus::fail) note = it.violation_kind + (note.empty() ? "" : ": " + note);
    md << "| `" << cell(it.item) << "` | " << to_string(it.status) << " | " << cell(note) << " |\n";
  }
  for (auto const& it : report.items) {
    md << "\n## " << it.item << "\n\n";
    if (!it.message.empty()) md << it.message << "\n\n";
    for (auto const& c : it.checks) {
      md << "- **" << to_string(c.status) << "** " << c.name;
      if (!c.detail.empty()) md << ": " << c.detail;
      md << "\n";
    }
    if (!it.data.empty()) md << "\n```json\n" << it.data.dump(2) << "\n```\n";
  }
  md << "\n## config\n\n```json\n" << report.config.dump(2) << "\n```\n";
  return md.str();
}

int exit_code(Report const& report) {
  bool error = false;
  for (auto const& it : report.items) {
    if (it.status == ItemStatus::fail) return 1;
    if (it.status == ItemStatus::error) error = true;
  }
  return error ? 2 : 0;
}

}  // namespace fusionkit::cli
