#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace permuta {

struct ReportItem {
  std::string name;
  bool verdict = true;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

// One command's output. Text and JSON are both rendered from this value.
struct VerificationReport {
  int schema = 1;
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<ReportItem> items;
  bool informational = false;  // exit 0 regardless of verdict
  bool verdict = true;         // AND of item verdicts
  std::string summary;
  std::optional<double> wall_time;  // only with --timing

  void add(ReportItem item) {
    verdict = verdict && item.verdict;
    items.push_back(std::move(item));
  }
  int exit_code() const { return informational || verdict ? 0 : 2; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::ordered_json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::ordered_json& j);
std::string render_text(const VerificationReport& r);

// Full command line (without the program name). Returns the exit status:
// 0 verdict true or informational, 2 verdict false, 1 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permuta
