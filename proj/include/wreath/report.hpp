#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace wreath {

enum class Status { kPass, kFail, kSkip };

/// One checked claim. A failing item always carries a witness.
struct ReportItem {
  std::string claim;
  std::string universe;
  Status status = Status::kPass;
  std::string witness;
  std::uint64_t checked = 0;
};

/// Ordered list of checked claims; used both for ring validation and for the
/// lemma verifiers.
class Report {
 public:
  void add(ReportItem item) { items_.push_back(std::move(item)); }
  void append(const Report& other);

  /// True iff no item failed. Skipped items do not fail a report.
  bool passed() const;

  const std::vector<ReportItem>& items() const { return items_; }
  const ReportItem* first_failure() const;

 private:
  std::vector<ReportItem> items_;
};

std::string to_string(Status status);

nlohmann::ordered_json to_json(const Report& report);
void print_table(std::ostream& os, const Report& report);

}  // namespace wreath
