#include "wreath/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace wreath {

void Report::append(const Report& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

bool Report::passed() const {
  return std::none_of(items_.begin(), items_.end(),
                      [](const ReportItem& i) { return i.status == Status::kFail; });
}

const ReportItem* Report::first_failure() const {
  for (const auto& item : items_) {
    if (item.status == Status::kFail) return &item;
  }
  return nullptr;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkip: return "skip";
  }
  return "?";
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& item : report.items()) {
    nlohmann::ordered_json j;
    j["claim"] = item.claim;
    j["universe"] = item.universe;
    j["status"] = to_string(item.status);
    j["checked"] = item.checked;
    if (!item.witness.empty()) j["witness"] = item.witness;
    items.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["passed"] = report.passed();
  out["items"] = std::move(items);
  return out;
}

void print_table(std::ostream& os, const Report& report) {
  std::size_t width = 5;
  for (const auto& item : report.items()) width = std::max(width, item.claim.size());
  for (const auto& item : report.items()) {
    os << std::left << std::setw(static_cast<int>(width)) << item.claim << "  "
       << std::setw(4) << to_string(item.status) << "  " << std::right << std::setw(8)
       << item.checked << "  " << item.universe;
    if (!item.witness.empty()) os << "  witness: " << item.witness;
    os << '\n';
  }
  os << (report.passed() ? "PASSED" : "FAILED") << '\n';
}

}  // namespace wreath
