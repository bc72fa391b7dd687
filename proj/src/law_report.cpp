#include "wdl/law_report.hpp"

#include <algorithm>

namespace wdl {

std::string_view to_string(LawStatus status) {
  switch (status) {
    case LawStatus::Pass: return "pass";
    case LawStatus::Fail: return "fail";
    case LawStatus::Finding: return "finding";
  }
  return "fail";
}

void LawReport::pass(std::string id, std::string note) {
  add({std::move(id), LawStatus::Pass, {}, std::move(note)});
}

void LawReport::fail(std::string id, std::vector<std::string> witness, std::string note) {
  add({std::move(id), LawStatus::Fail, std::move(witness), std::move(note)});
}

void LawReport::finding(std::string id, std::vector<std::string> witness, std::string note) {
  add({std::move(id), LawStatus::Finding, std::move(witness), std::move(note)});
}

void LawReport::check(std::string id, std::vector<std::string> witness, std::string note) {
  const auto status = witness.empty() ? LawStatus::Pass : LawStatus::Fail;
  add({std::move(id), status, std::move(witness), std::move(note)});
}

void LawReport::append(const LawReport& other, const std::string& prefix) {
  for (auto r : other.results_) {
    r.id = prefix + r.id;
    results_.push_back(std::move(r));
  }
}

const LawResult* LawReport::find(std::string_view id) const {
  auto it = std::find_if(results_.begin(), results_.end(),
                         [&](const LawResult& r) { return r.id == id; });
  return it == results_.end() ? nullptr : &*it;
}

bool LawReport::passed(std::string_view id) const {
  const auto* r = find(id);
  return r != nullptr && r->status == LawStatus::Pass;
}

std::size_t LawReport::count(LawStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      results_.begin(), results_.end(), [&](const LawResult& r) { return r.status == status; }));
}

}  // namespace wdl
