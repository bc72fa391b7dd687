#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wdl {

/// `Finding` marks a documented disagreement between a published claim and
/// the computed truth; it never counts as a failure.
enum class LawStatus { Pass, Fail, Finding };

std::string_view to_string(LawStatus status);

struct LawResult {
  std::string id;
  LawStatus status = LawStatus::Pass;
  std::vector<std::string> witness;  // element names (or filter names) on failure
  std::string note;
};

/// Flat, ordered list of law outcomes.
class LawReport {
 public:
  void add(LawResult result) { results_.push_back(std::move(result)); }
  void pass(std::string id, std::string note = {});
  void fail(std::string id, std::vector<std::string> witness, std::string note = {});
  void finding(std::string id, std::vector<std::string> witness, std::string note);
  /// Pass when `witness` is empty, fail otherwise.
  void check(std::string id, std::vector<std::string> witness, std::string note = {});
  void append(const LawReport& other, const std::string& prefix = {});

  const std::vector<LawResult>& results() const noexcept { return results_; }
  const LawResult* find(std::string_view id) const;
  bool passed(std::string_view id) const;

  std::size_t count(LawStatus status) const;
  bool all_pass() const { return count(LawStatus::Fail) == 0; }
  std::size_t size() const noexcept { return results_.size(); }

 private:
  std::vector<LawResult> results_;
};

}  // namespace wdl
