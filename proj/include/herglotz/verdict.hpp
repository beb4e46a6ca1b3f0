#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace herglotz {

enum class Outcome { Accept, Reject, Undecided, Consistent };

std::string_view outcome_name(Outcome o) noexcept;

/// One decided (or undecidable) condition. Index sets are 1-based and empty
/// for scalar conditions; the witness is an ordered list of named values.
struct Check {
  std::vector<int> index_set;
  std::string condition;
  std::string result;  // pass | fail | undecided | zero_minor | vacuous | not_applicable
  std::vector<std::pair<std::string, std::string>> witness;

  bool failed() const { return result == "fail"; }
  bool undecided() const { return result == "undecided"; }
};

struct Verdict {
  Outcome outcome = Outcome::Accept;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool accepted() const { return outcome == Outcome::Accept; }
  bool rejected() const { return outcome == Outcome::Reject; }
  /// First failing check, or nullptr.
  const Check* first_failure() const;
  /// First check with the given condition tag, or nullptr.
  const Check* find(std::string_view condition) const;

  void add(Check c) { checks.push_back(std::move(c)); }
  /// Reject if any check failed, else Undecided if any was undecided, else Accept.
  Verdict& settle();
};

}  // namespace herglotz
