#include "herglotz/verdict.hpp"

namespace herglotz {

std::string_view outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::Accept: return "accept";
    case Outcome::Reject: return "reject";
    case Outcome::Undecided: return "undecided";
    case Outcome::Consistent: return "consistent";
  }
  return "unknown";
}

const Check* Verdict::first_failure() const {
  for (const auto& c : checks)
    if (c.failed()) return &c;
  return nullptr;
}

const Check* Verdict::find(std::string_view condition) const {
  for (const auto& c : checks)
    if (c.condition == condition) return &c;
  return nullptr;
}

Verdict& Verdict::settle() {
  bool undecided = false;
  for (const auto& c : checks) {
    if (c.failed()) {
      outcome = Outcome::Reject;
      return *this;
    }
    undecided |= c.undecided();
  }
  outcome = undecided ? Outcome::Undecided : Outcome::Accept;
  return *this;
}

}  // namespace herglotz
