#include "cosetcover/verdict.hpp"

#include <algorithm>

namespace cosetcover {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::confirmed:
      return "confirmed";
    case Outcome::vacuous:
      return "vacuous";
    case Outcome::counterexample:
      return "COUNTEREXAMPLE";
  }
  return "?";
}

Verdict Verdict::make(std::string check, bool hypotheses, bool conclusion, std::string detail,
                      std::optional<std::string> witness) {
  Verdict v;
  v.check = std::move(check);
  v.hypotheses_hold = hypotheses;
  v.conclusion_holds = conclusion;
  v.outcome = !hypotheses ? Outcome::vacuous : (conclusion ? Outcome::confirmed : Outcome::counterexample);
  v.detail = std::move(detail);
  v.witness = std::move(witness);
  return v;
}

Outcome Report::overall() const {
  if (count(Outcome::counterexample) > 0) return Outcome::counterexample;
  if (count(Outcome::confirmed) > 0) return Outcome::confirmed;
  return Outcome::vacuous;
}

std::size_t Report::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [o](const Verdict& v) { return v.outcome == o; }));
}

}  // namespace cosetcover
