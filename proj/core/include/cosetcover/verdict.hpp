#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cosetcover {

enum class Outcome { confirmed, vacuous, counterexample };

std::string_view to_string(Outcome o);

/// Result of checking one implication "hypotheses => conclusion" on one
/// concrete instance. The outcome is derived from the two flags: vacuous when
/// the hypotheses fail, counterexample when they hold and the conclusion
/// does not.
struct Verdict {
  std::string check;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  Outcome outcome = Outcome::vacuous;
  std::string detail;
  std::optional<std::string> witness;

  static Verdict make(std::string check, bool hypotheses, bool conclusion, std::string detail = {},
                      std::optional<std::string> witness = std::nullopt);
};

/// All checks produced for one statement on one instance.
struct Report {
  std::string statement;
  std::vector<Verdict> checks;

  /// counterexample if any check is one; otherwise confirmed if any check is;
  /// otherwise vacuous.
  Outcome overall() const;
  std::size_t count(Outcome o) const;
};

}  // namespace cosetcover
