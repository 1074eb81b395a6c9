#pragma once

#include "gssc/scf.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gssc {

/// How a trace step is justified.
///  - Initial: start of a chain; no relation to the previous step is claimed.
///  - StpStep: one-coordinate move; non-manipulability must hold both ways
///    between the previous and current profile.
///  - UnmApplication: the profile has a common top equal to the outcome.
///  - Lemma1Ref / Lemma2Ref: the outcome lies in the step's claim set, by an
///    invocation of the tops-only / extension result certified elsewhere in
///    the run (Lemma2Ref moves ride on an exhaustively verified decisiveness
///    fact, so no pairwise condition is checked for them).
///  - Dichotomy: annotation step resolving which chain end pins the outcome;
///    the outcome must lie in the (singleton) claim set.
enum class StepTag { Initial, StpStep, UnmApplication, Lemma1Ref, Lemma2Ref, Dichotomy };

const char* to_string(StepTag tag);
std::optional<StepTag> step_tag_from_string(const std::string& s);

struct TraceStep {
  std::int64_t profile_index = 0;
  int outcome = 0;
  StepTag justification = StepTag::Initial;
  std::optional<int> changed_voter;  // set iff the step moved one coordinate
  std::vector<int> claim;            // allowed outcomes for Ref/Dichotomy steps
  std::string note;

  bool operator==(const TraceStep&) const = default;
};

enum class LemmaTag { TopsOnly, Extension, Contraction, Dictator };

const char* to_string(LemmaTag tag);
std::optional<LemmaTag> lemma_tag_from_string(const std::string& s);

/// A checkable replay of a proof: a sequence of profile evaluations in which
/// consecutive steps within a chain differ in at most one coordinate and
/// every step carries a locally verifiable justification.
struct ProofTrace {
  LemmaTag lemma = LemmaTag::TopsOnly;
  int m = 0, n = 0;
  std::map<std::string, std::string> params;  // roles: G, a, b, c, ...
  std::map<std::string, std::int64_t> marks;  // named step indices (y_k, z_N)
  std::vector<TraceStep> steps;
  std::string conclusion;

  bool operator==(const ProofTrace&) const = default;
};

struct TraceCheck {
  bool ok = true;
  std::int64_t failing_step = -1;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Independent certificate check: every outcome matches the table, chains
/// move one coordinate at a time, StpStep pairs satisfy non-manipulability in
/// both directions, UnmApplication profiles have a common top equal to their
/// outcome, and Ref/Dichotomy outcomes lie in their claim sets. Reports the
/// first failing step.
TraceCheck verify_trace(const ScfTable& f, const ProofTrace& t);

}  // namespace gssc
