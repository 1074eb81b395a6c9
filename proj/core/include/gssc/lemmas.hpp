#pragma once

#include "gssc/axioms.hpp"
#include "gssc/trace.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

namespace gssc {

/// Thrown when a lemma's stated premise fails its eager verification (for
/// example the coalition handed to the contraction step is not decisive).
/// Distinct from the witness branch: a failed premise makes no lemma claim.
class PremiseError : public std::runtime_error {
public:
  explicit PremiseError(const std::string& msg,
                        std::optional<DecisivenessViolation> violation = std::nullopt)
      : std::runtime_error(msg), violation_(std::move(violation)) {}

  const std::optional<DecisivenessViolation>& violation() const { return violation_; }

private:
  std::optional<DecisivenessViolation> violation_;
};

struct LemmaOptions {
  /// Skip the expensive premise scans (unanimity for the tops-only lemma,
  /// decisiveness for contraction). Used by the dictator extractor, whose
  /// final global validation backstops correctness.
  bool assume_premise = false;

  /// Fill policy for the "..." regions of constructed orders. Null keeps
  /// the canonical ascending completion. The lemma conclusions do not
  /// depend on the choice.
  Completion completion = {};
};

/// Role labels used by the contraction construction. Defaults follow the
/// smallest-id convention; any three distinct alternatives work.
struct ContractionRoles {
  int a = 0;
  int b = 1;
  int c = 2;
};

/// Conclusion branch of a lemma run: the certified claim plus its trace.
struct LemmaConclusion {
  ProofTrace trace;
  std::optional<int> outcome;          // tops-only: the established f(x)
  std::optional<Coalition> coalition;  // extension/contraction/dictator: decisive set
};

/// Either a certified conclusion or a falsifying witness discovered while
/// replaying the proof. Exactly one branch is populated.
class LemmaOutcome {
public:
  LemmaOutcome(LemmaConclusion c) : v_(std::move(c)) {}
  LemmaOutcome(ManipulationWitness w) : v_(std::move(w)) {}
  LemmaOutcome(UnanimityViolation w) : v_(std::move(w)) {}

  bool holds() const { return std::holds_alternative<LemmaConclusion>(v_); }
  const LemmaConclusion& conclusion() const { return std::get<LemmaConclusion>(v_); }

  bool is_manipulation() const { return std::holds_alternative<ManipulationWitness>(v_); }
  const ManipulationWitness& manipulation() const { return std::get<ManipulationWitness>(v_); }

  bool is_unanimity_violation() const { return std::holds_alternative<UnanimityViolation>(v_); }
  const UnanimityViolation& unanimity_violation() const {
    return std::get<UnanimityViolation>(v_);
  }

  /// Human-readable witness description; empty on the conclusion branch.
  std::string witness_string() const;

private:
  std::variant<LemmaConclusion, ManipulationWitness, UnanimityViolation> v_;
};

/// Splits the electorate into (voters topping a, voters topping b).
/// Requires every top to be in {a,b}; the offending voter is reported
/// otherwise.
std::pair<Coalition, Coalition> partition_by_top(const Profile& x, int a, int b);

/// Tops-only: when every voter tops a or b, the outcome is a or b.
/// Replays the two-block profile, the reversal chain, both replacement
/// chains and the dichotomy; any recorded contradiction of STP or UNM
/// surfaces as the witness branch instead.
LemmaOutcome lemma_tops_only(const ScfTable& f, const Profile& x, int a, int b,
                             const LemmaOptions& options = {});

/// Extension: a tops every member of g and bottoms every outsider at x, and
/// f(x) = a; then g is decisive. Certifies decisiveness over a by chain +
/// exhaustive scan, then promotes to every other alternative through the
/// swap-chain construction.
LemmaOutcome lemma_extension(const ScfTable& f, const Coalition& g, const Profile& x, int a,
                             const LemmaOptions& options = {});

/// Weaker extension: a coalition decisive over one alternative is decisive.
/// The premise is verified by exhaustive scan unless assumed.
LemmaOutcome decisive_over_implies_decisive(const ScfTable& f, const Coalition& g, int a,
                                            const LemmaOptions& options = {});

/// Contraction: a decisive coalition of size >= 2 contains a proper decisive
/// subset. Returns the subset with its certificate, or a witness.
LemmaOutcome lemma_contraction(const ScfTable& f, const Coalition& g,
                               const LemmaOptions& options = {},
                               const ContractionRoles& roles = {});

/// Repeated contraction from the full electorate down to a single voter,
/// followed by a global validation of the dictatorship. The conclusion
/// carries the dictator as a singleton coalition; any failure along the way
/// surfaces as a validated witness.
LemmaOutcome find_dictator_via_proof(const ScfTable& f, const LemmaOptions& options = {});

}  // namespace gssc
