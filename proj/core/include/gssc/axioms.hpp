#pragma once

#include "gssc/coalition.hpp"
#include "gssc/scf.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace gssc {

/// A falsifying certificate for strategy-proofness: at the profile, the
/// voter's misreport produces an outcome the voter sincerely prefers.
struct ManipulationWitness {
  std::int64_t profile_index = 0;
  int voter = 0;
  std::int64_t misreport_order_index = 0;
  int sincere_outcome = 0;
  int manipulated_outcome = 0;

  std::string to_string() const;
  bool operator==(const ManipulationWitness&) const = default;
};

/// A profile where every voter tops the same alternative yet the table
/// selects something else.
struct UnanimityViolation {
  std::int64_t profile_index = 0;
  int common_top = 0;
  int outcome = 0;

  std::string to_string() const;
  bool operator==(const UnanimityViolation&) const = default;
};

/// A profile where the alternative tops every coalition member's order yet
/// the table selects something else.
struct DecisivenessViolation {
  Coalition coalition;
  int alternative = 0;
  std::int64_t profile_index = 0;
  int outcome = 0;

  std::string to_string() const;
  bool operator==(const DecisivenessViolation&) const = default;
};

/// Empty iff the full electorate is decisive: wherever all tops agree, the
/// common top wins. Otherwise the violation with the lowest profile index.
std::optional<UnanimityViolation> check_unanimous(const ScfTable& f);

/// True iff the misreported outcome beats the sincere outcome under the
/// voter's sincere order x_i.
bool is_manipulable_at(const ScfTable& f, const Profile& x, int voter,
                       const LinearOrder& misreport);

/// Empty iff f is strategy-proof. Otherwise the witness with the smallest
/// (profile_index, voter, misreport_order_index) triple, scanned exhaustively.
std::optional<ManipulationWitness> find_manipulation(const ScfTable& f);

/// Empty iff f(x) = a on every profile where a tops each member of g.
/// Scans only the qualifying profiles, in ascending index order.
std::optional<DecisivenessViolation> is_decisive_over(const ScfTable& f, const Coalition& g,
                                                      int alternative);

/// First is_decisive_over violation across alternatives in ascending order.
std::optional<DecisivenessViolation> find_decisiveness_violation(const ScfTable& f,
                                                                 const Coalition& g);

/// True iff g is decisive over every alternative.
bool is_decisive(const ScfTable& f, const Coalition& g);

/// The unique voter d with f(x) = top(x_d) everywhere, if one exists.
std::optional<int> find_dictator_bruteforce(const ScfTable& f);

/// Re-check each witness against its defining predicate.
bool validate(const ScfTable& f, const ManipulationWitness& w);
bool validate(const ScfTable& f, const UnanimityViolation& v);
bool validate(const ScfTable& f, const DecisivenessViolation& v);

}  // namespace gssc
