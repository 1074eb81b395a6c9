#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gssc {

/// m! for small m; throws std::invalid_argument when the result would
/// not fit in a signed 64-bit integer.
std::int64_t factorial(int m);

/// A strict linear order over the alternatives 0..m-1, stored top-first.
/// Completeness, transitivity and asymmetry hold structurally because the
/// representation is a permutation together with its inverse.
class LinearOrder {
public:
  /// ranking[0] is the top alternative, ranking[m-1] the bottom.
  explicit LinearOrder(std::vector<int> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  int at(int position) const;
  int rank_of(int alternative) const;
  const std::vector<int>& ranking() const { return ranking_; }

  bool operator==(const LinearOrder&) const = default;

private:
  std::vector<int> ranking_;  // position -> alternative
  std::vector<int> rank_;     // alternative -> position
};

/// The top-ranked alternative of o.
int top(const LinearOrder& o);

/// True iff a is ranked above b. Rejects a == b: asymmetry makes the
/// comparison of an alternative with itself meaningless.
bool prefers(const LinearOrder& o, int a, int b);

/// a moved to the top; the relative order of everything else is kept.
LinearOrder move_to_top(const LinearOrder& o, int a);

/// Positions of a and b exchanged; everything else is fixed. An involution.
LinearOrder swap_pair(const LinearOrder& o, int a, int b);

/// Lexicographic (Lehmer) rank of the top-first ranking in [0, m!).
std::int64_t order_index(const LinearOrder& o);

/// Inverse of order_index. Throws std::out_of_range unless 0 <= k < m!.
LinearOrder order_from_index(std::int64_t k, int m);

/// Fill policy for the unconstrained region of a templated order: receives
/// the unused alternatives in ascending id order and returns them in the
/// order they should appear. A null policy keeps the ascending order.
using Completion = std::function<std::vector<int>(std::vector<int>)>;

/// A deterministic pseudo-random completion; distinct calls on the same
/// policy reshuffle, so repeated template fills vary while staying
/// reproducible for a fixed seed.
Completion seeded_completion(std::uint64_t seed);

/// Order with the given prefix (top-down) and suffix (ending at the
/// bottom); the gap in between is filled by `fill`.
LinearOrder make_order(int m, std::span<const int> prefix,
                       std::span<const int> suffix, const Completion& fill = {});

}  // namespace gssc
