#pragma once

#include "gssc/scf.hpp"

#include <cstdint>

namespace gssc {

enum class RuleKind { Dictatorship, Constant, Plurality, Borda };

/// Recipe for a concrete table. `param` is the dictator voter for
/// Dictatorship and the fixed alternative for Constant; ignored otherwise.
struct RuleSpec {
  RuleKind kind = RuleKind::Dictatorship;
  int m = 3;
  int n = 2;
  int param = 0;
};

/// Builds the full winner table for the rule. Score rules break ties by
/// smallest alternative id, so every table is single-valued.
ScfTable build_table(const RuleSpec& spec, std::int64_t size_guard = kDefaultSizeGuard);

ScfTable dictatorship_table(int m, int n, int dictator,
                            std::int64_t size_guard = kDefaultSizeGuard);
ScfTable constant_table(int m, int n, int alternative,
                        std::int64_t size_guard = kDefaultSizeGuard);
ScfTable plurality_table(int m, int n, std::int64_t size_guard = kDefaultSizeGuard);
ScfTable borda_table(int m, int n, std::int64_t size_guard = kDefaultSizeGuard);

/// Uniform random winner per profile from a fixed seed; for fuzzing the
/// witness finders. Deterministic across platforms.
ScfTable random_table(int m, int n, std::uint64_t seed,
                      std::int64_t size_guard = kDefaultSizeGuard);

}  // namespace gssc
