#include "gssc/rules.hpp"

#include "order_cache.hpp"

#include <random>
#include <stdexcept>

namespace gssc {

namespace {

using detail::OrderCache;

template <typename WinnerFn>
ScfTable fill_table(int m, int n, std::int64_t size_guard, WinnerFn winner) {
  const std::int64_t total = table_size_or_throw(m, n, size_guard);
  const OrderCache oc(m);
  const ProfileSpace space(m, n);
  std::vector<std::uint8_t> winners(static_cast<std::size_t>(total));
  std::vector<std::int64_t> digits(static_cast<std::size_t>(n));
  for (std::int64_t p = 0; p < total; ++p) {
    for (int i = 0; i < n; ++i) digits[static_cast<std::size_t>(i)] = space.digit(p, i);
    winners[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(winner(oc, digits));
  }
  return ScfTable(m, n, std::move(winners), size_guard);
}

int argmax_smallest(const std::vector<int>& score) {
  int best = 0;
  for (int a = 1; a < static_cast<int>(score.size()); ++a)
    if (score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(best)]) best = a;
  return best;
}

}  // namespace

ScfTable dictatorship_table(int m, int n, int dictator, std::int64_t size_guard) {
  if (dictator < 0 || dictator >= n)
    throw std::invalid_argument("dictatorship_table: dictator out of range");
  return fill_table(m, n, size_guard,
                    [dictator](const OrderCache& oc, const std::vector<std::int64_t>& digits) {
                      return oc.tops[static_cast<std::size_t>(
                          digits[static_cast<std::size_t>(dictator)])];
                    });
}

ScfTable constant_table(int m, int n, int alternative, std::int64_t size_guard) {
  if (alternative < 0 || alternative >= m)
    throw std::invalid_argument("constant_table: alternative out of range");
  const std::int64_t total = table_size_or_throw(m, n, size_guard);
  return ScfTable(m, n,
                  std::vector<std::uint8_t>(static_cast<std::size_t>(total),
                                            static_cast<std::uint8_t>(alternative)),
                  size_guard);
}

ScfTable plurality_table(int m, int n, std::int64_t size_guard) {
  return fill_table(m, n, size_guard,
                    [m](const OrderCache& oc, const std::vector<std::int64_t>& digits) {
                      std::vector<int> firsts(static_cast<std::size_t>(m), 0);
                      for (std::int64_t k : digits)
                        ++firsts[static_cast<std::size_t>(oc.tops[static_cast<std::size_t>(k)])];
                      return argmax_smallest(firsts);
                    });
}

ScfTable borda_table(int m, int n, std::int64_t size_guard) {
  return fill_table(m, n, size_guard,
                    [m](const OrderCache& oc, const std::vector<std::int64_t>& digits) {
                      std::vector<int> score(static_cast<std::size_t>(m), 0);
                      for (std::int64_t k : digits) {
                        const LinearOrder& o = oc.orders[static_cast<std::size_t>(k)];
                        for (int a = 0; a < m; ++a)
                          score[static_cast<std::size_t>(a)] += m - 1 - o.rank_of(a);
                      }
                      return argmax_smallest(score);
                    });
}

ScfTable random_table(int m, int n, std::uint64_t seed, std::int64_t size_guard) {
  const std::int64_t total = table_size_or_throw(m, n, size_guard);
  std::mt19937_64 engine(seed);
  std::vector<std::uint8_t> winners(static_cast<std::size_t>(total));
  for (auto& w : winners)
    w = static_cast<std::uint8_t>(engine() % static_cast<std::uint64_t>(m));
  return ScfTable(m, n, std::move(winners), size_guard);
}

ScfTable build_table(const RuleSpec& spec, std::int64_t size_guard) {
  switch (spec.kind) {
    case RuleKind::Dictatorship: return dictatorship_table(spec.m, spec.n, spec.param, size_guard);
    case RuleKind::Constant: return constant_table(spec.m, spec.n, spec.param, size_guard);
    case RuleKind::Plurality: return plurality_table(spec.m, spec.n, size_guard);
    case RuleKind::Borda: return borda_table(spec.m, spec.n, size_guard);
  }
  throw std::invalid_argument("build_table: unknown rule kind");
}

}  // namespace gssc
