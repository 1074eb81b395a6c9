#include "gssc/order.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

namespace gssc {

std::int64_t factorial(int m) {
  if (m < 0) throw std::invalid_argument("factorial: negative argument");
  if (m > 20) throw std::invalid_argument("factorial: result exceeds 64 bits");
  std::int64_t r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

LinearOrder::LinearOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
  const int m = static_cast<int>(ranking_.size());
  if (m < 1) throw std::invalid_argument("LinearOrder: empty ranking");
  rank_.assign(m, -1);
  for (int pos = 0; pos < m; ++pos) {
    const int a = ranking_[pos];
    if (a < 0 || a >= m)
      throw std::invalid_argument("LinearOrder: alternative " + std::to_string(a) +
                                  " out of range [0," + std::to_string(m) + ")");
    if (rank_[a] != -1)
      throw std::invalid_argument("LinearOrder: alternative " + std::to_string(a) +
                                  " appears twice");
    rank_[a] = pos;
  }
}

int LinearOrder::at(int position) const {
  if (position < 0 || position >= size())
    throw std::out_of_range("LinearOrder::at: position out of range");
  return ranking_[position];
}

int LinearOrder::rank_of(int alternative) const {
  if (alternative < 0 || alternative >= size())
    throw std::out_of_range("LinearOrder::rank_of: alternative out of range");
  return rank_[alternative];
}

int top(const LinearOrder& o) { return o.at(0); }

bool prefers(const LinearOrder& o, int a, int b) {
  if (a == b)
    throw std::invalid_argument("prefers: a == b (asymmetry: a above a is meaningless)");
  return o.rank_of(a) < o.rank_of(b);
}

LinearOrder move_to_top(const LinearOrder& o, int a) {
  if (a < 0 || a >= o.size()) throw std::out_of_range("move_to_top: alternative out of range");
  std::vector<int> r;
  r.reserve(o.size());
  r.push_back(a);
  for (int x : o.ranking())
    if (x != a) r.push_back(x);
  return LinearOrder(std::move(r));
}

LinearOrder swap_pair(const LinearOrder& o, int a, int b) {
  if (a == b) throw std::invalid_argument("swap_pair: a == b");
  const int pa = o.rank_of(a);
  const int pb = o.rank_of(b);
  std::vector<int> r = o.ranking();
  std::swap(r[pa], r[pb]);
  return LinearOrder(std::move(r));
}

std::int64_t order_index(const LinearOrder& o) {
  const int m = o.size();
  const auto& r = o.ranking();
  std::int64_t idx = 0;
  std::int64_t place = factorial(m - 1);
  for (int i = 0; i < m - 1; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < m; ++j)
      if (r[j] < r[i]) ++smaller_after;
    idx += smaller_after * place;
    place /= (m - 1 - i);
  }
  return idx;
}

LinearOrder order_from_index(std::int64_t k, int m) {
  if (m < 1) throw std::invalid_argument("order_from_index: m < 1");
  const std::int64_t total = factorial(m);
  if (k < 0 || k >= total)
    throw std::out_of_range("order_from_index: index " + std::to_string(k) +
                            " outside [0," + std::to_string(total) + ")");
  std::vector<int> pool(m);
  for (int i = 0; i < m; ++i) pool[i] = i;
  std::vector<int> r;
  r.reserve(m);
  std::int64_t place = factorial(m - 1);
  for (int i = m - 1; i >= 0; --i) {
    const auto d = static_cast<std::size_t>(k / place);
    r.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    k %= place;
    if (i > 0) place /= i;
  }
  return LinearOrder(std::move(r));
}

Completion seeded_completion(std::uint64_t seed) {
  auto engine = std::make_shared<std::mt19937_64>(seed);
  return [engine](std::vector<int> unused) {
    // Fisher-Yates with explicit modulo: stable across standard libraries.
    for (std::size_t i = unused.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>((*engine)() % i);
      std::swap(unused[i - 1], unused[j]);
    }
    return unused;
  };
}

LinearOrder make_order(int m, std::span<const int> prefix,
                       std::span<const int> suffix, const Completion& fill) {
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  auto take = [&](int a) {
    if (a < 0 || a >= m) throw std::invalid_argument("make_order: alternative out of range");
    if (used[static_cast<std::size_t>(a)])
      throw std::invalid_argument("make_order: alternative " + std::to_string(a) + " repeated");
    used[static_cast<std::size_t>(a)] = 1;
  };
  for (int a : prefix) take(a);
  for (int a : suffix) take(a);
  std::vector<int> gap;
  for (int a = 0; a < m; ++a)
    if (!used[static_cast<std::size_t>(a)]) gap.push_back(a);
  if (fill) {
    gap = fill(std::move(gap));
  }
  std::vector<int> r(prefix.begin(), prefix.end());
  r.insert(r.end(), gap.begin(), gap.end());
  r.insert(r.end(), suffix.begin(), suffix.end());
  return LinearOrder(std::move(r));
}

}  // namespace gssc
