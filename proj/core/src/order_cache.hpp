#pragma once

#include "gssc/order.hpp"

#include <cstdint>
#include <vector>

namespace gssc::detail {

// Dense lookup tables over all m! orders; built once per scan and shared
// by the checkers, the lemma engine and the search.
struct OrderCache {
  explicit OrderCache(int m)
      : m(m), count(factorial(m)), prefers_(static_cast<std::size_t>(count) *
                                            static_cast<std::size_t>(m) *
                                            static_cast<std::size_t>(m)),
        by_top(static_cast<std::size_t>(m)) {
    orders.reserve(static_cast<std::size_t>(count));
    tops.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) {
      orders.push_back(order_from_index(k, m));
      const LinearOrder& o = orders.back();
      tops.push_back(top(o));
      by_top[static_cast<std::size_t>(top(o))].push_back(k);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (a != b) prefers_[flat(k, a, b)] = o.rank_of(a) < o.rank_of(b);
    }
  }

  bool prefers(std::int64_t k, int a, int b) const { return prefers_[flat(k, a, b)]; }

  int m;
  std::int64_t count;  // m!
  std::vector<LinearOrder> orders;
  std::vector<int> tops;
  std::vector<char> prefers_;
  std::vector<std::vector<std::int64_t>> by_top;  // ascending order indices per top

private:
  std::size_t flat(std::int64_t k, int a, int b) const {
    return (static_cast<std::size_t>(k) * static_cast<std::size_t>(m) +
            static_cast<std::size_t>(a)) *
               static_cast<std::size_t>(m) +
           static_cast<std::size_t>(b);
  }
};

}  // namespace gssc::detail
