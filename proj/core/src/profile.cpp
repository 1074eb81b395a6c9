#include "gssc/profile.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace gssc {

Profile::Profile(std::vector<LinearOrder> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw std::invalid_argument("Profile: no voters");
  const int m = orders_.front().size();
  for (const auto& o : orders_)
    if (o.size() != m)
      throw std::invalid_argument("Profile: orders over different alternative sets");
}

const LinearOrder& Profile::order_of(int voter) const {
  if (voter < 0 || voter >= voters())
    throw std::out_of_range("Profile::order_of: voter " + std::to_string(voter) +
                            " out of range [0," + std::to_string(voters()) + ")");
  return orders_[static_cast<std::size_t>(voter)];
}

std::int64_t profile_index(const Profile& x) {
  const std::int64_t ofac = factorial(x.alternatives());
  std::int64_t idx = 0;
  std::int64_t w = 1;
  for (int i = 0; i < x.voters(); ++i) {
    idx += order_index(x.order_of(i)) * w;
    w *= ofac;
  }
  return idx;
}

Profile profile_from_index(std::int64_t k, int m, int n) {
  ProfileSpace space(m, n);
  if (k < 0 || k >= space.size())
    throw std::out_of_range("profile_from_index: index " + std::to_string(k) +
                            " outside [0," + std::to_string(space.size()) + ")");
  std::vector<LinearOrder> orders;
  orders.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) orders.push_back(order_from_index(space.digit(k, i), m));
  return Profile(std::move(orders));
}

Profile replace_coord(const Profile& x, int voter, LinearOrder o) {
  if (voter < 0 || voter >= x.voters())
    throw std::out_of_range("replace_coord: voter " + std::to_string(voter) +
                            " out of range [0," + std::to_string(x.voters()) + ")");
  if (o.size() != x.alternatives())
    throw std::invalid_argument("replace_coord: order over a different alternative set");
  std::vector<LinearOrder> orders = x.orders();
  orders[static_cast<std::size_t>(voter)] = std::move(o);
  return Profile(std::move(orders));
}

ProfileSpace::ProfileSpace(int m, int n) : m_(m), n_(n) {
  if (m < 1) throw std::invalid_argument("ProfileSpace: m < 1");
  if (n < 1) throw std::invalid_argument("ProfileSpace: n < 1");
  order_count_ = factorial(m);
  pow_.resize(static_cast<std::size_t>(n));
  std::int64_t w = 1;
  for (int i = 0; i < n; ++i) {
    pow_[static_cast<std::size_t>(i)] = w;
    if (w > std::numeric_limits<std::int64_t>::max() / order_count_)
      throw std::invalid_argument("ProfileSpace: (m!)^n exceeds 64 bits");
    w *= order_count_;
  }
  size_ = w;
}

}  // namespace gssc
