#include "gssc/coalition.hpp"

#include <algorithm>
#include <stdexcept>

namespace gssc {

Coalition::Coalition(std::vector<int> members) : members_(std::move(members)) {
  for (int v : members_)
    if (v < 0) throw std::invalid_argument("Coalition: negative voter id");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Coalition Coalition::full(int n) {
  if (n < 1) throw std::invalid_argument("Coalition::full: n < 1");
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return Coalition(std::move(all));
}

bool Coalition::contains(int voter) const {
  return std::binary_search(members_.begin(), members_.end(), voter);
}

int Coalition::min_member() const {
  if (members_.empty()) throw std::logic_error("Coalition::min_member: empty coalition");
  return members_.front();
}

Coalition Coalition::without(int voter) const {
  std::vector<int> rest;
  rest.reserve(members_.size());
  for (int v : members_)
    if (v != voter) rest.push_back(v);
  return Coalition(std::move(rest));
}

std::string Coalition::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(members_[i]);
  }
  s += "}";
  return s;
}

}  // namespace gssc
