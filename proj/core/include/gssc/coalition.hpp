#pragma once

#include <string>
#include <vector>

namespace gssc {

/// A set of voter ids. May be any subset of the electorate, contiguous or
/// not; stored sorted and duplicate-free.
class Coalition {
public:
  Coalition() = default;
  explicit Coalition(std::vector<int> members);

  /// The full electorate {0, ..., n-1}.
  static Coalition full(int n);

  bool contains(int voter) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  int min_member() const;
  Coalition without(int voter) const;
  const std::vector<int>& members() const { return members_; }

  /// "{0,2,5}"
  std::string to_string() const;

  bool operator==(const Coalition&) const = default;

private:
  std::vector<int> members_;
};

}  // namespace gssc
