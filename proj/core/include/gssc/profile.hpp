#pragma once

#include "gssc/order.hpp"

#include <cstdint>
#include <vector>

namespace gssc {

/// One linear order per voter, indexed 0..n-1.
class Profile {
public:
  explicit Profile(std::vector<LinearOrder> orders);

  int voters() const { return static_cast<int>(orders_.size()); }
  int alternatives() const { return orders_.front().size(); }
  const LinearOrder& order_of(int voter) const;
  const std::vector<LinearOrder>& orders() const { return orders_; }

  bool operator==(const Profile&) const = default;

private:
  std::vector<LinearOrder> orders_;
};

/// Mixed-radix encoding, base m!, voter 0 least significant:
/// index = sum_i order_index(x_i) * (m!)^i.
std::int64_t profile_index(const Profile& x);

/// Inverse of profile_index. Throws std::out_of_range unless 0 <= k < (m!)^n.
Profile profile_from_index(std::int64_t k, int m, int n);

/// x with coordinate `voter` replaced by o; all other coordinates identical.
Profile replace_coord(const Profile& x, int voter, LinearOrder o);

/// Mixed-radix arithmetic over profile indices. Shared plumbing for the
/// definitional checkers and the search; avoids materializing Profile
/// objects in exhaustive scans.
class ProfileSpace {
public:
  ProfileSpace(int m, int n);

  int alternatives() const { return m_; }
  int voters() const { return n_; }
  std::int64_t order_count() const { return order_count_; }
  std::int64_t size() const { return size_; }

  /// order_index of voter's coordinate within profile p.
  std::int64_t digit(std::int64_t p, int voter) const {
    return (p / pow_[static_cast<std::size_t>(voter)]) % order_count_;
  }
  /// Profile index with voter's coordinate replaced by order index k.
  std::int64_t with_digit(std::int64_t p, int voter, std::int64_t k) const {
    return p + (k - digit(p, voter)) * pow_[static_cast<std::size_t>(voter)];
  }
  /// (m!)^voter, the weight of the voter's digit.
  std::int64_t weight(int voter) const { return pow_[static_cast<std::size_t>(voter)]; }

  bool operator==(const ProfileSpace& other) const {
    return m_ == other.m_ && n_ == other.n_;
  }

private:
  int m_, n_;
  std::int64_t order_count_, size_;
  std::vector<std::int64_t> pow_;
};

}  // namespace gssc
