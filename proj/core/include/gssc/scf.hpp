#pragma once

#include "gssc/profile.hpp"

#include <cstdint>
#include <vector>

namespace gssc {

/// Tables larger than this are rejected at construction. Keeps every
/// exhaustive operation desk-scale; (m,n)=(3,9) still fits.
inline constexpr std::int64_t kDefaultSizeGuard = std::int64_t{1} << 24;

/// Checked (m!)^n. Requires m >= 3, n >= 1 and the result within the guard.
std::int64_t table_size_or_throw(int m, int n, std::int64_t size_guard = kDefaultSizeGuard);

/// A total social choice function as a winner table indexed by profile
/// index. Immutable after construction, safe to share across threads.
class ScfTable {
public:
  ScfTable(int m, int n, std::vector<std::uint8_t> winners,
           std::int64_t size_guard = kDefaultSizeGuard);

  int alternatives() const { return m_; }
  int voters() const { return n_; }
  std::int64_t size() const { return static_cast<std::int64_t>(winners_.size()); }
  const ProfileSpace& space() const { return space_; }

  int winner_at(std::int64_t profile_idx) const;
  const std::vector<std::uint8_t>& winners() const { return winners_; }

  bool operator==(const ScfTable& other) const {
    return m_ == other.m_ && n_ == other.n_ && winners_ == other.winners_;
  }

private:
  int m_, n_;
  ProfileSpace space_;
  std::vector<std::uint8_t> winners_;
};

/// table[profile_index(x)]. Rejects profiles with mismatched dimensions.
int scf_eval(const ScfTable& f, const Profile& x);

}  // namespace gssc
