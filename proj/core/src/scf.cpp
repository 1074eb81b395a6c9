#include "gssc/scf.hpp"

#include <stdexcept>
#include <string>

namespace gssc {

std::int64_t table_size_or_throw(int m, int n, std::int64_t size_guard) {
  if (m < 3)
    throw std::invalid_argument("social choice workspace requires at least 3 alternatives");
  if (n < 1) throw std::invalid_argument("at least one voter required");
  const ProfileSpace space(m, n);
  if (space.size() > size_guard)
    throw std::invalid_argument("table size (m!)^n = " + std::to_string(space.size()) +
                                " exceeds the size guard " + std::to_string(size_guard));
  return space.size();
}

ScfTable::ScfTable(int m, int n, std::vector<std::uint8_t> winners, std::int64_t size_guard)
    : m_(m), n_(n), space_((table_size_or_throw(m, n, size_guard), m), n),
      winners_(std::move(winners)) {
  if (static_cast<std::int64_t>(winners_.size()) != space_.size())
    throw std::invalid_argument("ScfTable: expected " + std::to_string(space_.size()) +
                                " entries, got " + std::to_string(winners_.size()));
  for (std::uint8_t w : winners_)
    if (w >= m_)
      throw std::invalid_argument("ScfTable: winner " + std::to_string(int(w)) +
                                  " out of range [0," + std::to_string(m_) + ")");
}

int ScfTable::winner_at(std::int64_t profile_idx) const {
  if (profile_idx < 0 || profile_idx >= size())
    throw std::out_of_range("ScfTable::winner_at: profile index out of range");
  return winners_[static_cast<std::size_t>(profile_idx)];
}

int scf_eval(const ScfTable& f, const Profile& x) {
  if (x.voters() != f.voters() || x.alternatives() != f.alternatives())
    throw std::invalid_argument("scf_eval: profile dimensions do not match the table");
  return f.winner_at(profile_index(x));
}

}  // namespace gssc
