#include "gssc/axioms.hpp"

#include "order_cache.hpp"

#include <stdexcept>

namespace gssc {

namespace {

using detail::OrderCache;

// Visits every profile whose voter-i digit ranges over cand[i] (each list
// ascending), in ascending profile-index order. fn returns true to stop.
template <typename Fn>
void for_each_combination(const ProfileSpace& space,
                          const std::vector<const std::vector<std::int64_t>*>& cand, Fn fn) {
  const int n = space.voters();
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::int64_t p = 0;
    for (int i = 0; i < n; ++i)
      p += (*cand[static_cast<std::size_t>(i)])[pos[static_cast<std::size_t>(i)]] *
           space.weight(i);
    if (fn(p)) return;
    int i = 0;
    while (i < n) {
      auto& cur = pos[static_cast<std::size_t>(i)];
      if (++cur < cand[static_cast<std::size_t>(i)]->size()) break;
      cur = 0;
      ++i;
    }
    if (i == n) return;
  }
}

void require_coalition(const ScfTable& f, const Coalition& g) {
  if (g.empty()) throw std::invalid_argument("empty coalition rejected");
  for (int v : g.members())
    if (v >= f.voters())
      throw std::invalid_argument("coalition member " + std::to_string(v) +
                                  " out of range [0," + std::to_string(f.voters()) + ")");
}

}  // namespace

std::string ManipulationWitness::to_string() const {
  return "profile=" + std::to_string(profile_index) + " voter=" + std::to_string(voter) +
         " misreport=" + std::to_string(misreport_order_index) +
         " sincere_outcome=" + std::to_string(sincere_outcome) +
         " manipulated_outcome=" + std::to_string(manipulated_outcome);
}

std::string UnanimityViolation::to_string() const {
  return "profile=" + std::to_string(profile_index) + " common_top=" +
         std::to_string(common_top) + " outcome=" + std::to_string(outcome);
}

std::string DecisivenessViolation::to_string() const {
  return "coalition=" + coalition.to_string() + " alternative=" + std::to_string(alternative) +
         " profile=" + std::to_string(profile_index) + " outcome=" + std::to_string(outcome);
}

std::optional<UnanimityViolation> check_unanimous(const ScfTable& f) {
  const OrderCache oc(f.alternatives());
  const ProfileSpace& space = f.space();
  std::optional<UnanimityViolation> best;
  for (int a = 0; a < f.alternatives(); ++a) {
    std::vector<const std::vector<std::int64_t>*> cand(
        static_cast<std::size_t>(f.voters()), &oc.by_top[static_cast<std::size_t>(a)]);
    for_each_combination(space, cand, [&](std::int64_t p) {
      const int w = f.winner_at(p);
      if (w != a) {
        if (!best || p < best->profile_index) best = UnanimityViolation{p, a, w};
        return true;  // first qualifying violation for a is its lowest
      }
      return false;
    });
  }
  return best;
}

bool is_manipulable_at(const ScfTable& f, const Profile& x, int voter,
                       const LinearOrder& misreport) {
  if (voter < 0 || voter >= f.voters())
    throw std::out_of_range("is_manipulable_at: voter out of range");
  const int sincere = scf_eval(f, x);
  const int manipulated = scf_eval(f, replace_coord(x, voter, misreport));
  if (sincere == manipulated) return false;
  return prefers(x.order_of(voter), manipulated, sincere);
}

std::optional<ManipulationWitness> find_manipulation(const ScfTable& f) {
  const OrderCache oc(f.alternatives());
  const ProfileSpace& space = f.space();
  const std::int64_t total = space.size();
  for (std::int64_t p = 0; p < total; ++p) {
    const int w = f.winner_at(p);
    for (int i = 0; i < f.voters(); ++i) {
      const std::int64_t k = space.digit(p, i);
      for (std::int64_t k2 = 0; k2 < oc.count; ++k2) {
        if (k2 == k) continue;
        const int v = f.winner_at(space.with_digit(p, i, k2));
        if (v != w && oc.prefers(k, v, w)) return ManipulationWitness{p, i, k2, w, v};
      }
    }
  }
  return std::nullopt;
}

std::optional<DecisivenessViolation> is_decisive_over(const ScfTable& f, const Coalition& g,
                                                      int alternative) {
  require_coalition(f, g);
  if (alternative < 0 || alternative >= f.alternatives())
    throw std::invalid_argument("is_decisive_over: alternative out of range");
  const OrderCache oc(f.alternatives());
  std::vector<std::int64_t> all(static_cast<std::size_t>(oc.count));
  for (std::int64_t k = 0; k < oc.count; ++k) all[static_cast<std::size_t>(k)] = k;
  std::vector<const std::vector<std::int64_t>*> cand;
  cand.reserve(static_cast<std::size_t>(f.voters()));
  for (int i = 0; i < f.voters(); ++i)
    cand.push_back(g.contains(i) ? &oc.by_top[static_cast<std::size_t>(alternative)] : &all);
  std::optional<DecisivenessViolation> found;
  for_each_combination(f.space(), cand, [&](std::int64_t p) {
    const int w = f.winner_at(p);
    if (w != alternative) {
      found = DecisivenessViolation{g, alternative, p, w};
      return true;
    }
    return false;
  });
  return found;
}

std::optional<DecisivenessViolation> find_decisiveness_violation(const ScfTable& f,
                                                                 const Coalition& g) {
  for (int a = 0; a < f.alternatives(); ++a)
    if (auto v = is_decisive_over(f, g, a)) return v;
  return std::nullopt;
}

bool is_decisive(const ScfTable& f, const Coalition& g) {
  return !find_decisiveness_violation(f, g).has_value();
}

std::optional<int> find_dictator_bruteforce(const ScfTable& f) {
  const OrderCache oc(f.alternatives());
  const ProfileSpace& space = f.space();
  std::vector<char> alive(static_cast<std::size_t>(f.voters()), 1);
  int alive_count = f.voters();
  const std::int64_t total = space.size();
  for (std::int64_t p = 0; p < total && alive_count > 0; ++p) {
    const int w = f.winner_at(p);
    for (int d = 0; d < f.voters(); ++d) {
      if (!alive[static_cast<std::size_t>(d)]) continue;
      if (oc.tops[static_cast<std::size_t>(space.digit(p, d))] != w) {
        alive[static_cast<std::size_t>(d)] = 0;
        --alive_count;
      }
    }
  }
  for (int d = 0; d < f.voters(); ++d)
    if (alive[static_cast<std::size_t>(d)]) return d;
  return std::nullopt;
}

bool validate(const ScfTable& f, const ManipulationWitness& w) {
  const ProfileSpace& space = f.space();
  if (w.profile_index < 0 || w.profile_index >= space.size()) return false;
  if (w.voter < 0 || w.voter >= f.voters()) return false;
  if (w.misreport_order_index < 0 || w.misreport_order_index >= space.order_count()) return false;
  const std::int64_t sincere_k = space.digit(w.profile_index, w.voter);
  const std::int64_t q = space.with_digit(w.profile_index, w.voter, w.misreport_order_index);
  if (q == w.profile_index) return false;
  if (f.winner_at(w.profile_index) != w.sincere_outcome) return false;
  if (f.winner_at(q) != w.manipulated_outcome) return false;
  if (w.sincere_outcome == w.manipulated_outcome) return false;
  const LinearOrder sincere = order_from_index(sincere_k, f.alternatives());
  return prefers(sincere, w.manipulated_outcome, w.sincere_outcome);
}

bool validate(const ScfTable& f, const UnanimityViolation& v) {
  const ProfileSpace& space = f.space();
  if (v.profile_index < 0 || v.profile_index >= space.size()) return false;
  if (v.common_top < 0 || v.common_top >= f.alternatives()) return false;
  for (int i = 0; i < f.voters(); ++i) {
    const LinearOrder o = order_from_index(space.digit(v.profile_index, i), f.alternatives());
    if (top(o) != v.common_top) return false;
  }
  return f.winner_at(v.profile_index) == v.outcome && v.outcome != v.common_top;
}

bool validate(const ScfTable& f, const DecisivenessViolation& v) {
  const ProfileSpace& space = f.space();
  if (v.coalition.empty()) return false;
  if (v.profile_index < 0 || v.profile_index >= space.size()) return false;
  if (v.alternative < 0 || v.alternative >= f.alternatives()) return false;
  for (int i : v.coalition.members()) {
    if (i >= f.voters()) return false;
    const LinearOrder o = order_from_index(space.digit(v.profile_index, i), f.alternatives());
    if (top(o) != v.alternative) return false;
  }
  return f.winner_at(v.profile_index) == v.outcome && v.outcome != v.alternative;
}

}  // namespace gssc
