#include "gssc/trace.hpp"

#include <algorithm>

namespace gssc {

const char* to_string(StepTag tag) {
  switch (tag) {
    case StepTag::Initial: return "INITIAL";
    case StepTag::StpStep: return "STP_STEP";
    case StepTag::UnmApplication: return "UNM_APPLICATION";
    case StepTag::Lemma1Ref: return "LEMMA1_REF";
    case StepTag::Lemma2Ref: return "LEMMA2_REF";
    case StepTag::Dichotomy: return "DICHOTOMY";
  }
  return "?";
}

std::optional<StepTag> step_tag_from_string(const std::string& s) {
  for (StepTag t : {StepTag::Initial, StepTag::StpStep, StepTag::UnmApplication,
                    StepTag::Lemma1Ref, StepTag::Lemma2Ref, StepTag::Dichotomy})
    if (s == to_string(t)) return t;
  return std::nullopt;
}

const char* to_string(LemmaTag tag) {
  switch (tag) {
    case LemmaTag::TopsOnly: return "TOPS_ONLY";
    case LemmaTag::Extension: return "EXTENSION";
    case LemmaTag::Contraction: return "CONTRACTION";
    case LemmaTag::Dictator: return "DICTATOR";
  }
  return "?";
}

std::optional<LemmaTag> lemma_tag_from_string(const std::string& s) {
  for (LemmaTag t :
       {LemmaTag::TopsOnly, LemmaTag::Extension, LemmaTag::Contraction, LemmaTag::Dictator})
    if (s == to_string(t)) return t;
  return std::nullopt;
}

namespace {

TraceCheck fail(std::int64_t step, std::string reason) {
  return TraceCheck{false, step, std::move(reason)};
}

}  // namespace

TraceCheck verify_trace(const ScfTable& f, const ProofTrace& t) {
  if (t.steps.empty()) return fail(-1, "trace has no steps");
  if (t.m != f.alternatives() || t.n != f.voters())
    return fail(-1, "trace dimensions (" + std::to_string(t.m) + "," + std::to_string(t.n) +
                        ") do not match the table");
  const ProfileSpace& space = f.space();
  const int m = f.alternatives();
  const int n = f.voters();

  if (t.steps.front().justification != StepTag::Initial)
    return fail(0, "first step must be INITIAL");

  for (std::size_t si = 0; si < t.steps.size(); ++si) {
    const TraceStep& s = t.steps[si];
    const auto idx = static_cast<std::int64_t>(si);
    if (s.profile_index < 0 || s.profile_index >= space.size())
      return fail(idx, "profile index out of range");
    if (f.winner_at(s.profile_index) != s.outcome)
      return fail(idx, "outcome mismatch: recorded " + std::to_string(s.outcome) +
                           ", table has " + std::to_string(f.winner_at(s.profile_index)));
    for (int c : s.claim)
      if (c < 0 || c >= m) return fail(idx, "claim alternative out of range");

    if (s.justification == StepTag::Initial) {
      if (s.changed_voter) return fail(idx, "INITIAL step must not name a changed voter");
    } else {
      const TraceStep& prev = t.steps[si - 1];
      // locate the coordinate difference
      int diff_voter = -1;
      int diff_count = 0;
      for (int i = 0; i < n; ++i) {
        if (space.digit(s.profile_index, i) != space.digit(prev.profile_index, i)) {
          diff_voter = i;
          ++diff_count;
        }
      }
      if (diff_count > 1)
        return fail(idx, "consecutive profiles differ in " + std::to_string(diff_count) +
                             " coordinates");
      if (diff_count == 1) {
        if (!s.changed_voter || *s.changed_voter != diff_voter)
          return fail(idx, "changed voter not identified (coordinate " +
                               std::to_string(diff_voter) + " moved)");
      } else if (s.changed_voter) {
        return fail(idx, "changed voter named but the profile did not move");
      }
      if (s.justification == StepTag::StpStep) {
        if (diff_count != 1) return fail(idx, "STP_STEP must move exactly one coordinate");
        const std::int64_t k_prev = space.digit(prev.profile_index, diff_voter);
        const std::int64_t k_cur = space.digit(s.profile_index, diff_voter);
        const LinearOrder o_prev = order_from_index(k_prev, m);
        const LinearOrder o_cur = order_from_index(k_cur, m);
        if (s.outcome != prev.outcome) {
          if (prefers(o_prev, s.outcome, prev.outcome))
            return fail(idx, "voter " + std::to_string(diff_voter) +
                                 " manipulates forward: prefers " + std::to_string(s.outcome) +
                                 " over " + std::to_string(prev.outcome));
          if (prefers(o_cur, prev.outcome, s.outcome))
            return fail(idx, "voter " + std::to_string(diff_voter) +
                                 " manipulates backward: prefers " + std::to_string(prev.outcome) +
                                 " over " + std::to_string(s.outcome));
        }
      }
    }

    switch (s.justification) {
      case StepTag::UnmApplication: {
        int common = -1;
        for (int i = 0; i < n; ++i) {
          const LinearOrder o = order_from_index(space.digit(s.profile_index, i), m);
          if (i == 0)
            common = top(o);
          else if (top(o) != common)
            return fail(idx, "UNM_APPLICATION profile has no common top");
        }
        if (common != s.outcome)
          return fail(idx, "UNM_APPLICATION: common top " + std::to_string(common) +
                               " but outcome " + std::to_string(s.outcome));
        break;
      }
      case StepTag::Lemma1Ref:
      case StepTag::Lemma2Ref:
      case StepTag::Dichotomy: {
        if (s.claim.empty()) return fail(idx, "claim set required for this justification");
        if (std::find(s.claim.begin(), s.claim.end(), s.outcome) == s.claim.end())
          return fail(idx, "outcome " + std::to_string(s.outcome) + " outside the claim set");
        break;
      }
      default: break;
    }
  }

  for (const auto& [name, step] : t.marks)
    if (step < 0 || step >= static_cast<std::int64_t>(t.steps.size()))
      return fail(-1, "mark '" + name + "' points outside the trace");

  return TraceCheck{};
}

}  // namespace gssc
