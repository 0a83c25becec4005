#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "respeak/align_metrics.hpp"
#include "respeak/error.hpp"

namespace respeak {

namespace {

// Branch-and-bound over hypothesis positions. Search effort is capped; when
// the cap is hit the best matching found so far is kept (the first leaf
// reached is the greedy in-order matching).
constexpr std::size_t kSearchBudget = 200000;

class StageMatcher {
 public:
  StageMatcher(std::vector<std::vector<std::size_t>> candidates,
               const std::vector<MeteorMatch>& fixed, std::size_t ref_size)
      : candidates_(std::move(candidates)), fixed_(fixed), ref_used_(ref_size, false) {
    for (const auto& m : fixed_) ref_used_[m.ref] = true;
  }

  std::vector<std::pair<std::size_t, std::size_t>> solve() {
    search(0, 0);
    return best_;
  }

 private:
  std::size_t crossings_with(std::size_t h, std::size_t r) const {
    std::size_t c = 0;
    auto crosses = [&](std::size_t h2, std::size_t r2) {
      return (h2 < h && r2 > r) || (h2 > h && r2 < r);
    };
    for (const auto& m : fixed_) c += crosses(m.hyp, m.ref);
    for (const auto& [h2, r2] : current_) c += crosses(h2, r2);
    return c;
  }

  std::size_t optimistic_remaining(std::size_t from) const {
    std::size_t n = 0;
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      n += std::any_of(candidates_[i].begin(), candidates_[i].end(),
                       [&](std::size_t r) { return !ref_used_[r]; });
    }
    return n;
  }

  void search(std::size_t pos, std::size_t crossings) {
    if (++nodes_ > kSearchBudget && have_best_) return;
    const std::size_t bound = current_.size() + optimistic_remaining(pos);
    if (have_best_ && (bound < best_.size() ||
                       (bound == best_.size() && crossings >= best_crossings_))) {
      return;
    }
    if (pos == candidates_.size()) {
      best_ = current_;
      best_crossings_ = crossings;
      have_best_ = true;
      return;
    }
    for (std::size_t r : candidates_[pos]) {
      if (ref_used_[r]) continue;
      const std::size_t added = crossings_with(pos, r);
      ref_used_[r] = true;
      current_.emplace_back(pos, r);
      search(pos + 1, crossings + added);
      current_.pop_back();
      ref_used_[r] = false;
    }
    search(pos + 1, crossings);
  }

  std::vector<std::vector<std::size_t>> candidates_;
  const std::vector<MeteorMatch>& fixed_;
  std::vector<bool> ref_used_;
  std::vector<std::pair<std::size_t, std::size_t>> current_;
  std::vector<std::pair<std::size_t, std::size_t>> best_;
  std::size_t best_crossings_ = std::numeric_limits<std::size_t>::max();
  bool have_best_ = false;
  std::size_t nodes_ = 0;
};

void run_stage(const TokenSequence& hyp, const TokenSequence& ref, MatchStage stage,
               const std::function<bool(const std::string&, const std::string&)>& eligible,
               std::vector<MeteorMatch>& matches) {
  std::vector<bool> hyp_used(hyp.size(), false), ref_used(ref.size(), false);
  for (const auto& m : matches) {
    hyp_used[m.hyp] = true;
    ref_used[m.ref] = true;
  }
  std::vector<std::vector<std::size_t>> candidates(hyp.size());
  bool any = false;
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    if (hyp_used[i]) continue;
    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (!ref_used[j] && eligible(hyp[i], ref[j])) {
        candidates[i].push_back(j);
        any = true;
      }
    }
  }
  if (!any) return;
  StageMatcher matcher(std::move(candidates), matches, ref.size());
  for (const auto& [h, r] : matcher.solve()) matches.push_back({h, r, stage});
}

double token_weight(const std::string& w, const LanguageResources& res) {
  return res.is_function_word(w) ? res.function_word_weight : 1.0;
}

MeteorScore score_alignment(const TokenSequence& hyp, const TokenSequence& ref,
                            const MeteorAlignment& a, const LanguageResources& resources,
                            double penalty_exponent) {
  MeteorScore s;
  s.penalty_exponent = penalty_exponent;
  s.chunks = a.chunks;
  s.matched = a.matched_unigrams();
  if (s.matched == 0) return s;

  double hyp_total = 0.0, ref_total = 0.0, hyp_hit = 0.0, ref_hit = 0.0;
  for (const auto& w : hyp) hyp_total += token_weight(w, resources);
  for (const auto& w : ref) ref_total += token_weight(w, resources);
  for (const auto& m : a.matches) {
    hyp_hit += token_weight(hyp[m.hyp], resources);
    ref_hit += token_weight(ref[m.ref], resources);
  }
  s.precision = hyp_total > 0.0 ? hyp_hit / hyp_total : 0.0;
  s.recall = ref_total > 0.0 ? ref_hit / ref_total : 0.0;
  if (s.precision <= 0.0 || s.recall <= 0.0) return s;

  s.fmean = 10.0 * s.precision * s.recall / (s.recall + 9.0 * s.precision);
  s.penalty = 0.5 * std::pow(static_cast<double>(s.chunks) / static_cast<double>(s.matched),
                             penalty_exponent);
  s.score = s.fmean * (1.0 - s.penalty);
  return s;
}

}  // namespace

std::size_t count_chunks(std::span<const MeteorMatch> matches) {
  std::size_t chunks = 0;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const bool continues = i > 0 && matches[i].hyp == matches[i - 1].hyp + 1 &&
                           matches[i].ref == matches[i - 1].ref + 1;
    if (!continues) ++chunks;
  }
  return chunks;
}

MeteorAlignment meteor_align(const TokenSequence& hyp, const TokenSequence& ref,
                             const LanguageResources& resources) {
  std::vector<MeteorMatch> matches;
  run_stage(hyp, ref, MatchStage::Exact,
            [](const std::string& a, const std::string& b) { return a == b; }, matches);
  if (!resources.stems.empty()) {
    run_stage(hyp, ref, MatchStage::Stem,
              [&](const std::string& a, const std::string& b) {
                return resources.share_stem(a, b);
              },
              matches);
  }
  if (!resources.synonyms.empty()) {
    run_stage(hyp, ref, MatchStage::Synonym,
              [&](const std::string& a, const std::string& b) {
                return resources.are_synonyms(a, b);
              },
              matches);
  }
  std::sort(matches.begin(), matches.end(),
            [](const MeteorMatch& x, const MeteorMatch& y) { return x.hyp < y.hyp; });
  MeteorAlignment out;
  out.chunks = count_chunks(matches);
  out.matches = std::move(matches);
  return out;
}

MeteorScore meteor(const TokenSequence& hyp, const TokenSequence& ref,
                   const LanguageResources& resources, double penalty_exponent) {
  const auto a = meteor_align(hyp, ref, resources);
  return score_alignment(hyp, ref, a, resources, penalty_exponent);
}

MeteorScore meteor(const TokenSequence& hyp, std::span<const TokenSequence> refs,
                   const LanguageResources& resources, double penalty_exponent) {
  if (refs.empty()) throw Error(ErrorCode::EmptyReference, "METEOR needs a reference");
  MeteorScore best;
  bool first = true;
  for (const auto& r : refs) {
    auto s = meteor(hyp, r, resources, penalty_exponent);
    if (first || s.score > best.score) {
      best = s;
      first = false;
    }
  }
  return best;
}

MeteorScore meteor_pl(const TokenSequence& hyp, const TokenSequence& ref,
                      const LanguageResources& resources, double penalty_exponent) {
  return meteor_pl(hyp, std::span<const TokenSequence>(&ref, 1), resources, penalty_exponent);
}

MeteorScore meteor_pl(const TokenSequence& hyp, std::span<const TokenSequence> refs,
                      const LanguageResources& resources, double penalty_exponent) {
  if (resources.empty()) {
    throw Error(ErrorCode::MissingResources,
                "METEOR-PL needs stems, synonyms or function words");
  }
  return meteor(hyp, refs, resources, penalty_exponent);
}

}  // namespace respeak
