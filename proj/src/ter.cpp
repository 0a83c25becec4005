#include <algorithm>
#include <numeric>

#include "respeak/align_metrics.hpp"
#include "respeak/error.hpp"

namespace respeak {

namespace {

using Words = std::vector<std::string>;

// Hypothesis positions aligned to an identical reference word along one
// optimal Levenshtein path.
std::vector<bool> exactly_aligned(const Words& hyp, const Words& ref) {
  const std::size_t h = hyp.size(), r = ref.size();
  std::vector<std::size_t> d((h + 1) * (r + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * (r + 1) + j]; };
  for (std::size_t i = 0; i <= h; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= r; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= h; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      const std::size_t sub = at(i - 1, j - 1) + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      at(i, j) = std::min({sub, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }
  std::vector<bool> aligned(h, false);
  std::size_t i = h, j = r;
  while (i > 0 && j > 0) {
    if (hyp[i - 1] == ref[j - 1] && at(i, j) == at(i - 1, j - 1)) {
      aligned[i - 1] = true;
      --i;
      --j;
    } else if (at(i, j) == at(i - 1, j - 1) + 1) {
      --i;
      --j;
    } else if (at(i, j) == at(i - 1, j) + 1) {
      --i;
    } else {
      --j;
    }
  }
  return aligned;
}

bool occurs_in(const Words& ref, Words::const_iterator first, Words::const_iterator last) {
  return std::search(ref.begin(), ref.end(), first, last) != ref.end();
}

Words apply_shift(const Words& words, std::size_t start, std::size_t len, std::size_t dest) {
  Words rest;
  rest.reserve(words.size());
  rest.insert(rest.end(), words.begin(), words.begin() + static_cast<std::ptrdiff_t>(start));
  rest.insert(rest.end(), words.begin() + static_cast<std::ptrdiff_t>(start + len), words.end());
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(dest),
              words.begin() + static_cast<std::ptrdiff_t>(start),
              words.begin() + static_cast<std::ptrdiff_t>(start + len));
  return rest;
}

}  // namespace

std::size_t word_levenshtein(std::span<const std::string> hyp, std::span<const std::string> ref) {
  std::vector<std::size_t> row(ref.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= hyp.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= ref.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({diag + (hyp[i - 1] == ref[j - 1] ? 0 : 1), up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row[ref.size()];
}

TerScore ter(const TokenSequence& hyp, const TokenSequence& ref, const TerConfig& config) {
  if (ref.empty()) throw Error(ErrorCode::EmptyReference, "TER needs a non-empty reference");
  const Words& target = ref.tokens();
  Words current = hyp.tokens();
  std::size_t distance = word_levenshtein(current, target);
  std::size_t shifts = 0;

  while (distance > 0) {
    const auto aligned = exactly_aligned(current, target);
    std::size_t best_distance = distance;
    std::optional<Words> best;

    for (std::size_t start = 0; start < current.size(); ++start) {
      for (std::size_t len = 1; len <= config.max_block && start + len <= current.size(); ++len) {
        const auto first = current.begin() + static_cast<std::ptrdiff_t>(start);
        const auto last = first + static_cast<std::ptrdiff_t>(len);
        // Only blocks that exist verbatim in the reference may move.
        if (!occurs_in(target, first, last)) break;
        const bool misplaced =
            std::any_of(aligned.begin() + static_cast<std::ptrdiff_t>(start),
                        aligned.begin() + static_cast<std::ptrdiff_t>(start + len),
                        [](bool a) { return !a; });
        if (!misplaced) continue;

        const std::size_t slots = current.size() - len;
        for (std::size_t dest = 0; dest <= slots; ++dest) {
          if (dest == start) continue;
          const std::size_t dist = dest > start ? dest - start : start - dest;
          if (dist > config.max_shift_distance) continue;
          auto shifted = apply_shift(current, start, len, dest);
          const std::size_t d = word_levenshtein(shifted, target);
          if (d < best_distance) {
            best_distance = d;
            best = std::move(shifted);
          }
        }
      }
    }
    if (!best) break;
    current = std::move(*best);
    distance = best_distance;
    ++shifts;
  }

  TerScore out;
  out.shifts = shifts;
  out.edits = static_cast<double>(shifts + distance);
  out.ref_length = static_cast<double>(ref.size());
  out.ter = out.edits / out.ref_length;
  return out;
}

TerScore ter(const TokenSequence& hyp, std::span<const TokenSequence> refs,
             const TerConfig& config) {
  if (refs.empty()) throw Error(ErrorCode::EmptyReference, "TER needs a reference");
  TerScore best;
  double total_len = 0.0;
  bool first = true;
  for (const auto& r : refs) {
    auto s = ter(hyp, r, config);
    total_len += s.ref_length;
    if (first || s.edits < best.edits) {
      best = s;
      first = false;
    }
  }
  best.ref_length = total_len / static_cast<double>(refs.size());
  best.ter = best.edits / best.ref_length;
  return best;
}

}  // namespace respeak
