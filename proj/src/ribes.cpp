#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "respeak/align_metrics.hpp"
#include "respeak/error.hpp"

namespace respeak {

namespace {

void require_distinct(std::span<const std::size_t> positions) {
  std::set<std::size_t> seen(positions.begin(), positions.end());
  if (seen.size() != positions.size()) {
    throw Error(ErrorCode::InvalidInput, "rank positions must be distinct");
  }
}

using Words = std::vector<std::string>;

// Start offsets of every occurrence of words[first, first+len) in `in`.
std::vector<std::size_t> occurrences(const Words& in, const Words& words, std::size_t first,
                                     std::size_t len) {
  std::vector<std::size_t> out;
  if (len > in.size()) return out;
  for (std::size_t s = 0; s + len <= in.size(); ++s) {
    if (std::equal(words.begin() + static_cast<std::ptrdiff_t>(first),
                   words.begin() + static_cast<std::ptrdiff_t>(first + len),
                   in.begin() + static_cast<std::ptrdiff_t>(s))) {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

std::optional<double> kendall_nkt(std::span<const std::size_t> positions) {
  require_distinct(positions);
  const std::size_t n = positions.size();
  if (n < 2) return std::nullopt;
  // (tau + 1) / 2 reduces to concordant / pairs; one division keeps it exact
  // to the last bit.
  std::size_t concordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) concordant += positions[i] < positions[j];
  }
  return static_cast<double>(concordant) / static_cast<double>(n * (n - 1) / 2);
}

std::optional<double> spearman_nsr(std::span<const std::size_t> positions) {
  require_distinct(positions);
  const std::size_t n = positions.size();
  if (n < 2) return std::nullopt;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return positions[a] < positions[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  // (rho + 1) / 2 = (n(n²−1) − 3Σd²) / n(n²−1), in integers.
  std::size_t sum_d2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = rank[i] > i ? rank[i] - i : i - rank[i];
    sum_d2 += d * d;
  }
  const std::size_t den = n * (n * n - 1);
  return static_cast<double>(den - 3 * sum_d2) / static_cast<double>(den);
}

std::vector<std::size_t> ribes_alignment(const TokenSequence& hyp, const TokenSequence& ref) {
  const Words& h = hyp.tokens();
  const Words& r = ref.tokens();
  std::vector<std::size_t> out;
  std::vector<bool> ref_used(r.size(), false);

  for (std::size_t i = 0; i < h.size(); ++i) {
    std::optional<std::size_t> pos;
    const auto in_ref = occurrences(r, h, i, 1);
    if (in_ref.empty()) continue;
    if (in_ref.size() == 1 && occurrences(h, h, i, 1).size() == 1) {
      pos = in_ref.front();
    }
    // Widen the window around i until it is unique on both sides; for each
    // width, right context is tried before left context.
    const std::size_t max_len = std::max(h.size(), r.size());
    for (std::size_t len = 2; !pos && len <= h.size() && len <= max_len; ++len) {
      for (std::size_t back = 0; back < len && !pos; ++back) {
        if (back > i) break;
        const std::size_t start = i - back;
        if (start + len > h.size()) continue;
        const auto in_h = occurrences(h, h, start, len);
        if (in_h.size() != 1) continue;
        const auto in_r = occurrences(r, h, start, len);
        if (in_r.size() == 1) pos = in_r.front() + back;
      }
    }
    if (pos && !ref_used[*pos]) {
      ref_used[*pos] = true;
      out.push_back(*pos);
    }
  }
  return out;
}

RibesScore ribes(const TokenSequence& hyp, const TokenSequence& ref, double alpha,
                 RibesVariant variant) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "RIBES alpha must lie in (0,1)");
  }
  RibesScore s;
  s.alpha = alpha;
  s.variant = variant;
  if (hyp.empty()) return s;
  const auto aligned = ribes_alignment(hyp, ref);
  s.precision = static_cast<double>(aligned.size()) / static_cast<double>(hyp.size());
  if (aligned.empty()) return s;
  // A single aligned word is trivially in order.
  s.nkt = kendall_nkt(aligned).value_or(1.0);
  s.nsr = spearman_nsr(aligned).value_or(1.0);
  const double stat = variant == RibesVariant::Nkt ? s.nkt : s.nsr;
  s.score = stat * std::pow(s.precision, alpha);
  return s;
}

RibesScore ribes(const TokenSequence& hyp, std::span<const TokenSequence> refs, double alpha,
                 RibesVariant variant) {
  if (refs.empty()) throw Error(ErrorCode::EmptyReference, "RIBES needs a reference");
  RibesScore best;
  bool first = true;
  for (const auto& r : refs) {
    auto s = ribes(hyp, r, alpha, variant);
    if (first || s.score > best.score) {
      best = s;
      first = false;
    }
  }
  return best;
}

}  // namespace respeak
