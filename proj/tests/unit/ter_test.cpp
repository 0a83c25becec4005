#include <doctest.h>

#include <random>

#include "respeak/align_metrics.hpp"
#include "respeak/error.hpp"
#include "support/oracles.hpp"

using namespace respeak;

TEST_CASE("ter examples") {
  const auto ref = tokenize("a b c d e f g h");
  const auto id = ter(ref, ref);
  CHECK(id.edits == 0.0);
  CHECK(id.ter == 0.0);

  const auto ten = tokenize("one two three four five six seven eight nine ten");
  const auto sub = ter(tokenize("one two three four five six seven eight nine eleven"), ten);
  CHECK(sub.edits == 1.0);
  CHECK(sub.ter == doctest::Approx(0.1));

  const auto swapped = tokenize("c d a b e f g h");
  REQUIRE(oracle::exhaustive_ter_edits(swapped.tokens(), ref.tokens()) == 1);
  const auto s = ter(swapped, ref);
  CHECK(s.edits == 1.0);
  CHECK(s.shifts == 1);
  CHECK(s.ter == doctest::Approx(1.0 / 8.0));

  CHECK_THROWS_AS(ter(ref, TokenSequence{}), Error);
  CHECK(ter(TokenSequence{}, ref).ter == 1.0);
}

TEST_CASE("ter against multiple references") {
  const std::vector<TokenSequence> refs{tokenize("a b c d"), tokenize("a b x d e f")};
  const auto s = ter(tokenize("a b c d"), refs);
  CHECK(s.edits == 0.0);
  CHECK(s.ref_length == doctest::Approx(5.0));
}

TEST_CASE("ter properties") {
  std::mt19937 rng(gen::seed() + 3);
  for (int trial = 0; trial < 150; ++trial) {
    const TokenSequence hyp(gen::words(rng, 0, 10, 5));
    const TokenSequence ref(gen::words(rng, 1, 10, 5));
    const auto s = ter(hyp, ref);
    const double lev = static_cast<double>(oracle::levenshtein(hyp.tokens(), ref.tokens()));
    CHECK(s.edits <= lev);
    CHECK(ter(ref, ref).ter == 0.0);
    CHECK((s.ter == 0.0) == (hyp == ref));

    std::vector<std::string> h2, r2;
    for (const auto& w : hyp) h2.push_back("x" + w);
    for (const auto& w : ref) r2.push_back("x" + w);
    CHECK(ter(TokenSequence(h2), TokenSequence(r2)).edits == s.edits);
  }
}
