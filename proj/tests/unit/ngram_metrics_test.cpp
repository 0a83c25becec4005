#include <doctest.h>

#include <cmath>
#include <random>

#include "respeak/error.hpp"
#include "respeak/ngram_metrics.hpp"
#include "support/oracles.hpp"

using namespace respeak;

namespace {

TokenSequence seq(const char* text) { return tokenize(text); }

LanguageResources exam_quiz() {
  LanguageResources r;
  r.add_synonym_pair("exam", "quiz");
  return r;
}

struct RandomCorpus {
  Corpus hyps;
  ReferenceCorpus refs;
};

RandomCorpus random_corpus(std::mt19937& rng, std::size_t vocab = 8) {
  std::uniform_int_distribution<std::size_t> segs(1, 20);
  RandomCorpus c;
  const std::size_t n = segs(rng);
  for (std::size_t i = 0; i < n; ++i) {
    c.hyps.emplace_back(gen::words(rng, 1, 15, vocab));
    c.refs.push_back({TokenSequence(gen::words(rng, 1, 15, vocab))});
  }
  return c;
}

}  // namespace

TEST_CASE("brevity_penalty") {
  CHECK(brevity_penalty(10, 5) == 1.0);
  CHECK(brevity_penalty(5, 5) == 1.0);
  CHECK(brevity_penalty(5, 10) == doctest::Approx(0.367879).epsilon(1e-6));
  CHECK_THROWS_AS(brevity_penalty(0, 3), Error);
}

TEST_CASE("modified_precision") {
  const std::vector<TokenSequence> quiz{seq("this is a quiz")};
  CHECK(*modified_precision(seq("this is a exam"), quiz, 1) == 0.75);
  const auto five = seq("one two three four five");
  const std::vector<TokenSequence> same{five};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(*modified_precision(five, same, n) == 1.0);
  const std::vector<TokenSequence> ab{seq("a b")};
  CHECK(*modified_precision(seq("x y"), ab, 1) == 0.0);
  CHECK_FALSE(modified_precision(seq("x y"), ab, 3).has_value());
}

TEST_CASE("bleu") {
  const Corpus h{seq("the cat sat on the mat"), seq("a dog barked")};
  const auto id = bleu(h, single_references(h));
  CHECK(id.score == 1.0);
  CHECK(id.brevity_penalty == 1.0);

  BleuConfig unigram{.max_n = 1, .weights = {1.0}};
  CHECK(bleu({seq("this is a exam")}, {{seq("this is a quiz")}}, unigram).score == 0.75);

  // No shared bigram: p2 = 0 annihilates the score.
  CHECK(bleu({seq("a b c")}, {{seq("c b a")}}).score == 0.0);

  SUBCASE("smoothing keeps a zero order from annihilating") {
    BleuConfig smooth;
    smooth.smooth = true;
    CHECK(bleu({seq("a b c")}, {{seq("c b a")}}, smooth).score > 0.0);
  }
  SUBCASE("sentence level averages segment scores") {
    BleuConfig one{.max_n = 1, .weights = {1.0}, .smooth = false, .sentence_level = true};
    const Corpus hyps{seq("a b"), seq("c d")};
    const ReferenceCorpus refs{{seq("a b")}, {seq("c x")}};
    CHECK(bleu(hyps, refs, one).score == doctest::Approx(0.75));
  }
  SUBCASE("brevity uses the closest reference, ties to the shorter") {
    const std::vector<TokenSequence> refs{seq("a b c d e f"), seq("a b")};
    CHECK(closest_ref_length(4, refs) == 2);
    const std::vector<TokenSequence> tie{seq("a b c d e"), seq("a b c")};
    CHECK(closest_ref_length(4, tie) == 3);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(bleu({seq("a")}, {}), Error);
    CHECK_THROWS_AS(bleu({}, {}), Error);
    BleuConfig bad{.max_n = 2, .weights = {0.7, 0.7}};
    CHECK_THROWS_AS(bleu({seq("a b")}, {{seq("a b")}}, bad), Error);
  }
}

TEST_CASE("nist") {
  SUBCASE("identity over four distinct words, unigrams only") {
    const Corpus h{seq("alpha beta gamma delta")};
    // Hand evaluation: each word occurs once among 4 reference words, so
    // info = log2(4 / 1) = 2 and the arithmetic mean over 4 matches is 2.
    const double expected = (4 * std::log2(4.0 / 1.0)) / 4.0;
    NistConfig cfg;
    cfg.max_n = 1;
    CHECK(nist(h, single_references(h), cfg) == doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("no shared n-gram") {
    CHECK(nist({seq("x y z")}, {{seq("a b c")}}) == 0.0);
  }
  SUBCASE("length factor is one half at ratio 2/3") {
    const double beta = NistConfig::default_beta();
    const double l = std::log(2.0 / 3.0);
    CHECK(std::exp(beta * l * l) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("doubling every segment leaves the score unchanged") {
    std::mt19937 rng(gen::seed() + 7);
    for (int trial = 0; trial < 30; ++trial) {
      auto c = random_corpus(rng);
      Corpus h2 = c.hyps;
      ReferenceCorpus r2 = c.refs;
      h2.insert(h2.end(), c.hyps.begin(), c.hyps.end());
      r2.insert(r2.end(), c.refs.begin(), c.refs.end());
      CHECK(nist(h2, r2) == doctest::Approx(nist(c.hyps, c.refs)).epsilon(1e-12));
    }
  }
}

TEST_CASE("ebleu_synonym_expand") {
  const auto res = exam_quiz();
  const auto a = ebleu_synonym_expand(seq("this is a exam"), seq("this is a quiz"), res);
  REQUIRE(a.size() == 4);
  CHECK(a[0].kind == MatchKind::Exact);
  CHECK(a[2].kind == MatchKind::Exact);
  CHECK(a[3].kind == MatchKind::Synonym);
  CHECK(a[3].matched == "quiz");

  const auto none = ebleu_synonym_expand(seq("this is a exam"), seq("this is a quiz"), {});
  CHECK(none[3].kind == MatchKind::Miss);

  // Exact match wins even when a synonym is also present.
  const auto both = ebleu_synonym_expand(seq("exam"), seq("quiz exam"), res);
  CHECK(both[0].kind == MatchKind::Exact);
  CHECK(both[0].matched == "exam");
}

TEST_CASE("ebleu") {
  EbleuConfig unigram;
  unigram.max_n = 1;
  const Corpus h{seq("this is a exam")};
  const ReferenceCorpus r{{seq("this is a quiz")}};
  const auto with = ebleu(h, r, exam_quiz(), unigram);
  CHECK(*with.per_order_base[0] == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(with.score == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(ebleu(h, r, {}, unigram).score == 0.75);

  SUBCASE("synonym credit reaches higher orders") {
    EbleuConfig bi;
    bi.max_n = 2;
    const auto s = ebleu(h, r, exam_quiz(), bi);
    // Bigrams: "this is", "is a" exact, "a exam" -> "a quiz" at 0.9.
    CHECK(*s.per_order_base[1] == doctest::Approx(2.9 / 3.0).epsilon(1e-12));
  }
  SUBCASE("rare-word bonus applies once per n-gram and is clamped") {
    EbleuConfig cfg;
    cfg.max_n = 1;
    cfg.rare_words_percent = 0.7;
    cfg.rare_words_score = 1.5;
    const auto rare = rare_words({{seq("a a b c")}}, 0.7);
    CHECK(rare == std::set<std::string>{"b", "c"});
    // Hyp "a x": matched "a" is frequent, so no bonus -> 1/2.
    CHECK(ebleu({seq("a x")}, {{seq("a a b c")}}, {}, cfg).score ==
          doctest::Approx(0.5 * brevity_penalty(2, 4)));
    // Hyp "b x": 1.5/2 = 0.75 before brevity.
    CHECK(*ebleu({seq("b x")}, {{seq("a a b c")}}, {}, cfg).per_order_base[0] ==
          doctest::Approx(0.75));
    // Identity with bonus clamps to 1.
    CHECK(ebleu({seq("a a b c")}, {{seq("a a b c")}}, {}, cfg).score == 1.0);
  }
  SUBCASE("config validation") {
    EbleuConfig bad;
    bad.synonym_score = 0.0;
    CHECK_THROWS_AS(ebleu(h, r, {}, bad), Error);
  }
}

TEST_CASE("n-gram metric properties on random corpora") {
  std::mt19937 rng(gen::seed() + 11);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = random_corpus(rng);
    const double b = bleu(c.hyps, c.refs).score;
    CHECK(b >= 0.0);
    CHECK(b <= 1.0);
    CHECK(nist(c.hyps, c.refs) >= 0.0);

    EbleuConfig plain;
    plain.rare_words_score = 1.0;
    CHECK(ebleu(c.hyps, c.refs, {}, plain).score == b);

    LanguageResources res;
    res.add_synonym_pair("w0", "w1");
    res.add_synonym_pair("w2", "w5");
    EbleuConfig rich;
    rich.rare_words_percent = 0.2;
    rich.rare_words_score = 1.3;
    const auto e = ebleu(c.hyps, c.refs, res, rich);
    CHECK(e.score >= b);
    CHECK(e.score <= 1.0);

    // C_1 = B_1, C_i = geometric mean of B_1..B_i.
    double log_sum = 0.0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < e.per_order_base.size(); ++i) {
      if (!e.per_order_base[i] || *e.per_order_base[i] == 0.0) break;
      log_sum += std::log(*e.per_order_base[i]);
      ++k;
      CHECK(*e.cumulative[i] == doctest::Approx(std::exp(log_sum / k)).epsilon(1e-12));
      double prod = 1.0;
      for (std::size_t j = 0; j <= i; ++j) prod *= *e.per_order_base[j];
      CHECK(std::abs(*e.cumulative[i] - std::pow(prod, 1.0 / k)) < 1e-12);
    }
    if (e.per_order_base[0]) CHECK(*e.cumulative[0] == doctest::Approx(*e.per_order_base[0]));

    CHECK(bleu(c.hyps, single_references(c.hyps)).score == 1.0);
    CHECK(ebleu(c.hyps, single_references(c.hyps), res).score == 1.0);

    // Vocabulary relabeling.
    auto relabel = [](const TokenSequence& s) {
      std::vector<std::string> t;
      for (const auto& w : s) t.push_back("z" + w + "q");
      return TokenSequence(t);
    };
    Corpus rh;
    ReferenceCorpus rr;
    for (std::size_t i = 0; i < c.hyps.size(); ++i) {
      rh.push_back(relabel(c.hyps[i]));
      rr.push_back({relabel(c.refs[i][0])});
    }
    CHECK(bleu(rh, rr).score == b);
  }
}
