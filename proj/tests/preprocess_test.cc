#include <gtest/gtest.h>

#include <random>

#include "metaqa/preprocess.h"
#include "support.h"

namespace metaqa {
namespace {

using testing::sentence_by_id;

bool has_reason(const SuitabilityVerdict& v, const std::string& r) {
  return std::find(v.reasons.begin(), v.reasons.end(), r) != v.reasons.end();
}

TEST(Normalize, ListedItems) {
  EXPECT_EQ(normalize("I'm gonna go"), "I am going to go");
  EXPECT_EQ(normalize("lemme in, a.k.a. now"), "let me in, also known as now");
  EXPECT_EQ(normalize("plain text"), "plain text");
  EXPECT_EQ(normalize("But books don't change"), "But books do not change");
  EXPECT_EQ(normalize("We won't, they can't"), "We will not, they cannot");
  EXPECT_EQ(normalize("Gonna wanna"), "Going to want to");
  EXPECT_EQ(normalize("yard"), "yard");
}

TEST(Normalize, Idempotent) {
  const std::vector<std::string> pieces = {"I'm", "gonna", "don't", "e.g.", "i.e.", "they're", "we've",
                                           "lemme", "a.k.a.", "plain", "won't", "ya", "Gimme", ","};
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    std::string text;
    for (int k = 0; k < 6; ++k) text += pieces[rng() % pieces.size()] + " ";
    const std::string once = normalize(text);
    EXPECT_EQ(normalize(once), once) << text;
  }
}

TEST(Segment, SubordinateClauseKeepsItsRole) {
  const auto s = sentence_by_id("running_inputs.jsonl", "solar");
  const auto seg = segment(s);
  ASSERT_EQ(seg.clauses.size(), 2u);
  EXPECT_EQ(seg.clauses[0].clause_role, "MAIN");
  EXPECT_EQ(seg.clauses[0].text(),
            "The solar panel manufacturing industry is in the doldrums because supply far exceeds demand");
  EXPECT_EQ(seg.clauses[1].clause_role, "CAU");
  EXPECT_EQ(seg.clauses[1].text(), "supply far exceeds demand");
  for (const auto& c : seg.clauses) {
    EXPECT_EQ(c.sentence.frames.size(), 1u);
    ASSERT_EQ(c.origin.size(), c.sentence.tokens.size());
    for (size_t i = 0; i < c.origin.size(); ++i) {
      EXPECT_EQ(c.sentence.tokens[i].text, s.tokens[c.origin[i]].text);
      if (i > 0) EXPECT_GT(c.origin[i], c.origin[i - 1]);
    }
  }
}

TEST(Segment, ClauseWithoutObjectStaysInsideMain) {
  const auto s = sentence_by_id("running_inputs.jsonl", "tom");
  const auto seg = segment(s);
  ASSERT_EQ(seg.clauses.size(), 1u);
  EXPECT_EQ(seg.clauses[0].text(), "Tom has a story book on the American history");
  EXPECT_EQ(seg.clauses[0].clause_role, "MAIN");

  const auto pairs = read_pair_corpus(testing::data_path("running_pairs.jsonl"));
  const auto uranus = segment(pairs[2].declarative);
  ASSERT_EQ(uranus.clauses.size(), 1u);
  EXPECT_EQ(uranus.clauses[0].text(), "Uranus is an unusual planet because it is tilted");
  ASSERT_EQ(uranus.discarded.size(), 1u);
  EXPECT_EQ(uranus.discarded[0].frame_index, 1);
}

TEST(Segment, NoObjectIsUnsegmentable) {
  const auto seg = segment(sentence_by_id("preprocess_sentences.jsonl", "but-books"));
  EXPECT_TRUE(seg.unsegmentable());
  EXPECT_EQ(seg.discarded.size(), 1u);
}

TEST(StripConjunction, LeadingCoordinators) {
  const auto books = strip_leading_conjunction(whole_clause(sentence_by_id("preprocess_sentences.jsonl", "but-books")));
  EXPECT_EQ(books.text(), "books do not change.");
  EXPECT_EQ(books.frame().predicate, 3);
  EXPECT_EQ(books.frame().arguments[0].span, (Span{0, 1}));

  const auto work = strip_leading_conjunction(whole_clause(sentence_by_id("preprocess_sentences.jsonl", "and-so")));
  EXPECT_EQ(work.text(), "the work began.");

  const auto tom = whole_clause(sentence_by_id("running_inputs.jsonl", "tom"));
  EXPECT_EQ(strip_leading_conjunction(tom).text(), tom.text());
}

TEST(Suitability, Verdicts) {
  const auto where = assess_suitability(sentence_by_id("preprocess_sentences.jsonl", "where-boston"));
  EXPECT_FALSE(where.suitable);
  EXPECT_TRUE(has_reason(where, "wh_start"));
  EXPECT_TRUE(has_reason(where, "question_mark"));

  const auto mit = assess_suitability(sentence_by_id("tp3_sentences.jsonl", "mit"));
  EXPECT_TRUE(mit.suitable);
  EXPECT_TRUE(mit.reasons.empty());

  const auto it = assess_suitability(sentence_by_id("preprocess_sentences.jsonl", "it-is-it"));
  EXPECT_FALSE(it.suitable);
  EXPECT_EQ(it.reasons, std::vector<std::string>{"too_short"});

  const auto imp = assess_suitability(sentence_by_id("preprocess_sentences.jsonl", "imperative"));
  EXPECT_FALSE(imp.suitable);
  EXPECT_TRUE(has_reason(imp, "verb_start"));
  EXPECT_TRUE(has_reason(imp, "missing_role"));

  const auto books = assess_suitability(sentence_by_id("preprocess_sentences.jsonl", "but-books"));
  EXPECT_TRUE(has_reason(books, "missing_role"));
}

TEST(Suitability, SuitableIffNoReasons) {
  for (const char* f : {"running_inputs.jsonl", "tp3_sentences.jsonl", "preprocess_sentences.jsonl",
                        "distractor_sentences.jsonl", "lincoln.jsonl"}) {
    for (const auto& s : read_corpus(testing::data_path(f))) {
      const auto v = assess_suitability(s);
      EXPECT_EQ(v.suitable, v.reasons.empty()) << s.id;
      EXPECT_EQ(assess_suitability(s).reasons, v.reasons);
    }
  }
}

TEST(Suitability, ContentWords) {
  EXPECT_EQ(content_word_count(sentence_by_id("preprocess_sentences.jsonl", "it-is-it")), 0);
  EXPECT_EQ(content_word_count(sentence_by_id("running_inputs.jsonl", "tom")), 5);
}

TEST(Arguments, SubjectAndObject) {
  SrlFrame f;
  f.predicate = 3;
  f.arguments = {{"TMP", {0, 1}}, {"ARG1", {1, 2}}, {"ARG0", {2, 3}}, {"ARG2", {4, 6}}};
  ASSERT_NE(subject_argument(f), nullptr);
  EXPECT_EQ(subject_argument(f)->role, "ARG0");
  ASSERT_NE(object_argument(f), nullptr);
  EXPECT_EQ(object_argument(f)->role, "ARG2");
  f.arguments = {{"TMP", {0, 1}}};
  EXPECT_EQ(subject_argument(f), nullptr);
  EXPECT_EQ(object_argument(f), nullptr);
}

}  // namespace
}  // namespace metaqa
