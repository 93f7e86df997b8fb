#include <gtest/gtest.h>

#include <set>

#include "metaqa/error.h"
#include "metaqa/qapgen.h"
#include "metaqa/text.h"
#include "support.h"

namespace metaqa {
namespace {

using testing::learn_store;
using testing::sentence_by_id;

using QaList = std::vector<std::pair<std::string, std::string>>;

QaList qas(const GenerationResult& r) {
  QaList out;
  for (const auto& q : r.qaps) out.emplace_back(q.question, q.answer);
  return out;
}

MetaSequence seq(const std::string& s) { return decode(s); }

TEST(Replay, Tom) {
  const auto store = learn_store("running_pairs.jsonl", MergeMode::kIdeal);
  const auto r = generate_qaps(sentence_by_id("running_inputs.jsonl", "tom"), store, MergeMode::kIdeal);
  EXPECT_EQ(qas(r), (QaList{{"Who has a story book on the American history?", "Tom"},
                            {"What does Tom have?", "a story book on the American history"}}));
  EXPECT_TRUE(r.teach_requests.empty());
  for (const auto& q : r.qaps) EXPECT_EQ(q.match_kind, MatchKind::kPerfect);
}

TEST(Replay, Duncan) {
  const auto store = learn_store("running_pairs.jsonl", MergeMode::kIdeal);
  const auto r = generate_qaps(sentence_by_id("running_inputs.jsonl", "duncan"), store, MergeMode::kIdeal);
  EXPECT_EQ(qas(r), (QaList{{"Who agrees with the conclusion?", "Duncan Watts"},
                            {"What does Duncan Watts agree with?", "the conclusion"}}));
}

TEST(Replay, DuncanWithoutSegmentationNeedsTeaching) {
  const auto store = learn_store("running_pairs.jsonl", MergeMode::kPhrasalAware);
  const auto r = generate_qaps(sentence_by_id("running_inputs.jsonl", "duncan"), store, MergeMode::kPhrasalAware);
  EXPECT_TRUE(r.qaps.empty());
  ASSERT_EQ(r.teach_requests.size(), 1u);
  EXPECT_EQ(r.teach_requests[0].sentence_id, "duncan");
  EXPECT_EQ(r.teach_requests[0].x_s, "ARG0/NNP/PER V/VBZ/ ARG1/IN/ ARG1/NN/");
  EXPECT_NE(r.teach_requests[0].kind, MatchKind::kPerfect);
}

TEST(Replay, Solar) {
  const auto store = learn_store("running_pairs.jsonl", MergeMode::kIdeal);
  const auto r = generate_qaps(sentence_by_id("running_inputs.jsonl", "solar"), store, MergeMode::kIdeal);
  EXPECT_EQ(qas(r), (QaList{{"What is in the doldrums because supply far exceeds demand?",
                             "The solar panel manufacturing industry"},
                            {"Why is the solar panel manufacturing industry in the doldrums?",
                             "because supply far exceeds demand"}}));
  ASSERT_FALSE(r.teach_requests.empty());
  EXPECT_EQ(r.teach_requests[0].kind, MatchKind::kSuccessful);
  EXPECT_EQ(r.teach_requests[0].lcs_length, 3u);
}

TEST(HelpingVerb, MaryInBothModes) {
  for (MergeMode mode : {MergeMode::kIdeal, MergeMode::kPhrasalAware}) {
    const auto store = learn_store("john_pairs.jsonl", mode);
    const auto r = generate_qaps(sentence_by_id("mary.jsonl", "mary"), store, mode);
    EXPECT_EQ(qas(r), (QaList{{"Where did Mary fly to last month?", "London"}})) << merge_mode_name(mode);
  }
}

TEST(HelpingVerb, Table) {
  EXPECT_EQ(helping_verb(Number::kSingular, "VBZ"), "does");
  EXPECT_EQ(helping_verb(Number::kPlural, "VBP"), "do");
  EXPECT_EQ(helping_verb(Number::kSingular, "VBD"), "did");
  EXPECT_EQ(helping_verb(Number::kPlural, "VBD"), "did");
  EXPECT_EQ(subject_number({"ARG0", "NNP", "PER"}, "Tom"), Number::kSingular);
  EXPECT_EQ(subject_number({"ARG0", "NN", ""}, "the engineer"), Number::kSingular);
  EXPECT_EQ(subject_number({"ARG0", "NNS", ""}, "engineers"), Number::kPlural);
  EXPECT_EQ(subject_number({"ARG0", "NNPS", ""}, "Americans"), Number::kPlural);
  EXPECT_EQ(subject_number({"ARG0", "PRP", ""}, "they"), Number::kPlural);
  EXPECT_EQ(subject_number({"ARG0", "PRP", ""}, "she"), Number::kSingular);
}

TEST(Synthesis, PerfectMatchKeepsY) {
  const auto x = seq("ARG0/NNP/PER V/VBZ/ ARG1/NN/");
  const auto y = seq("What V/VBZ/ ARG0/NNP/PER V/VB/");
  MsdipPair pair{x, {y}};
  const auto m = match_pair(pair, x);
  EXPECT_EQ(encode(synthesize_mi(x, y, x, m)), encode(y));
}

TEST(Synthesis, SolarSequences) {
  const auto xs = seq("ARG1/NN/ V/VBZ/ ARG2/NN/ CAU/NN/");
  const auto x2 = seq("ARG1/NN/ V/VBZ/ ARG2/NN/");
  const auto y2 = seq("What V/VBZ/ ARG2/NN/");
  MsdipPair p2{x2, {y2}};
  EXPECT_EQ(encode(synthesize_mi(x2, y2, xs, match_pair(p2, xs))), "What V/VBZ/ ARG2/NN/ CAU/NN/");

  const auto x3 = seq("ARG1/NNP/ V/VBZ/ ARG2/NN/ CAU/VBN/");
  const auto y3 = seq("Why V/VBZ/ ARG1/NNP/ ARG2/NN/");
  MsdipPair p3{x3, {y3}};
  const auto ys = synthesize_mi(x3, y3, xs, match_pair(p3, xs));
  EXPECT_EQ(encode(ys), "Why V/VBZ/ ARG1/NNP/ ARG2/NN/");
  EXPECT_EQ(ys.count_sr("CAU"), 0);
}

TEST(Synthesis, NoVerbIsRejected) {
  const auto x = seq("ARG0/NN/ V/VBZ/ ARG1/NN/");
  const auto y = seq("What ARG0/NN/");
  MsdipPair p{x, {y}};
  EXPECT_THROW(synthesize_mi(x, y, x, match_pair(p, x)), Error);
}

TEST(Answers, Extraction) {
  const auto store = learn_store("running_pairs.jsonl", MergeMode::kIdeal);
  const auto clause = segment(sentence_by_id("running_inputs.jsonl", "tom")).clauses.at(0);
  const auto m = merge(to_units(clause).units, MergeMode::kIdeal);
  const auto x = seq("ARG0/NNP/PER V/VBZ/ ARG1/NN/");
  EXPECT_EQ(extract_answer(x, seq("Who V/VBZ/ ARG1/NN/"), m.sequence, m.map), "Tom");
  EXPECT_EQ(extract_answer(x, seq("What V/VBZ/ ARG0/NNP/PER V/VB/"), m.sequence, m.map),
            "a story book on the American history");
  EXPECT_EQ(answer_positions(x, seq("Who V/VBZ/ ARG1/NN/"), m.sequence), std::vector<size_t>{0});
  EXPECT_THROW(extract_answer(x, seq("What V/VBZ/ ARG0/NNP/PER ARG1/NN/"), m.sequence, m.map), Error);
}

TEST(Generation, HowManyIsRejected) {
  MsdipStore store;
  LearnedExample ex{seq("ARG0/NNP/PER V/VBZ/ ARG1/NN/"), {seq("How many ARG1/NN/ V/VBZ/ ARG0/NNP/PER V/VB/")}};
  store.insert(ex, PairOrigin::kSeed);
  const auto r = generate_qaps(sentence_by_id("running_inputs.jsonl", "tom"), store, MergeMode::kIdeal);
  EXPECT_TRUE(r.qaps.empty());
  EXPECT_FALSE(r.rejections.empty());
}

TEST(Generation, EmptyStoreThrows) {
  EXPECT_THROW(generate_qaps(sentence_by_id("running_inputs.jsonl", "tom"), MsdipStore(), MergeMode::kIdeal), Error);
}

TEST(Generation, UnmatchedCorpusOnlyTeaches) {
  const auto store = learn_store("john_pairs.jsonl", MergeMode::kIdeal);
  const auto r = generate_corpus(read_corpus(testing::data_path("running_inputs.jsonl")), store, MergeMode::kIdeal);
  EXPECT_TRUE(r.qaps.empty());
  EXPECT_FALSE(r.teach_requests.empty());
  for (const auto& t : r.teach_requests) EXPECT_EQ(t.kind, MatchKind::kUnsuccessful);
}

TEST(Generation, CorpusIdsAndDeterminism) {
  const auto store = learn_store("running_pairs.jsonl", MergeMode::kIdeal);
  const auto corpus = read_corpus(testing::data_path("running_inputs.jsonl"));
  const auto a = generate_corpus(corpus, store, MergeMode::kIdeal);
  const auto b = generate_corpus(corpus, store, MergeMode::kIdeal);
  ASSERT_EQ(a.qaps.size(), 6u);
  std::vector<std::string> ids;
  for (size_t i = 0; i < a.qaps.size(); ++i) {
    EXPECT_EQ(qap_to_json(a.qaps[i]), qap_to_json(b.qaps[i]));
    ids.push_back(a.qaps[i].id);
  }
  EXPECT_EQ(ids, (std::vector<std::string>{"tom-q1", "tom-q2", "duncan-q1", "duncan-q2", "solar-q1", "solar-q2"}));
  for (const auto& q : a.qaps) {
    EXPECT_EQ(q.question.back(), '?');
    const Qap back = parse_qap_json(qap_to_json(q));
    EXPECT_EQ(qap_to_json(back), qap_to_json(q));
  }
}

// Keys of the SSU elements of `v` under equivalence.
std::set<std::string> key_set(const std::vector<MetaElement>& v) {
  std::set<std::string> out;
  for (const auto& e : v) {
    if (!e.is_pronoun()) out.insert(canonical_key(e));
  }
  return out;
}

std::set<std::string> minus(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<std::string> both(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string role_of_key(const std::string& key) { return key.substr(0, key.find('/')); }

TEST(Invariants, SynthesisMatchesSetFormula) {
  const auto store = learn_store("running_pairs.jsonl", MergeMode::kIdeal);
  int checked = 0;
  for (const auto& s : read_corpus(testing::data_path("running_inputs.jsonl"))) {
    for (const auto& clause : segment(s).clauses) {
      const auto xs = merge(to_units(clause).units, MergeMode::kIdeal).sequence;
      for (const auto& m : best_match(xs, store).group) {
        if (!m.usable()) continue;
        for (const auto& y : m.pair->mis) {
          const auto x = m.pair->md;
          const auto X = key_set(x.elements), Y = key_set(y.elements), XS = key_set(xs.elements),
                     Z = key_set(m.z.elements);
          std::set<std::string> want = minus(Y, minus(both(X, Y), XS));
          for (const auto& k : minus(XS, Z)) want.insert(k);
          std::set<std::string> answer_roles;
          for (const auto& k : minus(X, Y)) answer_roles.insert(role_of_key(k));
          std::erase_if(want, [&](const std::string& k) { return answer_roles.count(role_of_key(k)) > 0; });

          const auto ys = synthesize_mi(x, y, xs, m);
          EXPECT_EQ(key_set(ys.elements), want) << encode(x) << " | " << encode(y);
          std::vector<std::string> p_in, p_out;
          for (const auto& e : y.elements) if (e.is_pronoun()) p_in.push_back(e.pronoun);
          for (const auto& e : ys.elements) if (e.is_pronoun()) p_out.push_back(e.pronoun);
          EXPECT_EQ(p_in, p_out);
          ++checked;
        }
      }
    }
  }
  EXPECT_GE(checked, 6);
}

TEST(Invariants, AnswerTextStaysOutOfTheQuestion) {
  const auto store = learn_store("running_pairs.jsonl", MergeMode::kIdeal);
  const auto r = generate_corpus(read_corpus(testing::data_path("running_inputs.jsonl")), store, MergeMode::kIdeal);
  for (const auto& q : r.qaps) {
    EXPECT_EQ(to_lower(q.question).find(to_lower(q.answer)), std::string::npos) << q.question;
  }
}

}  // namespace
}  // namespace metaqa
