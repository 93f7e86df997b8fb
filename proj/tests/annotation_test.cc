#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "metaqa/annotation.h"
#include "metaqa/error.h"
#include "support.h"

namespace metaqa {
namespace {

using testing::data_path;

const char* kCyclic =
    R"({"id":"c","tokens":[{"text":"a","lemma":"a","pos":"DT","ne":""},)"
    R"({"text":"b","lemma":"b","pos":"NN","ne":""},{"text":"c","lemma":"c","pos":"VBZ","ne":""}],)"
    R"("frames":[],"dep_heads":[1,0,2],"constituency":null,"source":{"article":"","ordinal":0}})";

TEST(ReadCorpus, EmptyInput) {
  std::istringstream in("");
  EXPECT_TRUE(read_corpus(in).empty());
}

TEST(ReadCorpus, LincolnHasTenTokens) {
  const auto corpus = read_corpus(data_path("lincoln.jsonl"));
  ASSERT_EQ(corpus.size(), 1u);
  const auto& s = corpus[0];
  EXPECT_EQ(s.size(), 10);
  EXPECT_EQ(s.text(), "Abraham Lincoln was the 16th president of the United States");
  EXPECT_EQ(s.tokens[9].ne, "LOC");
  EXPECT_TRUE(validate_sentence(s).empty());
}

TEST(ReadCorpus, CycleIsReportedWithLine) {
  std::istringstream in(std::string(kCyclic) + "\n");
  try {
    read_corpus(in);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidation);
    EXPECT_NE(std::string(e.what()).find("dependency graph is not a tree"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
}

TEST(ReadCorpus, MalformedLineNamesLineAndField) {
  const auto good = read_corpus(data_path("lincoln.jsonl"));
  std::stringstream in;
  write_corpus(good, in);
  in << R"({"id":"x","frames":[]})" << "\n";
  try {
    read_corpus(in);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFormat);
    const std::string what = e.what();
    EXPECT_NE(what.find("line 2"), std::string::npos) << what;
    EXPECT_NE(what.find("tokens"), std::string::npos) << what;
  }
  std::istringstream junk("{not json\n");
  EXPECT_THROW(read_corpus(junk), Error);
  EXPECT_THROW(read_corpus(std::string("/nonexistent/corpus.jsonl")), Error);
}

TEST(ReadCorpus, UnknownKeysIgnored) {
  std::string line = sentence_to_json(read_corpus(data_path("lincoln.jsonl"))[0]);
  line.insert(1, R"("comment":"extra",)");
  EXPECT_EQ(parse_sentence_json(line).size(), 10);
}

TEST(Validate, Violations) {
  TaggedSentence s = read_corpus(data_path("lincoln.jsonl"))[0];
  TaggedSentence bad = s;
  bad.frames[0].arguments[1].span.end = 11;
  auto v = validate_sentence(bad);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("span out of bounds"), std::string::npos);

  TaggedSentence empty;
  EXPECT_EQ(validate_sentence(empty), std::vector<std::string>{"sentence has no tokens"});

  bad = s;
  bad.tokens[0].pos = "NOUN";
  EXPECT_EQ(validate_sentence(bad).size(), 1u);
  bad = s;
  bad.tokens[0].lemma.clear();
  EXPECT_EQ(validate_sentence(bad).size(), 1u);
  bad = s;
  bad.frames[0].arguments[1].span.start = 1;
  EXPECT_FALSE(validate_sentence(bad).empty());  // overlaps ARG1
  bad = s;
  bad.frames[0].arguments[0].role = "ARGM-TMP";
  EXPECT_FALSE(validate_sentence(bad).empty());
  bad = s;
  bad.dep_heads[3] = 3;  // two roots
  EXPECT_FALSE(validate_sentence(bad).empty());
  bad = s;
  bad.dep_heads.pop_back();
  EXPECT_FALSE(validate_sentence(bad).empty());
}

TEST(Roles, CanonicalMapping) {
  EXPECT_EQ(canonical_role("ARGM-TMP"), "TMP");
  EXPECT_EQ(canonical_role("A0"), "ARG0");
  EXPECT_EQ(canonical_role("R-ARG1"), "ARG1");
  EXPECT_EQ(canonical_role("C-ARG0"), "ARG0");
  EXPECT_EQ(canonical_role("V"), "V");
  EXPECT_EQ(canonical_role("ARGM-LOC"), "LOC");
  EXPECT_FALSE(canonical_role("ARGM-XYZ").has_value());
  const std::vector<std::string> roles = {"ARG0", "ARG1", "ARG2", "ARG3", "ARG4", "ARG5", "V",
                                          "LOC",  "EXT",  "DIS",  "ADV",  "NEG",  "MOD", "CAU",
                                          "TMP",  "PRP",  "MNR",  "GOL",  "DIR"};
  for (const auto& r : roles) {
    EXPECT_EQ(canonical_role(r), r);
    EXPECT_EQ(canonical_role("ARGM-" + r).value_or(r), r);
  }
  EXPECT_TRUE(is_core_argument("ARG3"));
  EXPECT_FALSE(is_core_argument("TMP"));
  EXPECT_EQ(core_argument_index("ARG2"), 2);
  EXPECT_EQ(core_argument_index("LOC"), -1);
}

TEST(Ssu, EncodingRoundTrip) {
  EXPECT_EQ(encode_ssu({"ARG1", "NNP", "PER"}), "ARG1/NNP/PER");
  EXPECT_EQ(encode_ssu({"V", "VBZ", ""}), "V/VBZ/");
  EXPECT_EQ(encode_ssu({"ARG1", "", ""}), "ARG1//");
  EXPECT_EQ(encode_ssu({"ARG1", "", "LOC"}), "ARG1//LOC");
  std::mt19937 rng(3);
  const std::vector<std::string> sr = {"ARG0", "V", "TMP", "CAU"};
  const std::vector<std::string> pos = {"", "NN", "VBZ", "IN"};
  const std::vector<std::string> ne = {"", "PER", "LOC"};
  for (int i = 0; i < 500; ++i) {
    Ssu u{sr[rng() % 4], pos[rng() % 4], ne[rng() % 3]};
    EXPECT_EQ(decode_ssu(encode_ssu(u)), u);
  }
  EXPECT_THROW(decode_ssu("ARG1/NN"), Error);
  EXPECT_THROW(decode_ssu("/NN/"), Error);
}

TEST(WriteCorpus, RoundTripIsByteIdentical) {
  for (const char* f : {"running_inputs.jsonl", "tp3_sentences.jsonl", "distractor_sentences.jsonl",
                        "preprocess_sentences.jsonl"}) {
    const auto corpus = read_corpus(data_path(f));
    std::stringstream first;
    write_corpus(corpus, first);
    const auto again = read_corpus(first);
    std::stringstream second;
    write_corpus(again, second);
    EXPECT_EQ(first.str(), second.str()) << f;
    for (const auto& s : again) EXPECT_TRUE(validate_sentence(s).empty()) << s.id;
  }
}

TEST(Dependencies, RootAndDepths) {
  const auto s = testing::sentence_by_id("running_inputs.jsonl", "solar");
  EXPECT_EQ(dependency_root(s), 5);
  const auto d = dependency_depths(s);
  EXPECT_EQ(d[5], 0);
  EXPECT_EQ(d[4], 1);
  EXPECT_EQ(d[0], 2);
  EXPECT_EQ(d[12], 1);
  EXPECT_EQ(d[10], 2);
}

}  // namespace
}  // namespace metaqa
