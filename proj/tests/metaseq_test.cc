#include <gtest/gtest.h>

#include <random>

#include "metaqa/error.h"
#include "metaqa/metaseq.h"
#include "metaqa/text.h"
#include "support.h"

namespace metaqa {
namespace {

using testing::sentence_by_id;

std::vector<std::string> unit_listing(const UnitList& l) {
  std::vector<std::string> out;
  for (const auto& u : l.units) out.push_back(u.text + " (" + encode_ssu(u.ssu) + ")");
  return out;
}

Merged merged_clause(const std::string& file, const std::string& id, MergeMode mode) {
  const auto clauses = segment(sentence_by_id(file, id)).clauses;
  return merge(to_units(clauses.at(0), mode).units, mode);
}

TEST(Units, LincolnListing) {
  const auto units = to_units(segment(sentence_by_id("lincoln.jsonl", "lincoln")).clauses.at(0));
  EXPECT_TRUE(units.untagged.empty());
  EXPECT_EQ(unit_listing(units),
            (std::vector<std::string>{"Abraham (ARG1/NNP/PER)", "Lincoln (ARG1/NNP/PER)", "was (V/VBZ/)",
                                      "the (ARG2/DT/)", "16th (ARG2/JJ/)", "president (ARG2/NN/)",
                                      "of (ARG2/IN/)", "the (ARG2/DT/)", "United (ARG2/NNP/LOC)",
                                      "States (ARG2/NNP/LOC)"}));
}

TEST(Units, JohnPhrasalAware) {
  const auto pairs = read_pair_corpus(testing::data_path("john_pairs.jsonl"));
  const auto clause = segment(pairs[0].declarative).clauses.at(0);
  const auto units = to_units(clause, MergeMode::kPhrasalAware);
  EXPECT_EQ(unit_listing(units),
            (std::vector<std::string>{"John (ARG0/NNP/PER)", "traveled (V/VBD/)", "to (ARG1/IN/)",
                                      "Boston (ARG1/NNP/LOC)", "last (TMP/NN/)", "week (TMP/NN/)"}));
  const auto ideal = to_units(clause, MergeMode::kIdeal);
  ASSERT_EQ(ideal.units.size(), 5u);
  EXPECT_EQ(ideal.units[1].text, "traveled to");
  EXPECT_EQ(ideal.units[1].lemma, "travel to");
}

TEST(Units, UntaggedResidue) {
  TaggedSentence s;
  s.id = "residue";
  s.tokens = {Token{"Go", "go", "VB", ""}, Token{"now", "now", "RB", ""}};
  s.frames = {SrlFrame{0, {}}};
  s.dep_heads = {0, 0};
  SimpleSentence c = whole_clause(s);
  const auto units = to_units(c);
  EXPECT_EQ(units.untagged, std::vector<int>{1});
  ASSERT_EQ(units.units.size(), 1u);
  EXPECT_EQ(units.units[0].ssu.sr, "V");
}

TEST(Merge, Lincoln) {
  const auto m = merged_clause("lincoln.jsonl", "lincoln", MergeMode::kIdeal);
  EXPECT_EQ(encode(m.sequence), "ARG1/NNP/PER V/VBZ/ ARG2/NNP/LOC");
  EXPECT_EQ(m.map.joined_text(), "Abraham Lincoln was the 16th president of the United States");
}

TEST(Merge, JohnBothModes) {
  const auto pairs = read_pair_corpus(testing::data_path("john_pairs.jsonl"));
  const auto clause = segment(pairs[0].declarative).clauses.at(0);
  const auto ideal = merge(to_units(clause, MergeMode::kIdeal).units, MergeMode::kIdeal);
  EXPECT_EQ(encode(ideal.sequence), "ARG0/NNP/PER V/VBD/ ARG1/NNP/LOC TMP/NN/");
  const auto pa = merge(to_units(clause, MergeMode::kPhrasalAware).units, MergeMode::kPhrasalAware);
  EXPECT_EQ(encode(pa.sequence), "ARG0/NNP/PER V/VBD/ ARG1/IN/ ARG1/NNP/LOC TMP/NN/");
  EXPECT_EQ(pa.map.entries()[2].text, "to");
  EXPECT_EQ(pa.map.entries()[3].text, "Boston");
}

TEST(Merge, RightmostNounAndNamedEntity) {
  std::vector<Unit> units(3);
  units[0].ssu = {"ARG1", "NNP", "PER"};
  units[0].text = "Smith";
  units[1].ssu = {"ARG1", "NN", ""};
  units[1].text = "report";
  units[2].ssu = {"ARG1", "IN", ""};
  units[2].text = "about";
  for (auto& u : units) u.lemma = to_lower(u.text);
  const auto m = merge(units, MergeMode::kIdeal);
  EXPECT_EQ(encode(m.sequence), "ARG1/NN/PER");
  units[1].ssu.pos = "JJ";
  EXPECT_EQ(encode(merge(units, MergeMode::kIdeal).sequence), "ARG1/NNP/PER");
  units[0].ssu.pos = "DT";
  EXPECT_EQ(encode(merge(units, MergeMode::kIdeal).sequence), "ARG1/IN/PER");
}

TEST(Merge, BoundViolationNamesTheTag) {
  std::vector<Unit> units;
  for (const char* sr : {"TMP", "V", "TMP", "ARG0", "TMP", "ARG1", "TMP"}) {
    Unit u;
    u.ssu = {sr, "NN", ""};
    u.text = u.lemma = "w";
    units.push_back(u);
  }
  try {
    merge(units, MergeMode::kIdeal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidation);
    EXPECT_NE(std::string(e.what()).find("TMP"), std::string::npos);
  }
  EXPECT_NO_THROW(merge(units, MergeMode::kIdeal, 4));
  EXPECT_THROW(merge({}, MergeMode::kIdeal), Error);
}

TEST(Encoding, Forms) {
  EXPECT_EQ(encode(MetaElement::of({"ARG1", "NNP", "PER"})), "ARG1/NNP/PER");
  EXPECT_EQ(encode(MetaElement::of({"V", "VBZ", ""})), "V/VBZ/");
  EXPECT_EQ(encode(MetaElement::of({"ARG1", "", ""})), "ARG1//");
  const auto m = decode("How many V/VBD/ ARG0/NNP/PER V/VB/");
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m.elements[0].pronoun, "How many");
  EXPECT_EQ(encode(m), "How many V/VBD/ ARG0/NNP/PER V/VB/");
  EXPECT_TRUE(m.has_pronoun());
  EXPECT_EQ(m.count_sr("V"), 2);
}

TEST(Equivalence, PosClasses) {
  for (const char* p : {"NN", "NNS", "NNP", "NNPS"}) EXPECT_EQ(canonical_pos(p), "NN");
  EXPECT_EQ(canonical_pos("VBP"), "VBZ");
  EXPECT_EQ(canonical_pos("VBD"), "VBD");
  EXPECT_TRUE(equivalent(Ssu{"ARG1", "NNS", ""}, Ssu{"ARG1", "NNP", ""}));
  EXPECT_FALSE(equivalent(Ssu{"ARG1", "NNP", "PER"}, Ssu{"ARG1", "NNP", ""}));
  EXPECT_FALSE(equivalent(Ssu{"ARG1", "NN", ""}, Ssu{"ARG2", "NN", ""}));
  EXPECT_TRUE(equivalent(MetaElement::of_pronoun("What"), MetaElement::of_pronoun("What")));
  EXPECT_FALSE(equivalent(MetaElement::of_pronoun("What"), MetaElement::of_pronoun("Who")));
}

// Random units drawn from a small tag vocabulary.
std::vector<Unit> random_units(std::mt19937& rng) {
  static const std::vector<std::string> sr = {"ARG0", "ARG1", "ARG2", "V", "TMP", "LOC", "CAU"};
  static const std::vector<std::string> pos = {"NN", "NNP", "IN", "RB", "DT", "VBZ", "JJ", "RBR"};
  static const std::vector<std::string> ne = {"", "", "PER", "LOC"};
  std::vector<Unit> units(1 + rng() % 14);
  for (size_t i = 0; i < units.size(); ++i) {
    units[i].ssu = {sr[rng() % sr.size()], pos[rng() % pos.size()], ne[rng() % ne.size()]};
    units[i].text = "w" + std::to_string(i);
    units[i].lemma = units[i].text;
  }
  return units;
}

TEST(Properties, NoConsecutiveSameRoleInIdealMode) {
  std::mt19937 rng(1);
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto units = random_units(rng);
    Merged m;
    try {
      m = merge(units, MergeMode::kIdeal, 20);
    } catch (const Error&) {
      FAIL() << "bound 20 cannot be exceeded by 14 units";
    }
    for (size_t i = 1; i < m.sequence.size(); ++i) {
      ASSERT_NE(m.sequence.elements[i].ssu.sr, m.sequence.elements[i - 1].ssu.sr);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 10000);
}

TEST(Properties, PhrasalExceptionsSitNextToTheVerb) {
  std::mt19937 rng(2);
  auto particle = [](const std::string& p) { return p == "IN" || p == "RB" || p == "RBR" || p == "RBS"; };
  for (int trial = 0; trial < 5000; ++trial) {
    const auto units = random_units(rng);
    const auto m = merge(units, MergeMode::kPhrasalAware, 20);
    const auto& el = m.sequence.elements;
    for (size_t i = 1; i < el.size(); ++i) {
      if (el[i].ssu.sr != el[i - 1].ssu.sr) continue;
      // One of the pair is a particle group on the far side of a V element.
      const bool left = particle(el[i - 1].ssu.pos) && i >= 2 && el[i - 2].is_verb();
      const bool right = particle(el[i].ssu.pos) && i + 1 < el.size() && el[i + 1].is_verb();
      EXPECT_TRUE(left || right)
          << encode(m.sequence);
    }
  }
}

TEST(Properties, EncodingRoundTripAndTextMap) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto units = random_units(rng);
    for (MergeMode mode : {MergeMode::kIdeal, MergeMode::kPhrasalAware}) {
      const auto m = merge(units, mode, 20);
      EXPECT_EQ(encode(decode(encode(m.sequence), 20)), encode(m.sequence));
      EXPECT_EQ(decode(encode(m.sequence), 20).elements, m.sequence.elements);
      std::string text;
      for (const auto& u : units) text += (text.empty() ? "" : " ") + u.text;
      EXPECT_EQ(m.map.joined_text(), text);
      ASSERT_EQ(m.map.entries().size(), m.sequence.size());
    }
  }
}

TEST(Properties, RunningSentencesMapBackToClauseText) {
  for (const char* f : {"running_inputs.jsonl", "lincoln.jsonl", "mary.jsonl", "tp3_sentences.jsonl"}) {
    for (const auto& s : read_corpus(testing::data_path(f))) {
      for (const auto& clause : segment(s).clauses) {
        for (MergeMode mode : {MergeMode::kIdeal, MergeMode::kPhrasalAware}) {
          const auto units = to_units(clause, mode);
          // Tagged tokens in order; spacing around clitics is not compared.
          std::string words;
          for (int i = 0; i < clause.sentence.size(); ++i) {
            const auto& t = clause.sentence.tokens[i];
            const bool untagged = std::find(units.untagged.begin(), units.untagged.end(), i) != units.untagged.end();
            if (!is_punctuation_tag(t.pos) && !untagged) words += t.text;
          }
          const auto m = merge(units.units, mode, 10);
          std::string joined = m.map.joined_text();
          std::erase(joined, ' ');
          EXPECT_EQ(joined, words) << s.id;
        }
      }
    }
  }
}

TEST(Modes, NameRoundTrip) {
  EXPECT_EQ(parse_merge_mode("ideal"), MergeMode::kIdeal);
  EXPECT_EQ(parse_merge_mode(merge_mode_name(MergeMode::kPhrasalAware)), MergeMode::kPhrasalAware);
  EXPECT_THROW(parse_merge_mode("fuzzy"), Error);
}

}  // namespace
}  // namespace metaqa
