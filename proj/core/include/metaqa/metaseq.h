#ifndef METAQA_METASEQ_H_
#define METAQA_METASEQ_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metaqa/annotation.h"
#include "metaqa/preprocess.h"

namespace metaqa {

enum class MergeMode {
  kIdeal,         // phrase segmentation supplied upstream
  kPhrasalAware,  // no segmentation; prepositions/adverbs next to V kept apart
};

const char* merge_mode_name(MergeMode mode);
MergeMode parse_merge_mode(std::string_view name);

inline constexpr int kDefaultMergeBound = 3;

// Either an SSU or a literal interrogative pronoun ("What", "How many").
struct MetaElement {
  Ssu ssu;
  std::string pronoun;

  static MetaElement of(Ssu u) { return MetaElement{std::move(u), {}}; }
  static MetaElement of_pronoun(std::string p) { return MetaElement{{}, std::move(p)}; }

  bool is_pronoun() const { return !pronoun.empty(); }
  bool is_verb() const { return !is_pronoun() && ssu.sr == "V"; }
  friend bool operator==(const MetaElement&, const MetaElement&) = default;
};

struct MetaSequence {
  std::vector<MetaElement> elements;
  int r = kDefaultMergeBound;

  size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  bool has_pronoun() const;
  // Number of elements carrying SR tag `sr`.
  int count_sr(std::string_view sr) const;
};

std::string encode(const MetaSequence& m);
MetaSequence decode(std::string_view s, int r = kDefaultMergeBound);
std::string encode(const MetaElement& e);

// POS equivalence used during matching: nouns {NN, NNS, NNP, NNPS} collapse
// to NN, present-tense verbs {VBP, VBZ} to VBZ.
std::string canonical_pos(std::string_view pos);
bool equivalent(const Ssu& a, const Ssu& b);
bool equivalent(const MetaElement& a, const MetaElement& b);
// Canonical encoding: equal iff the elements are equivalent.
std::string canonical_key(const MetaElement& e);

// One basic unit of a clause before merging.
struct Unit {
  Ssu ssu;
  std::string text;
  std::string lemma;
  std::string pronoun;  // set for interrogative pronouns; ssu unused then
  int first = 0;        // clause token range
  int last = 0;
  bool sentence_initial = false;  // unit starts at the parent's first token
  bool proper_start = false;      // first token is a proper noun or "I"
};

struct UnitList {
  std::vector<Unit> units;
  std::vector<int> untagged;  // clause token indices outside every role
};

// One SSU per token (per phrase in ideal mode); punctuation is skipped. With
// `interrogative`, WH-tagged tokens become pronoun units.
UnitList to_units(const SimpleSentence& s, MergeMode mode = MergeMode::kIdeal,
                  bool interrogative = false);

struct TextEntry {
  Ssu ssu;
  int ordinal = 0;  // occurrence index of this exact SSU in the sequence
  std::string text;
  std::string lemma;
  bool sentence_initial = false;
  bool proper_start = false;
};

class SsuTextMap {
 public:
  void add(TextEntry e) { entries_.push_back(std::move(e)); }
  const std::vector<TextEntry>& entries() const { return entries_; }
  // Entry for element `index` of the owning sequence (pronouns excluded).
  const TextEntry* at_element(size_t ssu_index) const;
  std::string joined_text() const;

 private:
  std::vector<TextEntry> entries_;
};

struct Merged {
  MetaSequence sequence;
  SsuTextMap map;
};

// Collapses runs of same-SR units. Throws Error(kValidation) when an SR tag
// exceeds the bound r after merging.
Merged merge(const std::vector<Unit>& units, MergeMode mode, int r = kDefaultMergeBound);

}  // namespace metaqa

#endif  // METAQA_METASEQ_H_
