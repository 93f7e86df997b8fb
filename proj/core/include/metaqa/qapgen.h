#ifndef METAQA_QAPGEN_H_
#define METAQA_QAPGEN_H_

#include <array>
#include <string>
#include <vector>

#include "metaqa/annotation.h"
#include "metaqa/matcher.h"
#include "metaqa/metaseq.h"
#include "metaqa/msdip.h"

namespace metaqa {

struct Qap {
  std::string id;
  std::string question;
  std::string answer;
  std::string source;  // sentence id
  std::string md;      // md encoding of the pair used
  int mi_index = 0;
  MatchKind match_kind = MatchKind::kPerfect;
};

std::string qap_to_json(const Qap& q);
Qap parse_qap_json(std::string_view line);

// X_s elements that answer the question learned as (x, y).
//
// An X_s element answers when it is equivalent to an element of X' - Y'.
// For an answer element with no equivalent in X_s, X_s elements with the same
// SR tag that are absent from Y' stand in for it.
std::vector<size_t> answer_positions(const MetaSequence& x, const MetaSequence& y,
                                     const MetaSequence& x_s);

// Y_s for one (X, Y) pair and match. Answer elements are left out. Throws
// Error(kRejected) when the result has no V element.
MetaSequence synthesize_mi(const MetaSequence& x, const MetaSequence& y, const MetaSequence& x_s,
                           const MatchResult& match);

enum class Number { kSingular, kPlural };

// do/does/did for a subject number and the POS of the first V element.
std::string helping_verb(Number number, std::string_view tense_pos);
Number subject_number(const Ssu& subject, std::string_view subject_text);

// Question text for y_s against the map of x_s. Throws Error(kRejected) when
// an element has no text and cannot be resolved as a helping verb.
std::string realize_question(const MetaSequence& y_s, const MetaSequence& x_s,
                             const SsuTextMap& map);

std::string extract_answer(const MetaSequence& x, const MetaSequence& y, const MetaSequence& x_s,
                           const SsuTextMap& map);

struct TeachRequest {
  std::string sentence_id;
  int clause_index = 0;  // into segment(sentence).clauses
  std::string clause_text;
  std::string x_s;  // encoding
  MatchKind kind = MatchKind::kUnsuccessful;
  std::string best_md;  // empty if nothing matched at all
  size_t lcs_length = 0;
};

struct Rejection {
  std::string sentence_id;
  std::string reason;
};

struct GenerationResult {
  std::vector<Qap> qaps;
  std::vector<TeachRequest> teach_requests;
  std::vector<Rejection> rejections;
  // Clauses that reached matching, by the kind of their best match.
  std::array<size_t, 3> clause_kinds{};  // indexed by MatchKind
};

// Runs segmentation, merging, matching and synthesis for one sentence.
// Per-clause failures land in `rejections`; an empty store throws.
GenerationResult generate_qaps(const TaggedSentence& s, const MsdipStore& store, MergeMode mode);

// Same over a corpus; ids are "<sentence id>-q<n>".
GenerationResult generate_corpus(const std::vector<TaggedSentence>& corpus,
                                 const MsdipStore& store, MergeMode mode);

}  // namespace metaqa

#endif  // METAQA_QAPGEN_H_
