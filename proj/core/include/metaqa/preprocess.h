#ifndef METAQA_PREPROCESS_H_
#define METAQA_PREPROCESS_H_

#include <string>
#include <string_view>
#include <vector>

#include "metaqa/annotation.h"

namespace metaqa {

// A single-predicate clause cut out of a tagged sentence. `sentence` holds
// exactly one frame with spans rebased to the clause; `origin[i]` is the
// parent token index of clause token i.
struct SimpleSentence {
  std::string parent_id;
  std::string clause_role = "MAIN";
  TaggedSentence sentence;
  std::vector<int> origin;

  const SrlFrame& frame() const { return sentence.frames.front(); }
  std::string text() const { return sentence.text(); }
};

struct DiscardedClause {
  int frame_index = 0;
  std::string reason;
};

struct Segmentation {
  std::vector<SimpleSentence> clauses;
  std::vector<DiscardedClause> discarded;

  bool unsegmentable() const { return clauses.empty(); }
};

struct SuitabilityVerdict {
  bool suitable = true;
  std::vector<std::string> reasons;  // wh_start, verb_start, question_mark, missing_role, too_short
};

// Expands the contractions and slang listed for English preprocessing.
// Intended for raw text before it goes to the external tagger. Idempotent.
std::string normalize(std::string_view text);

// Subject: the lowest-numbered ArgN whose span precedes the predicate.
const Argument* subject_argument(const SrlFrame& frame);
// Object: any ArgN whose span follows the predicate.
const Argument* object_argument(const SrlFrame& frame);

// Cuts one clause per frame; clauses without both a subject and an object
// are discarded. The clause role is the role of the innermost argument of
// another frame that contains the clause's predicate, else MAIN.
Segmentation segment(const TaggedSentence& s);

// Whole sentence as a clause around one frame (used for interrogatives,
// which have no object argument when the object is the pronoun). Picks the
// frame whose predicate is the dependency root, else the first frame.
SimpleSentence whole_clause(const TaggedSentence& s);

// Drops CC-tagged (or listed conjunction) tokens in front of the subject.
SimpleSentence strip_leading_conjunction(const SimpleSentence& s);

SuitabilityVerdict assess_suitability(const TaggedSentence& s);

// Number of tokens that are neither stopwords nor punctuation.
int content_word_count(const TaggedSentence& s);

}  // namespace metaqa

#endif  // METAQA_PREPROCESS_H_
