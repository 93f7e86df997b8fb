#ifndef METAQA_TP3_H_
#define METAQA_TP3_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metaqa/annotation.h"
#include "metaqa/resources.h"

namespace metaqa {

// Answer-selection (pre) and question-filtering (post) rules.
enum class Tp3Rule {
  kPreSuitability,   // pre1
  kPreRole,          // pre2
  kPrePos,           // pre3
  kPreCommon,        // pre4
  kPreClause,        // pre5
  kPreNesting,       // pre6
  kPostAnswerInQuestion,  // post1
  kPostShortQuestion,     // post2
  kPostUnsuitableSource,  // post3
};

inline constexpr std::array<Tp3Rule, 9> kAllTp3Rules = {
    Tp3Rule::kPreSuitability, Tp3Rule::kPreRole,   Tp3Rule::kPrePos,
    Tp3Rule::kPreCommon,      Tp3Rule::kPreClause, Tp3Rule::kPreNesting,
    Tp3Rule::kPostAnswerInQuestion, Tp3Rule::kPostShortQuestion, Tp3Rule::kPostUnsuitableSource};

// Stable identifiers: pre1_unsuitable, pre2_role, ...
const char* tp3_rule_id(Tp3Rule rule);
Tp3Rule parse_tp3_rule(std::string_view id);

class RuleSet {
 public:
  static RuleSet all() { return RuleSet(); }
  RuleSet& disable(Tp3Rule r);
  RuleSet& enable(Tp3Rule r);
  bool enabled(Tp3Rule r) const { return !(disabled_ & bit(r)); }

 private:
  static unsigned bit(Tp3Rule r) { return 1u << static_cast<unsigned>(r); }
  unsigned disabled_ = 0;
};

enum class CandidateKind { kNamedEntity, kRoleTagged };

struct AnswerCandidate {
  Span span;         // after pruning
  Span source_span;  // as first selected
  std::string text;
  CandidateKind kind = CandidateKind::kRoleTagged;
  std::string role;
  int frame = -1;     // frame whose argument covers the candidate
  double h_a = 0.0;   // mean dependency depth of the candidate tokens
  int h_s = 0;        // depth of the deepest token in the sentence
};

struct CandidateRemoval {
  AnswerCandidate candidate;
  Tp3Rule rule;
  std::string detail;
};

struct Selection {
  std::vector<AnswerCandidate> kept;
  std::vector<CandidateRemoval> removed;
};

// Rule 1 on the sentence, then rules 2-4.
Selection select_answers(const TaggedSentence& s, const UnigramTable& freq,
                         const RuleSet& rules = RuleSet::all());
// Rules 5-6 on the output of select_answers.
Selection filter_clause_and_nesting(const TaggedSentence& s, Selection in,
                                    const RuleSet& rules = RuleSet::all());
// select_answers followed by filter_clause_and_nesting.
Selection preprocess_answers(const TaggedSentence& s, const UnigramTable& freq,
                             const RuleSet& rules = RuleSet::all());

// Token index of the subtree root of `span`: the token whose head lies
// outside the span (the shallowest one, then the leftmost).
int subtree_root(const TaggedSentence& s, Span span);

// Bracketed constituency tree, e.g. "(S (NP (DT The)) ...)".
struct ParseNode {
  std::string label;
  std::string word;  // leaves only
  std::vector<ParseNode> children;

  bool leaf() const { return children.empty(); }
};

ParseNode parse_bracketed(std::string_view text);
std::vector<std::string> leaves(const ParseNode& tree);

// Splits off punctuation and clitics so answer strings line up with tree leaves.
std::vector<std::string> tokenize(std::string_view text);
// Joins tokens without a space before closing punctuation.
std::string detokenize(const std::vector<std::string>& tokens);

struct MainBody {
  std::string text;
  bool skipped = false;  // no tree, or the answer was not found in it
};

// Answer with every SBAR-rooted subtree removed. `constituency` may be the
// answer's own tree or one for a sentence containing the answer.
MainBody main_body(std::string_view answer, const std::optional<std::string>& constituency);

// Case-insensitive contiguous token match.
bool contains_tokens(std::string_view haystack, std::string_view needle);

struct ContextSentence {
  std::string text;
  bool suitable = true;
};

struct FilterVerdict {
  bool keep = true;
  std::optional<Tp3Rule> rule;
  std::string detail;
};

// Context sentences sharing the most words with question and answer.
struct Attribution {
  std::vector<size_t> best;  // all indices reaching the maximum
  size_t overlap = 0;
};
Attribution attribute(std::string_view question, std::string_view answer,
                      const std::vector<ContextSentence>& context);

FilterVerdict filter_question(std::string_view question, std::string_view answer,
                              const std::vector<ContextSentence>& context,
                              const std::optional<std::string>& constituency = std::nullopt,
                              const RuleSet& rules = RuleSet::all());

// Externally generated question.
struct ExternalQuestion {
  std::string question;
  std::string answer;
  std::string article;
  int sentence_ordinal = 0;
};

ExternalQuestion parse_external_question(std::string_view line);

// Previous, current and next sentence of the same article (missing
// neighbours are left out), with suitability from rule 1.
std::vector<ContextSentence> context_for(const std::vector<TaggedSentence>& corpus,
                                         const std::string& article, int ordinal,
                                         const TaggedSentence** middle = nullptr);

}  // namespace metaqa

#endif  // METAQA_TP3_H_
