#ifndef METAQA_ANNOTATION_H_
#define METAQA_ANNOTATION_H_

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metaqa {

// One token of an externally tagged sentence.
struct Token {
  std::string text;
  std::string lemma;
  std::string pos;  // Penn Treebank tag
  std::string ne;   // PER, ORG, LOC, DATE, ... or empty
};

// A half-open token range [start, end).
struct Span {
  int start = 0;
  int end = 0;

  int size() const { return end - start; }
  bool contains(int i) const { return i >= start && i < end; }
  bool contains(const Span& o) const { return o.start >= start && o.end <= end; }
  bool overlaps(const Span& o) const { return start < o.end && o.start < end; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Argument {
  std::string role;  // canonical PropBank role: ARG0..ARG5, V, TMP, CAU, ...
  Span span;
};

struct SrlFrame {
  int predicate = 0;
  std::vector<Argument> arguments;

  // Argument covering `token`, or nullptr.
  const Argument* argument_at(int token) const;
};

struct SourceRef {
  std::string article;
  int ordinal = 0;
};

// A sentence with all oracle annotations attached. `phrases` optionally
// lists basic units (phrasal verbs/nouns) found by an upstream phrase
// segmenter; they are only honoured in ideal merging mode.
struct TaggedSentence {
  std::string id;
  std::vector<Token> tokens;
  std::vector<SrlFrame> frames;
  std::vector<int> dep_heads;  // root points to itself (or -1)
  std::optional<std::string> constituency;
  SourceRef source;
  std::vector<Span> phrases;

  int size() const { return static_cast<int>(tokens.size()); }
  // Tokens joined with spaces, without a space before closing punctuation.
  std::string text() const;
  std::string text(Span span) const;
};

// 3-SSU: semantic role, part of speech, named-entity class.
struct Ssu {
  std::string sr;
  std::string pos;
  std::string ne;

  friend auto operator<=>(const Ssu&, const Ssu&) = default;
};

std::string encode_ssu(const Ssu& u);
// Inverse of encode_ssu; throws Error(kFormat) on anything but "a/b/c".
Ssu decode_ssu(std::string_view s);

// Maps tagger role spellings (ARGM-TMP, A0, R-ARG1, C-ARG0) onto the
// canonical role set; nullopt when the role is outside it.
std::optional<std::string> canonical_role(std::string_view role);
bool is_core_argument(std::string_view role);  // ARG0..ARG5
// Numeric index of ARGn, or -1.
int core_argument_index(std::string_view role);
bool is_penn_tag(std::string_view pos);

// Empty iff every TaggedSentence invariant holds.
std::vector<std::string> validate_sentence(const TaggedSentence& s);

// Root index of the dependency tree, and per-token depth (root depth 0).
// Both assume a valid tree.
int dependency_root(const TaggedSentence& s);
std::vector<int> dependency_depths(const TaggedSentence& s);

TaggedSentence parse_sentence_json(std::string_view line);
std::string sentence_to_json(const TaggedSentence& s);

// Reads a line-delimited corpus; every record is validated. Errors carry
// the line number, or the sentence id and the violated invariant.
std::vector<TaggedSentence> read_corpus(const std::string& path);
std::vector<TaggedSentence> read_corpus(std::istream& in);
void write_corpus(const std::vector<TaggedSentence>& sentences, std::ostream& out);
void write_corpus(const std::vector<TaggedSentence>& sentences, const std::string& path);

}  // namespace metaqa

#endif  // METAQA_ANNOTATION_H_
