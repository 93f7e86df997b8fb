#ifndef METAQA_MATCHER_H_
#define METAQA_MATCHER_H_

#include <string>
#include <vector>

#include "metaqa/metaseq.h"
#include "metaqa/msdip.h"

namespace metaqa {

enum class MatchKind { kPerfect, kSuccessful, kUnsuccessful };

const char* match_kind_name(MatchKind kind);
// Throws Error(kFormat) for anything but the three names.
MatchKind parse_match_kind(std::string_view name);

// Position of the LCS inside both inputs.
struct LcsPosition {
  size_t start_a = 0;
  size_t start_b = 0;
  size_t length = 0;
};

// Longest run of elements common to `a` and `b` under equivalence.
LcsPosition lcs_positions(const MetaSequence& a, const MetaSequence& b);
// The run itself, taken from `a`.
MetaSequence lcs(const MetaSequence& a, const MetaSequence& b);

// Subject, predicate and object present in `z`.
bool has_subject_predicate_object(const MetaSequence& z);

MatchKind classify(const MetaSequence& x, const MetaSequence& x_s, const MetaSequence& z);

struct MatchResult {
  const MsdipPair* pair = nullptr;
  MetaSequence z;
  MatchKind kind = MatchKind::kUnsuccessful;
  size_t z_start_x = 0;    // Z's offset inside the MD
  size_t z_start_x_s = 0;  // Z's offset inside X_s
  std::vector<MetaElement> before_z;  // X_s elements left of Z, in order
  std::vector<MetaElement> after_z;   // X_s elements right of Z, in order

  bool usable() const { return kind != MatchKind::kUnsuccessful; }
  bool needs_teaching() const { return kind != MatchKind::kPerfect; }
};

MatchResult match_pair(const MsdipPair& pair, const MetaSequence& x_s);

struct BestMatch {
  std::vector<MatchResult> group;  // equal-length LCS, ordered by md encoding

  MatchKind kind() const { return group.empty() ? MatchKind::kUnsuccessful : group.front().kind; }
  bool needs_teaching() const;
};

// Pairs sharing the longest LCS with x_s. When any of them is a perfect match
// only the perfect ones are kept. Throws Error(kNotFound) on an empty store.
BestMatch best_match(const MetaSequence& x_s, const MsdipStore& store);

// Set difference under equivalence, keeping a's order and dropping repeats.
std::vector<MetaElement> set_difference(const std::vector<MetaElement>& a,
                                        const std::vector<MetaElement>& b);
std::vector<MetaElement> set_intersection(const std::vector<MetaElement>& a,
                                          const std::vector<MetaElement>& b);
bool same_set(const std::vector<MetaElement>& a, const std::vector<MetaElement>& b);

// Checks X'_s - Z' == X'_s - X' for one match. Diagnostic only.
bool set_identity_holds(const MetaSequence& x, const MetaSequence& x_s, const MetaSequence& z);

}  // namespace metaqa

#endif  // METAQA_MATCHER_H_
