#ifndef METAQA_MSDIP_H_
#define METAQA_MSDIP_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "metaqa/annotation.h"
#include "metaqa/metaseq.h"
#include "metaqa/preprocess.h"

namespace metaqa {

enum class PairOrigin { kSeed, kTaught, kImported };

const char* origin_name(PairOrigin origin);
PairOrigin parse_origin(std::string_view name);

// A declarative meta sequence with the interrogative ones learned for it.
struct MsdipPair {
  MetaSequence md;
  std::vector<MetaSequence> mis;
  PairOrigin origin = PairOrigin::kSeed;
  std::string created_at;
};

struct LearnResult {
  int new_mds = 0;
  int new_mis = 0;

  bool changed() const { return new_mds + new_mis > 0; }
};

// Meta sequences of one training example, before insertion.
struct LearnedExample {
  MetaSequence md;
  std::vector<MetaSequence> mis;
};

// One declarative sentence with the questions asked about it.
struct TrainingPair {
  TaggedSentence declarative;
  std::vector<TaggedSentence> interrogatives;
};

// JSONL records {"declarative": {...}, "interrogatives": [{...}, ...]}.
std::vector<TrainingPair> read_pair_corpus(std::istream& in);
std::vector<TrainingPair> read_pair_corpus(const std::string& path);
std::string training_pair_to_json(const TrainingPair& pair);
TrainingPair parse_training_pair(std::string_view line);

// Builds MD and MIs for a declarative sentence and its questions. Throws
// Error(kRejected) when the declarative is unsuitable or an interrogative
// has no pronoun.
LearnedExample build_example(const TaggedSentence& declarative,
                             const std::vector<TaggedSentence>& interrogatives, MergeMode mode);
// Same for one clause of a segmented declarative.
LearnedExample build_clause_example(const SimpleSentence& clause,
                                    const std::vector<TaggedSentence>& interrogatives, MergeMode mode);

// Pairs keyed and iterated by md encoding; the version counts mutations.
class MsdipStore {
 public:
  static constexpr int kFormatVersion = 1;

  LearnResult learn(const TaggedSentence& declarative,
                    const std::vector<TaggedSentence>& interrogatives, MergeMode mode,
                    PairOrigin origin = PairOrigin::kSeed, const std::string& created_at = {});
  // Inserts pre-built sequences (deduplicated by encoding).
  LearnResult insert(const LearnedExample& example, PairOrigin origin,
                     const std::string& created_at = {});

  const std::map<std::string, MsdipPair>& pairs() const { return pairs_; }
  const MsdipPair* find(const std::string& md_encoding) const;
  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  uint64_t version() const { return version_; }
  size_t mi_count() const;

  std::string to_json() const;
  static MsdipStore from_json(std::string_view text);
  void save(const std::string& path) const;
  static MsdipStore load(const std::string& path);

  friend bool operator==(const MsdipStore& a, const MsdipStore& b);

 private:
  std::map<std::string, MsdipPair> pairs_;
  uint64_t version_ = 0;
};

// UTC timestamp "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace metaqa

#endif  // METAQA_MSDIP_H_
