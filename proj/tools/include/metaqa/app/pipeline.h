#ifndef METAQA_APP_PIPELINE_H_
#define METAQA_APP_PIPELINE_H_

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metaqa/annotation.h"
#include "metaqa/app/config.h"
#include "metaqa/distractor.h"
#include "metaqa/qapgen.h"
#include "metaqa/resources.h"

namespace metaqa::app {

enum class TeachStatus { kPending, kTaught, kSkipped };
const char* teach_status_name(TeachStatus s);
TeachStatus parse_teach_status(std::string_view name);

// A teach request with the sentence it came from. Requests are keyed by the
// x_s encoding, so each unmatched pattern is taught once.
struct TeachEntry {
  std::string id;
  TeachRequest request;
  TaggedSentence sentence;
  TeachStatus status = TeachStatus::kPending;
  size_t occurrences = 1;
};

// "t-" plus 12 hex digits of a hash of the x_s encoding.
std::string teach_request_id(std::string_view x_s);
std::string teach_entry_to_json(const TeachEntry& t);
TeachEntry parse_teach_entry(std::string_view line);

// Folds requests into `entries` keyed by id, counting repeats. Returns the
// ids that were new.
std::vector<std::string> merge_teach_requests(std::map<std::string, TeachEntry>& entries,
                                              std::vector<std::string>& order,
                                              const std::vector<TeachRequest>& requests,
                                              const std::map<std::string, const TaggedSentence*>& by_id);

// Sentences by id and by article (ordinal order).
class CorpusIndex {
 public:
  explicit CorpusIndex(const std::vector<TaggedSentence>& corpus);
  const TaggedSentence* find(const std::string& id) const;
  std::vector<TaggedSentence> article_of(const TaggedSentence& s) const;
  const std::map<std::string, const TaggedSentence*>& by_id() const { return by_id_; }

 private:
  std::map<std::string, const TaggedSentence*> by_id_;
  std::map<std::string, std::vector<const TaggedSentence*>> by_article_;
};

struct LoadedResources {
  std::optional<EmbeddingTable> embeddings;
  std::optional<LexicalGraph> lexicon;
  std::optional<EntityKB> kb;

  DistractorResources view() const;
};

// Loads whatever the config names.
LoadedResources load_resources(const RunConfig& c);

// Distractors for one QAP; the answer is located in its source sentence and
// article entities come from the same article. Throws Error(kNotFound) when
// the source or the answer cannot be found.
DistractorSet distract_qap(const Qap& q, const CorpusIndex& corpus, const DistractorResources& res,
                           const DistractorConfig& config, uint64_t global_seed);

struct LearnStats {
  size_t pairs_read = 0;
  size_t mds_added = 0;
  size_t mis_added = 0;
};

struct GenerateStats {
  size_t sentences = 0;
  size_t failed_sentences = 0;
  size_t qaps = 0;
  size_t teach_requests = 0;  // after deduplication
  size_t rejections = 0;
  std::array<size_t, 3> kinds{};  // clauses by MatchKind
};

struct FilterStats {
  size_t read = 0;
  size_t kept = 0;
  std::map<std::string, size_t> dropped;  // by rule id
};

struct DistractStats {
  size_t qaps = 0;
  size_t complete = 0;
  size_t partial = 0;
  size_t failed = 0;
};

struct AssembleStats {
  size_t qaps = 0;
  size_t mcqs = 0;
  size_t skipped = 0;
};

// Each prints a one-line summary to `out` and per-item problems to `log`.
LearnStats cmd_learn(const RunConfig& c, std::ostream& out, std::ostream& log);
GenerateStats cmd_generate(const RunConfig& c, std::ostream& out, std::ostream& log);
FilterStats cmd_filter(const RunConfig& c, std::ostream& out, std::ostream& log);
DistractStats cmd_distract(const RunConfig& c, std::ostream& out, std::ostream& log);
AssembleStats cmd_assemble(const RunConfig& c, std::ostream& out, std::ostream& log);

std::vector<Qap> read_qaps(const std::string& path);

}  // namespace metaqa::app

#endif  // METAQA_APP_PIPELINE_H_
