#ifndef METAQA_APP_SERVICE_H_
#define METAQA_APP_SERVICE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "metaqa/app/config.h"
#include "metaqa/app/pipeline.h"
#include "metaqa/msdip.h"

namespace httplib {
class Server;
}

namespace metaqa::app {

// State behind the HTTP interface. Generation and reads work on immutable
// MSDIP snapshots; every store mutation goes through one writer lock, and
// each mutation that changes the store publishes a new snapshot.
//
// Methods take and return JSON bodies and throw Error on failure. Every
// response carries "msdip_version".
class TeachService {
 public:
  struct Options {
    MergeMode mode = MergeMode::kIdeal;
    std::string msdip_path;  // saved after each change when set
    uint64_t seed = 0;
    DistractorConfig distractors;
    std::string tagger;
  };

  TeachService(MsdipStore store, LoadedResources resources, Options options);

  std::shared_ptr<const MsdipStore> snapshot() const;
  uint64_t version() const { return snapshot()->version(); }

  // ?status=pending (default), taught, skipped or all; newest first.
  nlohmann::json list_teach(const std::string& status = "pending") const;
  // {interrogatives: [...], expected_version?}. Re-teaching a taught request
  // returns the earlier result without touching the store.
  nlohmann::json teach(const std::string& id, const nlohmann::json& body);
  // {declarative, interrogatives: [...], expected_version?}
  nlohmann::json teach_pair(const nlohmann::json& body);
  nlohmann::json skip(const std::string& id);
  // {sentences: [...]}
  nlohmann::json generate(const nlohmann::json& body);
  nlohmann::json list_qaps() const;
  // {verdict: accepted | rejected}
  nlohmann::json review(const std::string& id, const nlohmann::json& body);
  // MCQs for every QAP not rejected in review.
  nlohmann::json mcqs() const;
  nlohmann::json version_info() const;

 private:
  struct TeachState {
    TeachEntry entry;
    uint64_t seq = 0;
    std::optional<LearnResult> result;
  };
  struct QapState {
    Qap qap;
    std::string review = "pending";
    uint64_t version = 0;
  };

  TaggedSentence to_sentence(const nlohmann::json& v) const;
  std::vector<TaggedSentence> to_sentences(const nlohmann::json& list) const;
  void check_expected(const nlohmann::json& body, uint64_t current) const;
  // Caller holds writer_.
  LearnResult apply(const LearnedExample& ex);
  nlohmann::json teach_json(const TeachState& t) const;

  Options options_;
  LoadedResources resources_;

  mutable std::mutex snapshot_mu_;
  std::shared_ptr<const MsdipStore> snapshot_;
  std::mutex writer_;

  mutable std::shared_mutex state_mu_;
  std::map<std::string, TeachState> teach_;
  uint64_t teach_seq_ = 0;
  std::map<std::string, QapState> qaps_;
  std::map<std::string, TaggedSentence> sentences_;
};

// HTTP status for an error code.
int http_status(ErrorCode code);

void install_routes(httplib::Server& server, TeachService& service);

// Blocks until the server stops. Throws Error(kConfig) when the port is busy.
void serve(const RunConfig& c, std::ostream& log);

}  // namespace metaqa::app

#endif  // METAQA_APP_SERVICE_H_
