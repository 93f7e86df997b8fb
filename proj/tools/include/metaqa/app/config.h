#ifndef METAQA_APP_CONFIG_H_
#define METAQA_APP_CONFIG_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "metaqa/distractor.h"
#include "metaqa/error.h"
#include "metaqa/metaseq.h"

namespace metaqa::app {

// Everything a command needs. Empty input paths mean "not configured".
struct RunConfig {
  // inputs
  std::string msdip = "msdip.json";
  std::string pairs;
  std::string corpus;
  std::string questions;  // externally generated questions for `filter`
  std::string embeddings;
  std::string lexicon;
  std::string unigrams;
  std::string kb;
  // outputs
  std::string qaps = "qaps.jsonl";
  std::string teach = "teach_requests.jsonl";
  std::string distractors = "distractors.jsonl";
  std::string mcqs = "mcqs.jsonl";
  std::string verdicts = "verdicts.jsonl";

  MergeMode mode = MergeMode::kIdeal;
  double lo = kDefaultNeighborLo;
  double hi = kDefaultNeighborHi;
  uint64_t seed = 0;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string tagger;  // shell command: raw sentence on stdin, tagged JSON line on stdout
  std::string ui;      // directory served at /
  std::vector<std::string> disabled_rules;

  DistractorConfig distractor_config() const;
};

enum class PathKind { kPairs, kCorpus, kQuestions, kEmbeddings, kLexicon, kUnigrams, kKb, kMsdip, kQaps,
                      kDistractors };

// Throws Error(kConfig) naming the option when a required path is unset or
// missing on disk, or when numeric settings are out of range.
void require(const RunConfig& c, std::initializer_list<PathKind> paths);
void validate(const RunConfig& c);

// 0 success, 1 data error, 2 config error.
int exit_code(ErrorCode code);

}  // namespace metaqa::app

#endif  // METAQA_APP_CONFIG_H_
