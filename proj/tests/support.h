#ifndef METAQA_TESTS_SUPPORT_H_
#define METAQA_TESTS_SUPPORT_H_

#include <string>
#include <vector>

#include "metaqa/annotation.h"
#include "metaqa/msdip.h"

namespace metaqa::testing {

inline std::string data_path(const std::string& name) {
  return std::string(METAQA_TEST_DATA_DIR) + "/" + name;
}

inline std::string repo_data_path(const std::string& name) {
  return std::string(METAQA_REPO_DATA_DIR) + "/" + name;
}

inline MsdipStore learn_store(const std::string& pair_file, MergeMode mode) {
  MsdipStore store;
  for (const auto& p : read_pair_corpus(data_path(pair_file))) {
    store.learn(p.declarative, p.interrogatives, mode, PairOrigin::kSeed, "2020-01-01T00:00:00Z");
  }
  return store;
}

inline TaggedSentence sentence_by_id(const std::string& file, const std::string& id) {
  for (auto& s : read_corpus(data_path(file))) {
    if (s.id == id) return s;
  }
  throw std::runtime_error("no sentence " + id + " in " + file);
}

}  // namespace metaqa::testing

#endif  // METAQA_TESTS_SUPPORT_H_
