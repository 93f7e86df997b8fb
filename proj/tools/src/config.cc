#include "metaqa/app/config.h"

#include <filesystem>

#include "metaqa/tp3.h"

namespace metaqa::app {

DistractorConfig RunConfig::distractor_config() const {
  DistractorConfig d;
  d.lo = lo;
  d.hi = hi;
  return d;
}

namespace {

struct PathOption {
  const char* flag;
  const std::string RunConfig::*member;
};

PathOption option_for(PathKind k) {
  switch (k) {
    case PathKind::kPairs: return {"--pairs", &RunConfig::pairs};
    case PathKind::kCorpus: return {"--corpus", &RunConfig::corpus};
    case PathKind::kQuestions: return {"--questions", &RunConfig::questions};
    case PathKind::kEmbeddings: return {"--embeddings", &RunConfig::embeddings};
    case PathKind::kLexicon: return {"--lexicon", &RunConfig::lexicon};
    case PathKind::kUnigrams: return {"--unigrams", &RunConfig::unigrams};
    case PathKind::kKb: return {"--kb", &RunConfig::kb};
    case PathKind::kMsdip: return {"--msdip", &RunConfig::msdip};
    case PathKind::kQaps: return {"--qaps", &RunConfig::qaps};
    case PathKind::kDistractors: return {"--distractors", &RunConfig::distractors};
  }
  return {"?", &RunConfig::corpus};
}

}  // namespace

void require(const RunConfig& c, std::initializer_list<PathKind> paths) {
  for (PathKind k : paths) {
    const PathOption o = option_for(k);
    const std::string& p = c.*o.member;
    if (p.empty()) throw Error(ErrorCode::kConfig, std::string(o.flag) + " is required");
    if (!std::filesystem::exists(p)) {
      throw Error(ErrorCode::kConfig, std::string(o.flag) + ": no such file '" + p + "'");
    }
  }
}

void validate(const RunConfig& c) {
  if (!(c.lo >= 0.0 && c.lo <= c.hi && c.hi <= 1.0)) {
    throw Error(ErrorCode::kConfig, "interval must satisfy 0 <= lo <= hi <= 1");
  }
  if (c.port < 0 || c.port > 65535) throw Error(ErrorCode::kConfig, "port out of range");
  for (const auto& r : c.disabled_rules) {
    try {
      parse_tp3_rule(r);
    } catch (const Error&) {
      throw Error(ErrorCode::kConfig, "unknown rule '" + r + "'");
    }
  }
  for (const std::string* opt : {&c.embeddings, &c.lexicon, &c.kb, &c.unigrams, &c.ui}) {
    if (!opt->empty() && !std::filesystem::exists(*opt)) {
      throw Error(ErrorCode::kConfig, "no such file '" + *opt + "'");
    }
  }
}

int exit_code(ErrorCode code) { return code == ErrorCode::kConfig ? 2 : 1; }

}  // namespace metaqa::app
