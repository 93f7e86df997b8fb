#include "metaqa/msdip.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metaqa/error.h"
#include "metaqa/preprocess.h"

namespace metaqa {

using json = nlohmann::ordered_json;

const char* origin_name(PairOrigin origin) {
  switch (origin) {
    case PairOrigin::kSeed: return "seed";
    case PairOrigin::kTaught: return "taught";
    case PairOrigin::kImported: return "imported";
  }
  return "seed";
}

PairOrigin parse_origin(std::string_view name) {
  if (name == "seed") return PairOrigin::kSeed;
  if (name == "taught") return PairOrigin::kTaught;
  if (name == "imported") return PairOrigin::kImported;
  throw Error(ErrorCode::kFormat, "unknown pair origin '" + std::string(name) + "'");
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

TrainingPair parse_training_pair(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("declarative") || !j.contains("interrogatives") ||
      !j["interrogatives"].is_array()) {
    throw Error(ErrorCode::kFormat, "pair record needs 'declarative' and 'interrogatives'");
  }
  TrainingPair pair;
  pair.declarative = parse_sentence_json(j["declarative"].dump());
  for (const auto& q : j["interrogatives"]) pair.interrogatives.push_back(parse_sentence_json(q.dump()));
  auto check = [](const TaggedSentence& s) {
    std::vector<std::string> problems = validate_sentence(s);
    if (!problems.empty()) {
      throw Error(ErrorCode::kValidation, "sentence '" + s.id + "': " + problems.front());
    }
  };
  check(pair.declarative);
  for (const auto& q : pair.interrogatives) check(q);
  return pair;
}

std::vector<TrainingPair> read_pair_corpus(std::istream& in) {
  std::vector<TrainingPair> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_training_pair(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<TrainingPair> read_pair_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open pair corpus '" + path + "'");
  try {
    return read_pair_corpus(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string training_pair_to_json(const TrainingPair& pair) {
  json j;
  j["declarative"] = json::parse(sentence_to_json(pair.declarative));
  json qs = json::array();
  for (const auto& q : pair.interrogatives) qs.push_back(json::parse(sentence_to_json(q)));
  j["interrogatives"] = std::move(qs);
  return j.dump();
}

LearnedExample build_example(const TaggedSentence& declarative,
                             const std::vector<TaggedSentence>& interrogatives, MergeMode mode) {
  SuitabilityVerdict verdict = assess_suitability(declarative);
  if (!verdict.suitable) {
    std::string reasons;
    for (const auto& r : verdict.reasons) reasons += (reasons.empty() ? "" : ",") + r;
    throw Error(ErrorCode::kRejected,
                "declarative '" + declarative.id + "' is unsuitable (" + reasons + ")");
  }
  Segmentation seg = segment(declarative);
  if (seg.unsegmentable()) {
    throw Error(ErrorCode::kRejected, "declarative '" + declarative.id + "' is unsegmentable");
  }
  return build_clause_example(seg.clauses.front(), interrogatives, mode);
}

LearnedExample build_clause_example(const SimpleSentence& clause,
                                    const std::vector<TaggedSentence>& interrogatives, MergeMode mode) {
  LearnedExample ex;
  ex.md = merge(to_units(strip_leading_conjunction(clause), mode).units, mode).sequence;
  if (ex.md.size() < 3) {
    throw Error(ErrorCode::kRejected,
                "declarative '" + clause.parent_id + "' yields a meta sequence shorter than 3");
  }
  for (const auto& q : interrogatives) {
    UnitList units = to_units(whole_clause(q), mode, /*interrogative=*/true);
    if (units.units.empty()) throw Error(ErrorCode::kRejected, "interrogative '" + q.id + "' is empty");
    MetaSequence mi = merge(units.units, mode).sequence;
    if (!mi.has_pronoun()) {
      throw Error(ErrorCode::kRejected, "interrogative '" + q.id + "' lacks a pronoun");
    }
    ex.mis.push_back(std::move(mi));
  }
  return ex;
}

LearnResult MsdipStore::insert(const LearnedExample& example, PairOrigin origin,
                               const std::string& created_at) {
  LearnResult result;
  const std::string key = encode(example.md);
  auto it = pairs_.find(key);
  if (it == pairs_.end()) {
    MsdipPair pair;
    pair.md = example.md;
    pair.origin = origin;
    pair.created_at = created_at.empty() ? utc_timestamp() : created_at;
    it = pairs_.emplace(key, std::move(pair)).first;
    ++result.new_mds;
  }
  for (const auto& mi : example.mis) {
    const std::string enc = encode(mi);
    bool present = false;
    for (const auto& existing : it->second.mis) present = present || encode(existing) == enc;
    if (present) continue;
    it->second.mis.push_back(mi);
    ++result.new_mis;
  }
  if (result.changed()) ++version_;
  return result;
}

LearnResult MsdipStore::learn(const TaggedSentence& declarative,
                              const std::vector<TaggedSentence>& interrogatives, MergeMode mode,
                              PairOrigin origin, const std::string& created_at) {
  return insert(build_example(declarative, interrogatives, mode), origin, created_at);
}

const MsdipPair* MsdipStore::find(const std::string& md_encoding) const {
  auto it = pairs_.find(md_encoding);
  return it == pairs_.end() ? nullptr : &it->second;
}

size_t MsdipStore::mi_count() const {
  size_t n = 0;
  for (const auto& [key, pair] : pairs_) n += pair.mis.size();
  return n;
}

std::string MsdipStore::to_json() const {
  json j;
  j["format_version"] = kFormatVersion;
  j["store_version"] = version_;
  json pairs = json::array();
  for (const auto& [key, pair] : pairs_) {
    json mis = json::array();
    for (const auto& mi : pair.mis) mis.push_back(encode(mi));
    pairs.push_back({{"md", key},
                     {"mis", std::move(mis)},
                     {"origin", origin_name(pair.origin)},
                     {"created_at", pair.created_at}});
  }
  j["pairs"] = std::move(pairs);
  return j.dump(2) + "\n";
}

MsdipStore MsdipStore::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kFormat,
                "MSDIP file is malformed at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    int format = j.at("format_version").get<int>();
    if (format != kFormatVersion) {
      throw Error(ErrorCode::kFormat, "MSDIP format version " + std::to_string(format) +
                                          " is not supported (expected " +
                                          std::to_string(kFormatVersion) + ")");
    }
    MsdipStore store;
    store.version_ = j.at("store_version").get<uint64_t>();
    for (const auto& p : j.at("pairs")) {
      MsdipPair pair;
      pair.md = decode(p.at("md").get<std::string>());
      for (const auto& mi : p.at("mis")) pair.mis.push_back(decode(mi.get<std::string>()));
      pair.origin = parse_origin(p.at("origin").get<std::string>());
      pair.created_at = p.value("created_at", std::string());
      std::string key = encode(pair.md);
      if (store.pairs_.count(key)) {
        throw Error(ErrorCode::kFormat, "duplicate MD '" + key + "' in MSDIP file");
      }
      store.pairs_.emplace(std::move(key), std::move(pair));
    }
    return store;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("MSDIP file is malformed: ") + e.what());
  }
}

void MsdipStore::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write '" + tmp + "'");
    out << to_json();
    if (!out) throw Error(ErrorCode::kIo, "write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw Error(ErrorCode::kIo, "cannot replace '" + path + "'");
  }
}

MsdipStore MsdipStore::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open MSDIP file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

bool operator==(const MsdipStore& a, const MsdipStore& b) {
  if (a.version_ != b.version_ || a.pairs_.size() != b.pairs_.size()) return false;
  auto it = b.pairs_.begin();
  for (const auto& [key, pair] : a.pairs_) {
    const MsdipPair& other = (it++)->second;
    if (key != encode(other.md) || pair.origin != other.origin ||
        pair.created_at != other.created_at || pair.mis.size() != other.mis.size()) {
      return false;
    }
    for (size_t i = 0; i < pair.mis.size(); ++i) {
      if (encode(pair.mis[i]) != encode(other.mis[i])) return false;
    }
  }
  return true;
}

}  // namespace metaqa
