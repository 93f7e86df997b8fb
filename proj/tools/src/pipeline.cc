#include "metaqa/app/pipeline.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "metaqa/error.h"
#include "metaqa/msdip.h"
#include "metaqa/text.h"
#include "metaqa/tp3.h"

namespace metaqa::app {

using json = nlohmann::json;

const char* teach_status_name(TeachStatus s) {
  switch (s) {
    case TeachStatus::kPending: return "pending";
    case TeachStatus::kTaught: return "taught";
    case TeachStatus::kSkipped: return "skipped";
  }
  return "pending";
}

TeachStatus parse_teach_status(std::string_view name) {
  for (TeachStatus s : {TeachStatus::kPending, TeachStatus::kTaught, TeachStatus::kSkipped}) {
    if (name == teach_status_name(s)) return s;
  }
  throw Error(ErrorCode::kFormat, "unknown teach status '" + std::string(name) + "'");
}

std::string teach_request_id(std::string_view x_s) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%012llx",
                static_cast<unsigned long long>(seed_for(x_s, 0) & 0xffffffffffffull));
  return std::string("t-") + buf;
}

std::string teach_entry_to_json(const TeachEntry& t) {
  const TeachRequest& r = t.request;
  json j = {{"id", t.id},
            {"status", teach_status_name(t.status)},
            {"sentence_id", r.sentence_id},
            {"clause_index", r.clause_index},
            {"clause_text", r.clause_text},
            {"x_s", r.x_s},
            {"best_match", {{"md", r.best_md}, {"kind", match_kind_name(r.kind)}, {"lcs_length", r.lcs_length}}},
            {"occurrences", t.occurrences},
            {"sentence", json::parse(sentence_to_json(t.sentence))}};
  return j.dump();
}

TeachEntry parse_teach_entry(std::string_view line) {
  try {
    json j = json::parse(line);
    TeachEntry t;
    t.id = j.at("id").get<std::string>();
    t.status = parse_teach_status(j.at("status").get<std::string>());
    t.request.sentence_id = j.at("sentence_id").get<std::string>();
    t.request.clause_index = j.value("clause_index", 0);
    t.request.clause_text = j.value("clause_text", "");
    t.request.x_s = j.at("x_s").get<std::string>();
    const json& b = j.at("best_match");
    t.request.best_md = b.value("md", "");
    t.request.kind = parse_match_kind(b.at("kind").get<std::string>());
    t.request.lcs_length = b.value("lcs_length", size_t{0});
    t.occurrences = j.value("occurrences", size_t{1});
    t.sentence = parse_sentence_json(j.at("sentence").dump());
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed teach request: ") + e.what());
  }
}

std::vector<std::string> merge_teach_requests(std::map<std::string, TeachEntry>& entries,
                                              std::vector<std::string>& order,
                                              const std::vector<TeachRequest>& requests,
                                              const std::map<std::string, const TaggedSentence*>& by_id) {
  std::vector<std::string> added;
  for (const auto& r : requests) {
    const std::string id = teach_request_id(r.x_s);
    if (auto it = entries.find(id); it != entries.end()) {
      ++it->second.occurrences;
      continue;
    }
    TeachEntry t;
    t.id = id;
    t.request = r;
    if (auto s = by_id.find(r.sentence_id); s != by_id.end()) t.sentence = *s->second;
    entries.emplace(id, std::move(t));
    order.push_back(id);
    added.push_back(id);
  }
  return added;
}

CorpusIndex::CorpusIndex(const std::vector<TaggedSentence>& corpus) {
  for (const auto& s : corpus) {
    by_id_.emplace(s.id, &s);
    if (!s.source.article.empty()) by_article_[s.source.article].push_back(&s);
  }
  for (auto& [_, v] : by_article_) {
    std::stable_sort(v.begin(), v.end(),
                     [](const auto* a, const auto* b) { return a->source.ordinal < b->source.ordinal; });
  }
}

const TaggedSentence* CorpusIndex::find(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : it->second;
}

std::vector<TaggedSentence> CorpusIndex::article_of(const TaggedSentence& s) const {
  auto it = by_article_.find(s.source.article);
  if (s.source.article.empty() || it == by_article_.end()) return {s};
  std::vector<TaggedSentence> out;
  for (const auto* p : it->second) out.push_back(*p);
  return out;
}

DistractorResources LoadedResources::view() const {
  return {embeddings ? &*embeddings : nullptr, lexicon ? &*lexicon : nullptr, kb ? &*kb : nullptr};
}

LoadedResources load_resources(const RunConfig& c) {
  LoadedResources r;
  if (!c.embeddings.empty()) r.embeddings = EmbeddingTable::load(c.embeddings);
  if (!c.lexicon.empty()) r.lexicon = LexicalGraph::load(c.lexicon);
  if (!c.kb.empty()) r.kb = EntityKB::load(c.kb);
  return r;
}

DistractorSet distract_qap(const Qap& q, const CorpusIndex& corpus, const DistractorResources& res,
                           const DistractorConfig& config, uint64_t global_seed) {
  const TaggedSentence* s = corpus.find(q.source);
  if (s == nullptr) throw Error(ErrorCode::kNotFound, "QAP '" + q.id + "': no sentence '" + q.source + "'");
  const auto span = locate_answer(*s, q.answer);
  if (!span) {
    throw Error(ErrorCode::kNotFound, "QAP '" + q.id + "': answer '" + q.answer + "' not in its sentence");
  }
  return generate_distractors(answer_context(*s, *span), article_entities(corpus.article_of(*s)), res, config,
                              seed_for(q.id, global_seed));
}

namespace {

class LineWriter {
 public:
  explicit LineWriter(const std::string& path) : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  }
  void operator()(const std::string& line) { out_ << line << '\n'; }
  void close() {
    out_.close();
    if (!out_) throw Error(ErrorCode::kIo, "write to '" + path_ + "' failed");
  }

 private:
  std::string path_;
  std::ofstream out_;
};

// Calls f(line, line_no) for each non-blank line.
template <class F>
void for_each_line(const std::string& path, F f) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (trim(line).empty()) continue;
    f(line, no);
  }
}

std::string located(const std::string& path, int line, const std::string& what) {
  return path + ":" + std::to_string(line) + ": " + what;
}

}  // namespace

std::vector<Qap> read_qaps(const std::string& path) {
  std::vector<Qap> out;
  for_each_line(path, [&](const std::string& line, int no) {
    try {
      out.push_back(parse_qap_json(line));
    } catch (const Error& e) {
      throw Error(e.code(), located(path, no, e.what()));
    }
  });
  return out;
}

LearnStats cmd_learn(const RunConfig& c, std::ostream& out, std::ostream&) {
  require(c, {PathKind::kPairs});
  validate(c);
  MsdipStore store = std::filesystem::exists(c.msdip) ? MsdipStore::load(c.msdip) : MsdipStore();
  const auto pairs = read_pair_corpus(c.pairs);
  const std::string now = utc_timestamp();
  LearnStats st;
  for (size_t i = 0; i < pairs.size(); ++i) {
    try {
      const LearnResult r = store.learn(pairs[i].declarative, pairs[i].interrogatives, c.mode, PairOrigin::kSeed, now);
      st.mds_added += r.new_mds;
      st.mis_added += r.new_mis;
    } catch (const Error& e) {
      throw Error(e.code(), c.pairs + ": pair " + std::to_string(i + 1) + " ('" + pairs[i].declarative.id +
                                "'): " + e.what());
    }
  }
  st.pairs_read = pairs.size();
  store.save(c.msdip);
  out << "pairs read " << st.pairs_read << ", MDs added " << st.mds_added << ", MIs added " << st.mis_added
      << ", store " << store.size() << " MDs / " << store.mi_count() << " MIs\n";
  return st;
}

GenerateStats cmd_generate(const RunConfig& c, std::ostream& out, std::ostream& log) {
  require(c, {PathKind::kMsdip, PathKind::kCorpus});
  validate(c);
  const MsdipStore store = MsdipStore::load(c.msdip);
  if (store.empty()) throw Error(ErrorCode::kNotFound, c.msdip + ": MSDIP store is empty");

  GenerateStats st;
  std::vector<TaggedSentence> corpus;
  for_each_line(c.corpus, [&](const std::string& line, int no) {
    ++st.sentences;
    try {
      TaggedSentence s = parse_sentence_json(line);
      const auto problems = validate_sentence(s);
      if (!problems.empty()) throw Error(ErrorCode::kValidation, "sentence '" + s.id + "': " + problems.front());
      corpus.push_back(std::move(s));
    } catch (const Error& e) {
      ++st.failed_sentences;
      log << located(c.corpus, no, e.what()) << '\n';
    }
  });

  const CorpusIndex index(corpus);
  std::map<std::string, TeachEntry> entries;
  std::vector<std::string> order;
  LineWriter qaps(c.qaps);
  for (const auto& s : corpus) {
    GenerationResult r;
    try {
      r = generate_qaps(s, store, c.mode);
    } catch (const Error& e) {
      ++st.failed_sentences;
      log << s.id << ": " << e.what() << '\n';
      continue;
    }
    for (const auto& q : r.qaps) qaps(qap_to_json(q));
    st.qaps += r.qaps.size();
    st.rejections += r.rejections.size();
    for (const auto& rej : r.rejections) log << rej.sentence_id << ": " << rej.reason << '\n';
    for (size_t k = 0; k < st.kinds.size(); ++k) st.kinds[k] += r.clause_kinds[k];
    merge_teach_requests(entries, order, r.teach_requests, index.by_id());
  }
  qaps.close();

  LineWriter teach(c.teach);
  for (const auto& id : order) teach(teach_entry_to_json(entries.at(id)));
  teach.close();
  st.teach_requests = order.size();

  out << "sentences " << st.sentences << " (failed " << st.failed_sentences << "), clauses perfect "
      << st.kinds[0] << " successful " << st.kinds[1] << " unsuccessful " << st.kinds[2] << ", QAPs " << st.qaps
      << ", teach requests " << st.teach_requests << ", rejections " << st.rejections << '\n';
  return st;
}

FilterStats cmd_filter(const RunConfig& c, std::ostream& out, std::ostream& log) {
  require(c, {PathKind::kQuestions, PathKind::kCorpus});
  validate(c);
  RuleSet rules = RuleSet::all();
  for (const auto& r : c.disabled_rules) rules.disable(parse_tp3_rule(r));
  const auto corpus = read_corpus(c.corpus);

  FilterStats st;
  LineWriter verdicts(c.verdicts);
  for_each_line(c.questions, [&](const std::string& line, int no) {
    ++st.read;
    try {
      const ExternalQuestion q = parse_external_question(line);
      const TaggedSentence* middle = nullptr;
      const auto context = context_for(corpus, q.article, q.sentence_ordinal, &middle);
      const FilterVerdict v = filter_question(q.question, q.answer, context, middle->constituency, rules);
      json j = {{"question", q.question}, {"answer", q.answer}, {"article", q.article},
                {"sentence_ordinal", q.sentence_ordinal}, {"keep", v.keep},
                {"rule", v.rule ? tp3_rule_id(*v.rule) : ""}, {"detail", v.detail}};
      verdicts(j.dump());
      if (v.keep) {
        ++st.kept;
      } else {
        ++st.dropped[v.rule ? tp3_rule_id(*v.rule) : "unknown"];
      }
    } catch (const Error& e) {
      ++st.dropped["error"];
      log << located(c.questions, no, e.what()) << '\n';
    }
  });
  verdicts.close();
  out << "questions " << st.read << ", kept " << st.kept;
  for (const auto& [rule, n] : st.dropped) out << ", " << rule << " " << n;
  out << '\n';
  return st;
}

DistractStats cmd_distract(const RunConfig& c, std::ostream& out, std::ostream& log) {
  require(c, {PathKind::kQaps, PathKind::kCorpus, PathKind::kEmbeddings, PathKind::kLexicon});
  validate(c);
  const auto qaps = read_qaps(c.qaps);
  const auto corpus = read_corpus(c.corpus);
  const CorpusIndex index(corpus);
  const LoadedResources res = load_resources(c);
  const DistractorConfig cfg = c.distractor_config();

  DistractStats st;
  LineWriter lines(c.distractors);
  for (const auto& q : qaps) {
    ++st.qaps;
    try {
      const DistractorSet d = distract_qap(q, index, res.view(), cfg, c.seed);
      lines(distractor_set_to_json(q.id, d));
      ++(d.partial ? st.partial : st.complete);
    } catch (const Error& e) {
      ++st.failed;
      log << e.what() << '\n';
    }
  }
  lines.close();
  out << "QAPs " << st.qaps << ", complete " << st.complete << ", partial " << st.partial << ", failed "
      << st.failed << '\n';
  return st;
}

AssembleStats cmd_assemble(const RunConfig& c, std::ostream& out, std::ostream& log) {
  require(c, {PathKind::kQaps, PathKind::kDistractors});
  validate(c);
  const auto qaps = read_qaps(c.qaps);
  std::map<std::string, DistractorSet> sets;
  for_each_line(c.distractors, [&](const std::string& line, int no) {
    try {
      std::string id;
      DistractorSet d = parse_distractor_set_json(line, &id);
      sets.emplace(std::move(id), std::move(d));
    } catch (const Error& e) {
      throw Error(e.code(), located(c.distractors, no, e.what()));
    }
  });

  AssembleStats st;
  LineWriter lines(c.mcqs);
  for (const auto& q : qaps) {
    ++st.qaps;
    auto it = sets.find(q.id);
    if (it == sets.end()) {
      ++st.skipped;
      log << q.id << ": no distractors\n";
      continue;
    }
    try {
      lines(mcq_to_json(assemble_mcq(q, it->second, seed_for("mcq:" + q.id, c.seed))));
      ++st.mcqs;
    } catch (const Error& e) {
      ++st.skipped;
      log << e.what() << '\n';
    }
  }
  lines.close();
  out << "QAPs " << st.qaps << ", MCQs " << st.mcqs << ", skipped " << st.skipped << '\n';
  return st;
}

}  // namespace metaqa::app
