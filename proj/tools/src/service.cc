#include "metaqa/app/service.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <unistd.h>

#include <httplib.h>

#include "metaqa/error.h"
#include "metaqa/preprocess.h"
#include "metaqa/text.h"

namespace metaqa::app {

using json = nlohmann::json;

namespace {

// Runs the tagger command with `text` on stdin and parses its first line.
TaggedSentence run_tagger(const std::string& command, const std::string& text) {
  static std::atomic<unsigned> counter{0};
  const auto tmp = std::filesystem::temp_directory_path() /
                   ("metaqa_tag_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  {
    std::ofstream out(tmp);
    out << text << '\n';
  }
  std::string output;
  if (FILE* p = ::popen((command + " < '" + tmp.string() + "'").c_str(), "r")) {
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) output.append(buf, n);
    const int status = ::pclose(p);
    std::filesystem::remove(tmp);
    if (status != 0) throw Error(ErrorCode::kValidation, "tagger exited with status " + std::to_string(status));
  } else {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::kIo, "cannot run tagger '" + command + "'");
  }
  const auto nl = output.find('\n');
  return parse_sentence_json(trim(output.substr(0, nl)));
}

json qap_json(const Qap& q) { return json::parse(qap_to_json(q)); }

}  // namespace

TeachService::TeachService(MsdipStore store, LoadedResources resources, Options options)
    : options_(std::move(options)),
      resources_(std::move(resources)),
      snapshot_(std::make_shared<const MsdipStore>(std::move(store))) {}

std::shared_ptr<const MsdipStore> TeachService::snapshot() const {
  std::lock_guard lock(snapshot_mu_);
  return snapshot_;
}

TaggedSentence TeachService::to_sentence(const json& v) const {
  if (v.is_string()) {
    if (options_.tagger.empty()) {
      throw Error(ErrorCode::kValidation,
                  "raw-text input needs a configured tagger; send tagged sentences instead");
    }
    return run_tagger(options_.tagger, normalize(v.get<std::string>()));
  }
  if (!v.is_object()) throw Error(ErrorCode::kFormat, "expected a tagged sentence object");
  TaggedSentence s = parse_sentence_json(v.dump());
  if (const auto problems = validate_sentence(s); !problems.empty()) {
    throw Error(ErrorCode::kValidation, "sentence '" + s.id + "': " + problems.front());
  }
  return s;
}

std::vector<TaggedSentence> TeachService::to_sentences(const json& list) const {
  if (!list.is_array()) throw Error(ErrorCode::kFormat, "expected an array of sentences");
  std::vector<TaggedSentence> out;
  for (const auto& v : list) out.push_back(to_sentence(v));
  return out;
}

void TeachService::check_expected(const json& body, uint64_t current) const {
  if (!body.contains("expected_version")) return;
  const auto expected = body["expected_version"].get<uint64_t>();
  if (expected != current) {
    throw Error(ErrorCode::kConflict, "MSDIP version is " + std::to_string(current) + ", request expected " +
                                          std::to_string(expected) + "; refresh and retry");
  }
}

LearnResult TeachService::apply(const LearnedExample& ex) {
  auto next = std::make_shared<MsdipStore>(*snapshot());
  const LearnResult r = next->insert(ex, PairOrigin::kTaught, utc_timestamp());
  if (!r.changed()) return r;
  if (!options_.msdip_path.empty()) next->save(options_.msdip_path);
  std::lock_guard lock(snapshot_mu_);
  snapshot_ = std::move(next);
  return r;
}

json TeachService::teach_json(const TeachState& t) const {
  json j = json::parse(teach_entry_to_json(t.entry));
  if (t.result) j["result"] = {{"new_mds", t.result->new_mds}, {"new_mis", t.result->new_mis}};
  return j;
}

json TeachService::list_teach(const std::string& status) const {
  std::optional<TeachStatus> want;
  if (status != "all") want = parse_teach_status(status);
  const uint64_t v = version();
  std::shared_lock lock(state_mu_);
  std::vector<const TeachState*> picked;
  for (const auto& [_, t] : teach_) {
    if (!want || t.entry.status == *want) picked.push_back(&t);
  }
  std::sort(picked.begin(), picked.end(), [](const auto* a, const auto* b) { return a->seq > b->seq; });
  json list = json::array();
  for (const auto* t : picked) list.push_back(teach_json(*t));
  return {{"msdip_version", v}, {"requests", list}};
}

json TeachService::teach(const std::string& id, const json& body) {
  std::lock_guard writer(writer_);
  TeachEntry entry;
  {
    std::shared_lock lock(state_mu_);
    auto it = teach_.find(id);
    if (it == teach_.end()) throw Error(ErrorCode::kNotFound, "no teach request '" + id + "'");
    if (it->second.entry.status == TeachStatus::kTaught) {
      return {{"msdip_version", version()}, {"request", teach_json(it->second)}, {"already_taught", true}};
    }
    entry = it->second.entry;
  }
  check_expected(body, version());
  const auto questions = to_sentences(body.value("interrogatives", json::array()));
  if (questions.empty()) throw Error(ErrorCode::kValidation, "no interrogatives given");

  const Segmentation seg = segment(entry.sentence);
  const auto ci = static_cast<size_t>(entry.request.clause_index);
  if (ci >= seg.clauses.size()) {
    throw Error(ErrorCode::kValidation, "teach request '" + id + "' no longer maps to a clause");
  }
  const LearnResult r = apply(build_clause_example(seg.clauses[ci], questions, options_.mode));

  std::unique_lock lock(state_mu_);
  TeachState& t = teach_.at(id);
  t.entry.status = TeachStatus::kTaught;
  t.result = r;
  return {{"msdip_version", version()},
          {"learn", {{"new_mds", r.new_mds}, {"new_mis", r.new_mis}}},
          {"request", teach_json(t)}};
}

json TeachService::teach_pair(const json& body) {
  std::lock_guard writer(writer_);
  check_expected(body, version());
  if (!body.contains("declarative")) throw Error(ErrorCode::kFormat, "missing 'declarative'");
  const TaggedSentence decl = to_sentence(body["declarative"]);
  const auto questions = to_sentences(body.value("interrogatives", json::array()));
  if (questions.empty()) throw Error(ErrorCode::kValidation, "no interrogatives given");
  const LearnResult r = apply(build_example(decl, questions, options_.mode));
  return {{"msdip_version", version()}, {"learn", {{"new_mds", r.new_mds}, {"new_mis", r.new_mis}}}};
}

json TeachService::skip(const std::string& id) {
  std::unique_lock lock(state_mu_);
  auto it = teach_.find(id);
  if (it == teach_.end()) throw Error(ErrorCode::kNotFound, "no teach request '" + id + "'");
  if (it->second.entry.status == TeachStatus::kPending) it->second.entry.status = TeachStatus::kSkipped;
  return {{"msdip_version", version()}, {"request", teach_json(it->second)}};
}

json TeachService::generate(const json& body) {
  const auto sentences = to_sentences(body.value("sentences", json::array()));
  const auto snap = snapshot();
  if (snap->empty()) throw Error(ErrorCode::kRejected, "MSDIP store is empty; teach a pair first");

  std::vector<GenerationResult> results;
  json errors = json::array();
  for (const auto& s : sentences) {
    try {
      results.push_back(generate_qaps(s, *snap, options_.mode));
    } catch (const Error& e) {
      results.emplace_back();
      errors.push_back({{"sentence_id", s.id}, {"error", e.what()}});
    }
  }

  json qaps = json::array(), requests = json::array(), rejections = json::array();
  std::array<size_t, 3> kinds{};
  std::unique_lock lock(state_mu_);
  for (size_t i = 0; i < sentences.size(); ++i) {
    const TaggedSentence& s = sentences[i];
    const GenerationResult& r = results[i];
    sentences_[s.id] = s;
    std::erase_if(qaps_, [&](const auto& kv) { return kv.second.qap.source == s.id; });
    for (const auto& q : r.qaps) {
      qaps_[q.id] = {q, "pending", snap->version()};
      qaps.push_back(qap_json(q));
    }
    for (const auto& rej : r.rejections) rejections.push_back({{"sentence_id", rej.sentence_id}, {"reason", rej.reason}});
    for (size_t k = 0; k < kinds.size(); ++k) kinds[k] += r.clause_kinds[k];

    std::map<std::string, TeachEntry> entries;
    std::vector<std::string> order;
    const std::map<std::string, const TaggedSentence*> by_id{{s.id, &s}};
    merge_teach_requests(entries, order, r.teach_requests, by_id);
    for (const auto& tid : order) {
      auto it = teach_.find(tid);
      if (it == teach_.end()) {
        it = teach_.emplace(tid, TeachState{std::move(entries.at(tid)), ++teach_seq_, std::nullopt}).first;
      } else {
        ++it->second.entry.occurrences;
      }
      requests.push_back(teach_json(it->second));
    }
  }
  return {{"msdip_version", snap->version()},
          {"qaps", qaps},
          {"teach_requests", requests},
          {"rejections", rejections},
          {"errors", errors},
          {"clause_kinds", {{"perfect", kinds[0]}, {"successful", kinds[1]}, {"unsuccessful", kinds[2]}}}};
}

json TeachService::list_qaps() const {
  const uint64_t v = version();
  std::shared_lock lock(state_mu_);
  json list = json::array();
  for (const auto& [_, q] : qaps_) {
    json j = qap_json(q.qap);
    j["review"] = q.review;
    j["msdip_version"] = q.version;
    list.push_back(std::move(j));
  }
  return {{"msdip_version", v}, {"qaps", list}};
}

json TeachService::review(const std::string& id, const json& body) {
  std::string verdict = body.value("verdict", "");
  if (verdict == "accept") verdict = "accepted";
  if (verdict == "reject") verdict = "rejected";
  if (verdict != "accepted" && verdict != "rejected" && verdict != "pending") {
    throw Error(ErrorCode::kValidation, "verdict must be 'accepted' or 'rejected'");
  }
  std::unique_lock lock(state_mu_);
  auto it = qaps_.find(id);
  if (it == qaps_.end()) throw Error(ErrorCode::kNotFound, "no QAP '" + id + "'");
  it->second.review = verdict;
  json j = qap_json(it->second.qap);
  j["review"] = verdict;
  return {{"msdip_version", version()}, {"qap", j}};
}

json TeachService::mcqs() const {
  const DistractorResources res = resources_.view();
  if (res.embeddings == nullptr || res.lexicon == nullptr) {
    throw Error(ErrorCode::kConfig, "MCQs need embeddings and a lexical graph; start the service with both");
  }
  std::vector<Qap> qaps;
  std::vector<TaggedSentence> corpus;
  {
    std::shared_lock lock(state_mu_);
    for (const auto& [_, q] : qaps_) {
      if (q.review != "rejected") qaps.push_back(q.qap);
    }
    for (const auto& [_, s] : sentences_) corpus.push_back(s);
  }
  const CorpusIndex index(corpus);
  json list = json::array(), failures = json::array();
  for (const auto& q : qaps) {
    try {
      const DistractorSet d = distract_qap(q, index, res, options_.distractors, options_.seed);
      list.push_back(json::parse(mcq_to_json(assemble_mcq(q, d, seed_for("mcq:" + q.id, options_.seed)))));
    } catch (const Error& e) {
      failures.push_back({{"qap_id", q.id}, {"reason", e.what()}});
    }
  }
  return {{"msdip_version", version()}, {"mcqs", list}, {"failures", failures}};
}

json TeachService::version_info() const {
  const auto snap = snapshot();
  return {{"msdip_version", snap->version()}, {"pairs", snap->size()}, {"mis", snap->mi_count()}};
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormat:
    case ErrorCode::kValidation: return 400;
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kConflict: return 409;
    case ErrorCode::kRejected: return 422;
    case ErrorCode::kConfig: return 503;
    case ErrorCode::kIo: return 500;
  }
  return 500;
}

namespace {

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  if (body.contains("msdip_version")) {
    res.set_header("X-MSDIP-Version", std::to_string(body["msdip_version"].get<uint64_t>()));
  }
  res.set_content(body.dump(), "application/json");
}

// Wraps a handler: parses the body, maps errors to statuses.
template <class F>
httplib::Server::Handler wrap(TeachService& svc, F f) {
  return [&svc, f](const httplib::Request& req, httplib::Response& res) {
    try {
      json body = json::object();
      if (!req.body.empty()) {
        try {
          body = json::parse(req.body);
        } catch (const json::exception& e) {
          throw Error(ErrorCode::kFormat, std::string("request body is not JSON: ") + e.what());
        }
      }
      send(res, 200, f(req, body));
    } catch (const Error& e) {
      json err = {{"error", e.what()}, {"code", error_code_name(e.code())}, {"msdip_version", svc.version()}};
      if (e.code() == ErrorCode::kConflict) err["retry"] = true;
      send(res, http_status(e.code()), err);
    } catch (const json::exception& e) {
      send(res, 400, {{"error", e.what()}, {"code", "format"}, {"msdip_version", svc.version()}});
    }
  };
}

}  // namespace

void install_routes(httplib::Server& server, TeachService& svc) {
  using Req = const httplib::Request&;
  server.Get("/api/teach", wrap(svc, [&svc](Req req, const json&) {
               return svc.list_teach(req.has_param("status") ? req.get_param_value("status") : "pending");
             }));
  server.Post("/api/teach", wrap(svc, [&svc](Req, const json& b) { return svc.teach_pair(b); }));
  server.Post(R"(/api/teach/([^/]+)/skip)", wrap(svc, [&svc](Req req, const json&) {
                return svc.skip(req.matches[1]);
              }));
  server.Post(R"(/api/teach/([^/]+))", wrap(svc, [&svc](Req req, const json& b) {
                return svc.teach(req.matches[1], b);
              }));
  server.Post("/api/generate", wrap(svc, [&svc](Req, const json& b) { return svc.generate(b); }));
  server.Get("/api/qaps", wrap(svc, [&svc](Req, const json&) { return svc.list_qaps(); }));
  server.Post(R"(/api/qaps/([^/]+)/review)", wrap(svc, [&svc](Req req, const json& b) {
                return svc.review(req.matches[1], b);
              }));
  server.Get("/api/mcqs", wrap(svc, [&svc](Req, const json&) { return svc.mcqs(); }));
  server.Get("/api/msdip/version", wrap(svc, [&svc](Req, const json&) { return svc.version_info(); }));
}

void serve(const RunConfig& c, std::ostream& log) {
  validate(c);
  MsdipStore store = std::filesystem::exists(c.msdip) ? MsdipStore::load(c.msdip) : MsdipStore();
  TeachService::Options opt;
  opt.mode = c.mode;
  opt.msdip_path = c.msdip;
  opt.seed = c.seed;
  opt.distractors = c.distractor_config();
  opt.tagger = c.tagger;
  TeachService svc(std::move(store), load_resources(c), opt);

  httplib::Server server;
  // The library default is SO_REUSEPORT, which lets a second server share a
  // busy port without error.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });
  install_routes(server, svc);
  if (!c.ui.empty() && !server.set_mount_point("/", c.ui)) {
    throw Error(ErrorCode::kConfig, "cannot serve UI directory '" + c.ui + "'");
  }
  if (!server.bind_to_port(c.host, c.port)) {
    throw Error(ErrorCode::kConfig, "cannot listen on " + c.host + ":" + std::to_string(c.port) + " (port busy?)");
  }
  log << "serving on http://" << c.host << ":" << c.port << " (MSDIP version " << svc.version() << ")\n";
  server.listen_after_bind();
}

}  // namespace metaqa::app
