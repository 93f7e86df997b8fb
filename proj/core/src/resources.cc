#include "metaqa/resources.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "metaqa/error.h"
#include "metaqa/text.h"

namespace metaqa {

using json = nlohmann::json;

namespace {

std::string slurp(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, std::string("cannot open ") + what + " '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kValidation, "cosine of vectors with different dimensions");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::kValidation, "cosine of a zero vector");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

// ---- EmbeddingTable

EmbeddingTable EmbeddingTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open embedding file '" + path + "'");
  try {
    return read(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

EmbeddingTable EmbeddingTable::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kFormat, "empty embedding file");
  std::istringstream header(line);
  size_t count = 0, dim = 0;
  if (!(header >> count >> dim) || dim == 0) {
    throw Error(ErrorCode::kFormat, "line 1: expected 'count dim' header");
  }
  EmbeddingTable table(dim);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::istringstream row(line);
    std::string word;
    row >> word;
    std::vector<double> vec;
    vec.reserve(dim);
    double v;
    while (row >> v) vec.push_back(v);
    if (!row.eof()) throw Error(ErrorCode::kFormat, "line " + std::to_string(line_no) + ": bad number");
    if (vec.size() != dim) {
      throw Error(ErrorCode::kFormat, "line " + std::to_string(line_no) + ": expected " +
                                          std::to_string(dim) + " values, got " +
                                          std::to_string(vec.size()));
    }
    std::replace(word.begin(), word.end(), '_', ' ');  // phrase entries
    try {
      table.add(std::move(word), std::move(vec));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (table.size() != count) {
    throw Error(ErrorCode::kFormat, "header declares " + std::to_string(count) + " words, found " +
                                        std::to_string(table.size()));
  }
  return table;
}

void EmbeddingTable::add(std::string word, std::vector<double> vec) {
  if (dim_ == 0) dim_ = vec.size();
  if (vec.size() != dim_) throw Error(ErrorCode::kValidation, "vector for '" + word + "' has wrong dimension");
  if (std::all_of(vec.begin(), vec.end(), [](double x) { return x == 0.0; })) {
    throw Error(ErrorCode::kValidation, "zero vector for '" + word + "'");
  }
  auto [it, inserted] = vectors_.emplace(std::move(word), std::move(vec));
  if (!inserted) throw Error(ErrorCode::kValidation, "duplicate word '" + it->first + "'");
}

bool EmbeddingTable::contains(std::string_view word) const { return vectors_.find(word) != vectors_.end(); }

const std::vector<double>* EmbeddingTable::find(std::string_view word) const {
  auto it = vectors_.find(word);
  return it == vectors_.end() ? nullptr : &it->second;
}

double EmbeddingTable::similarity(std::string_view a, std::string_view b) const {
  const auto* va = find(a);
  const auto* vb = find(b);
  if (va == nullptr) throw Error(ErrorCode::kNotFound, "no vector for '" + std::string(a) + "'");
  if (vb == nullptr) throw Error(ErrorCode::kNotFound, "no vector for '" + std::string(b) + "'");
  return cosine(*va, *vb);
}

std::vector<Neighbor> EmbeddingTable::neighbors(std::string_view word, double lo, double hi) const {
  const auto* target = find(word);
  if (target == nullptr) throw Error(ErrorCode::kNotFound, "no vector for '" + std::string(word) + "'");
  std::vector<Neighbor> out;
  for (const auto& [w, vec] : vectors_) {
    if (w == word) continue;
    double s = cosine(*target, vec);
    if (s >= lo && s <= hi) out.push_back({w, s});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Neighbor& a, const Neighbor& b) { return a.score > b.score; });
  return out;
}

// ---- LexicalGraph

LexicalGraph LexicalGraph::load(const std::string& path) {
  try {
    return parse(slurp(path, "lexical graph"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

LexicalGraph LexicalGraph::parse(std::string_view json_text) {
  LexicalGraph g;
  try {
    json j = json::parse(json_text);
    for (const auto& s : j.at("senses")) {
      g.add_sense(Sense{s.at("id").get<std::string>(), s.at("pos").get<std::string>(),
                        s.at("lemmas").get<std::vector<std::string>>()});
    }
    for (const auto& e : j.value("hypernyms", json::array())) {
      g.add_hypernym(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    for (const auto& e : j.value("antonyms", json::array())) {
      g.add_antonym(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed lexical graph: ") + e.what());
  }
  g.finalize();
  return g;
}

void LexicalGraph::add_sense(Sense s) {
  if (by_id_.count(s.id)) throw Error(ErrorCode::kValidation, "duplicate sense '" + s.id + "'");
  const int idx = static_cast<int>(senses_.size());
  by_id_[s.id] = idx;
  for (const auto& lemma : s.lemmas) {
    auto& list = by_lemma_[to_lower(lemma)];
    if (std::find(list.begin(), list.end(), idx) == list.end()) list.push_back(idx);
  }
  senses_.push_back(std::move(s));
  parents_.emplace_back();
}

int LexicalGraph::index_of(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw Error(ErrorCode::kValidation, "unknown sense '" + id + "'");
  return it->second;
}

void LexicalGraph::add_hypernym(const std::string& child, const std::string& parent) {
  const int c = index_of(child);
  const int p = index_of(parent);
  if (c == p) throw Error(ErrorCode::kValidation, "sense '" + child + "' is its own hypernym");
  auto& list = parents_[c];
  if (std::find(list.begin(), list.end(), p) == list.end()) list.push_back(p);
}

void LexicalGraph::add_antonym(const std::string& a, const std::string& b) {
  const int x = index_of(a);
  const int y = index_of(b);
  antonym_pairs_.insert({std::min(x, y), std::max(x, y)});
}

void LexicalGraph::finalize() {
  // Depth = 1 + longest hop count to a root, so every proper ancestor is
  // strictly shallower than its descendants.
  const size_t n = senses_.size();
  depth_.assign(n, 0);
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::function<int(int)> visit = [&](int v) -> int {
    if (state[v] == 2) return depth_[v];
    if (state[v] == 1) throw Error(ErrorCode::kValidation, "hypernym cycle through '" + senses_[v].id + "'");
    state[v] = 1;
    int d = 1;
    for (int p : parents_[v]) d = std::max(d, visit(p) + 1);
    state[v] = 2;
    depth_[v] = d;
    return d;
  };
  for (size_t v = 0; v < n; ++v) visit(static_cast<int>(v));
}

const LexicalGraph::Sense* LexicalGraph::sense(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &senses_[it->second];
}

std::vector<int> LexicalGraph::senses_of(std::string_view word) const {
  auto it = by_lemma_.find(to_lower(word));
  return it == by_lemma_.end() ? std::vector<int>{} : it->second;
}

std::set<int> LexicalGraph::ancestors(int sense) const {
  std::set<int> out{sense};
  std::vector<int> stack{sense};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int p : parents_[v]) {
      if (out.insert(p).second) stack.push_back(p);
    }
  }
  return out;
}

double LexicalGraph::wup_senses(int a, int b) const {
  const std::set<int> aa = ancestors(a);
  const std::set<int> bb = ancestors(b);
  int best = 0;
  for (int x : aa) {
    if (bb.count(x)) best = std::max(best, depth_[x]);
  }
  if (best == 0) return -1.0;
  return 2.0 * best / (depth_[a] + depth_[b]);
}

double LexicalGraph::wup(std::string_view a, std::string_view b) const {
  const std::vector<int> sa = senses_of(a);
  const std::vector<int> sb = senses_of(b);
  double best = -1.0;
  for (int x : sa) {
    for (int y : sb) {
      if (senses_[x].pos != senses_[y].pos) continue;
      best = std::max(best, wup_senses(x, y));
    }
  }
  return best > 0.0 ? best : kAbsentScore;
}

std::vector<std::string> LexicalGraph::hypernym_lemmas(std::string_view word, std::string_view pos) const {
  std::set<std::string> out;
  for (int s : senses_of(word)) {
    if (!pos.empty() && senses_[s].pos != pos) continue;
    for (int p : parents_[s]) {
      for (const auto& l : senses_[p].lemmas) out.insert(l);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> LexicalGraph::synonyms(std::string_view word) const {
  std::set<std::string> out;
  const std::string lower = to_lower(word);
  for (int s : senses_of(word)) {
    for (const auto& l : senses_[s].lemmas) {
      if (to_lower(l) != lower) out.insert(l);
    }
  }
  return {out.begin(), out.end()};
}

bool LexicalGraph::antonyms(std::string_view a, std::string_view b) const {
  for (int x : senses_of(a)) {
    for (int y : senses_of(b)) {
      if (antonym_pairs_.count({std::min(x, y), std::max(x, y)})) return true;
    }
  }
  return false;
}

// ---- UnigramTable

UnigramTable UnigramTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open unigram table '" + path + "'");
  try {
    return read(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

UnigramTable UnigramTable::read(std::istream& in) {
  UnigramTable t;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string word;
    double p;
    if (!std::getline(row, word, '\t') || !(row >> p)) {
      throw Error(ErrorCode::kFormat, "line " + std::to_string(line_no) + ": expected 'word<TAB>probability'");
    }
    try {
      t.set(word, p);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return t;
}

void UnigramTable::set(std::string word, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kValidation, "probability of '" + word + "' is outside [0, 1]");
  }
  probs_[to_lower(word)] = p;
}

double UnigramTable::probability(std::string_view word) const {
  auto it = probs_.find(to_lower(word));
  return it == probs_.end() ? 0.0 : it->second;
}

// ---- EntityKB

EntityKB EntityKB::load(const std::string& path) {
  try {
    return parse(slurp(path, "knowledge base"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

EntityKB EntityKB::parse(std::string_view json_text) {
  EntityKB kb;
  try {
    json j = json::parse(json_text);
    for (const auto& b : j.at("buckets")) {
      kb.add_bucket(Bucket{b.at("name").get<std::string>(), b.at("tag").get<std::string>(),
                           b.at("members").get<std::vector<std::string>>()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed knowledge base: ") + e.what());
  }
  return kb;
}

void EntityKB::add_bucket(Bucket b) {
  if (b.members.empty()) throw Error(ErrorCode::kValidation, "bucket '" + b.name + "' is empty");
  buckets_.push_back(std::move(b));
}

std::vector<const EntityKB::Bucket*> EntityKB::buckets_of(std::string_view entity) const {
  std::vector<const Bucket*> out;
  const std::string key = to_lower(entity);
  for (const auto& b : buckets_) {
    for (const auto& m : b.members) {
      if (to_lower(m) == key) {
        out.push_back(&b);
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> EntityKB::same_bucket(std::string_view entity) const {
  std::set<std::string> out;
  const std::string key = to_lower(entity);
  for (const Bucket* b : buckets_of(entity)) {
    for (const auto& m : b->members) {
      if (to_lower(m) != key) out.insert(m);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace metaqa
