#include "metaqa/annotation.h"

#include <fstream>
#include <istream>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "metaqa/error.h"
#include "metaqa/text.h"

namespace metaqa {

using json = nlohmann::ordered_json;

const Argument* SrlFrame::argument_at(int token) const {
  for (const auto& a : arguments) {
    if (a.span.contains(token)) return &a;
  }
  return nullptr;
}

namespace {

bool attaches_left(std::string_view t) {
  static const std::unordered_set<std::string_view> kLeft = {
      ".", ",", "?", "!", ";", ":", ")", "'s", "n't", "'", "%", "''"};
  return kLeft.count(t) > 0;
}

}  // namespace

std::string TaggedSentence::text(Span span) const {
  std::string out;
  for (int i = span.start; i < span.end && i < size(); ++i) {
    const std::string& t = tokens[i].text;
    if (!out.empty() && !attaches_left(t) && out.back() != '(') out += ' ';
    out += t;
  }
  return out;
}

std::string TaggedSentence::text() const { return text(Span{0, size()}); }

std::string encode_ssu(const Ssu& u) { return u.sr + "/" + u.pos + "/" + u.ne; }

Ssu decode_ssu(std::string_view s) {
  auto parts = split(s, '/');
  if (parts.size() != 3 || parts[0].empty()) {
    throw Error(ErrorCode::kFormat, "malformed SSU '" + std::string(s) + "'");
  }
  return Ssu{parts[0], parts[1], parts[2]};
}

namespace {

const std::set<std::string, std::less<>>& role_set() {
  static const std::set<std::string, std::less<>> roles = {
      "ARG0", "ARG1", "ARG2", "ARG3", "ARG4", "ARG5", "V",   "LOC", "EXT", "DIS",
      "ADV",  "NEG",  "MOD",  "CAU",  "TMP",  "PRP",  "MNR", "GOL", "DIR"};
  return roles;
}

}  // namespace

std::optional<std::string> canonical_role(std::string_view role) {
  std::string r(role);
  for (std::string_view prefix : {"R-", "C-"}) {
    if (r.rfind(prefix, 0) == 0) r = r.substr(prefix.size());
  }
  if (r.rfind("ARGM-", 0) == 0) r = r.substr(5);
  if (r.rfind("AM-", 0) == 0) r = r.substr(3);
  if (r.size() == 2 && r[0] == 'A' && r[1] >= '0' && r[1] <= '5') r = "ARG" + r.substr(1);
  if (r == "PNC") r = "PRP";
  if (role_set().count(r)) return r;
  return std::nullopt;
}

int core_argument_index(std::string_view role) {
  if (role.size() == 4 && role.substr(0, 3) == "ARG" && role[3] >= '0' && role[3] <= '5') {
    return role[3] - '0';
  }
  return -1;
}

bool is_core_argument(std::string_view role) { return core_argument_index(role) >= 0; }

bool is_penn_tag(std::string_view pos) {
  static const std::unordered_set<std::string_view> tags = {
      "CC",  "CD",  "DT",  "EX",  "FW",  "IN",   "JJ",   "JJR", "JJS", "LS",  "MD",
      "NN",  "NNS", "NNP", "NNPS", "PDT", "POS", "PRP",  "PRP$", "RB", "RBR", "RBS",
      "RP",  "SYM", "TO",  "UH",  "VB",  "VBD",  "VBG",  "VBN", "VBP", "VBZ", "WDT",
      "WP",  "WP$", "WRB", ".",   ",",   ":",    "``",   "''",  "-LRB-", "-RRB-",
      "#",   "$",   "HYPH", "NFP", "ADD", "AFX", "XX"};
  return tags.count(pos) > 0;
}

std::vector<std::string> validate_sentence(const TaggedSentence& s) {
  std::vector<std::string> v;
  const int n = s.size();
  if (n == 0) {
    v.push_back("sentence has no tokens");
    return v;
  }
  for (int i = 0; i < n; ++i) {
    const Token& t = s.tokens[i];
    std::string where = "token " + std::to_string(i);
    if (t.text.empty()) v.push_back(where + ": empty text");
    if (t.lemma.empty()) v.push_back(where + ": empty lemma");
    if (!is_penn_tag(t.pos)) v.push_back(where + ": unknown POS tag '" + t.pos + "'");
  }
  for (size_t f = 0; f < s.frames.size(); ++f) {
    const SrlFrame& frame = s.frames[f];
    std::string where = "frame " + std::to_string(f);
    if (frame.predicate < 0 || frame.predicate >= n) v.push_back(where + ": predicate out of bounds");
    for (size_t a = 0; a < frame.arguments.size(); ++a) {
      const Argument& arg = frame.arguments[a];
      if (arg.span.start < 0 || arg.span.end > n || arg.span.start >= arg.span.end) {
        v.push_back(where + ": span out of bounds");
        continue;
      }
      if (!canonical_role(arg.role) || *canonical_role(arg.role) != arg.role) {
        v.push_back(where + ": unknown role '" + arg.role + "'");
      }
      for (size_t b = 0; b < a; ++b) {
        if (frame.arguments[b].span.overlaps(arg.span)) {
          v.push_back(where + ": overlapping argument spans");
        }
      }
    }
  }
  for (const Span& p : s.phrases) {
    if (p.start < 0 || p.end > n || p.start >= p.end) v.push_back("phrase span out of bounds");
  }
  if (static_cast<int>(s.dep_heads.size()) != n) {
    v.push_back("dep_heads length differs from token count");
    return v;
  }
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    int h = s.dep_heads[i];
    if (h == i || h == -1) {
      ++roots;
    } else if (h < -1 || h >= n) {
      v.push_back("dependency head out of bounds");
      return v;
    }
  }
  if (roots != 1) {
    v.push_back("dependency graph is not a tree");
    return v;
  }
  for (int i = 0; i < n; ++i) {
    int cur = i, steps = 0;
    while (s.dep_heads[cur] != cur && s.dep_heads[cur] != -1) {
      cur = s.dep_heads[cur];
      if (++steps > n) {
        v.push_back("dependency graph is not a tree");
        return v;
      }
    }
  }
  return v;
}

int dependency_root(const TaggedSentence& s) {
  for (int i = 0; i < s.size(); ++i) {
    if (s.dep_heads[i] == i || s.dep_heads[i] == -1) return i;
  }
  return 0;
}

std::vector<int> dependency_depths(const TaggedSentence& s) {
  const int n = s.size();
  std::vector<int> depth(n, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<int> path;
    int cur = i;
    while (depth[cur] < 0 && s.dep_heads[cur] != cur && s.dep_heads[cur] != -1) {
      path.push_back(cur);
      cur = s.dep_heads[cur];
    }
    if (depth[cur] < 0) depth[cur] = 0;
    int d = depth[cur];
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++d;
  }
  return depth;
}

namespace {

template <typename T>
T field(const json& j, const char* key, const std::string& context) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::kFormat, context + "missing field '" + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kFormat, context + "field '" + key + "' has the wrong type");
  }
}

Span parse_span(const json& j, const std::string& ctx) {
  return Span{field<int>(j, "start", ctx), field<int>(j, "end", ctx)};
}

}  // namespace

TaggedSentence parse_sentence_json(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kFormat, "record is not a JSON object");
  TaggedSentence s;
  s.id = field<std::string>(j, "id", "");
  const std::string ctx = "sentence '" + s.id + "': ";
  const json tokens = field<json>(j, "tokens", ctx);
  if (!tokens.is_array()) throw Error(ErrorCode::kFormat, ctx + "field 'tokens' is not an array");
  for (const auto& t : tokens) {
    Token tok;
    tok.text = field<std::string>(t, "text", ctx + "tokens: ");
    tok.lemma = field<std::string>(t, "lemma", ctx + "tokens: ");
    tok.pos = field<std::string>(t, "pos", ctx + "tokens: ");
    if (t.contains("ne") && !t["ne"].is_null()) tok.ne = field<std::string>(t, "ne", ctx + "tokens: ");
    s.tokens.push_back(std::move(tok));
  }
  for (const auto& f : field<json>(j, "frames", ctx)) {
    SrlFrame frame;
    frame.predicate = field<int>(f, "v", ctx + "frames: ");
    for (const auto& a : field<json>(f, "args", ctx + "frames: ")) {
      Argument arg;
      std::string raw = field<std::string>(a, "role", ctx + "frames.args: ");
      auto role = canonical_role(raw);
      arg.role = role ? *role : raw;
      arg.span = parse_span(a, ctx + "frames.args: ");
      frame.arguments.push_back(std::move(arg));
    }
    s.frames.push_back(std::move(frame));
  }
  s.dep_heads = field<std::vector<int>>(j, "dep_heads", ctx);
  if (j.contains("constituency") && !j["constituency"].is_null()) {
    s.constituency = field<std::string>(j, "constituency", ctx);
  }
  if (j.contains("source") && j["source"].is_object()) {
    const json& src = j["source"];
    if (src.contains("article")) s.source.article = field<std::string>(src, "article", ctx + "source: ");
    if (src.contains("ordinal")) s.source.ordinal = field<int>(src, "ordinal", ctx + "source: ");
  }
  if (j.contains("phrases")) {
    for (const auto& p : j["phrases"]) s.phrases.push_back(parse_span(p, ctx + "phrases: "));
  }
  return s;
}

std::string sentence_to_json(const TaggedSentence& s) {
  json j;
  j["id"] = s.id;
  json tokens = json::array();
  for (const auto& t : s.tokens) {
    tokens.push_back({{"text", t.text}, {"lemma", t.lemma}, {"pos", t.pos}, {"ne", t.ne}});
  }
  j["tokens"] = std::move(tokens);
  json frames = json::array();
  for (const auto& f : s.frames) {
    json args = json::array();
    for (const auto& a : f.arguments) {
      args.push_back({{"role", a.role}, {"start", a.span.start}, {"end", a.span.end}});
    }
    frames.push_back({{"v", f.predicate}, {"args", std::move(args)}});
  }
  j["frames"] = std::move(frames);
  j["dep_heads"] = s.dep_heads;
  j["constituency"] = s.constituency ? json(*s.constituency) : json(nullptr);
  j["source"] = {{"article", s.source.article}, {"ordinal", s.source.ordinal}};
  if (!s.phrases.empty()) {
    json phrases = json::array();
    for (const auto& p : s.phrases) phrases.push_back({{"start", p.start}, {"end", p.end}});
    j["phrases"] = std::move(phrases);
  }
  return j.dump();
}

std::vector<TaggedSentence> read_corpus(std::istream& in) {
  std::vector<TaggedSentence> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    TaggedSentence s;
    try {
      s = parse_sentence_json(line);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    auto violations = validate_sentence(s);
    if (!violations.empty()) {
      throw Error(ErrorCode::kValidation, "line " + std::to_string(line_no) + ": sentence '" +
                                              s.id + "': " + violations.front());
    }
    out.push_back(std::move(s));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failure");
  return out;
}

std::vector<TaggedSentence> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open corpus '" + path + "'");
  try {
    return read_corpus(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void write_corpus(const std::vector<TaggedSentence>& sentences, std::ostream& out) {
  for (const auto& s : sentences) out << sentence_to_json(s) << '\n';
}

void write_corpus(const std::vector<TaggedSentence>& sentences, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  write_corpus(sentences, out);
}

}  // namespace metaqa
