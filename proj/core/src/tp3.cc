#include "metaqa/tp3.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "metaqa/error.h"
#include "metaqa/preprocess.h"
#include "metaqa/text.h"

namespace metaqa {

namespace {

struct RuleName {
  Tp3Rule rule;
  const char* id;
};

constexpr RuleName kRuleNames[] = {
    {Tp3Rule::kPreSuitability, "pre1_unsuitable"},
    {Tp3Rule::kPreRole, "pre2_role"},
    {Tp3Rule::kPrePos, "pre3_pos"},
    {Tp3Rule::kPreCommon, "pre4_common"},
    {Tp3Rule::kPreClause, "pre5_clause"},
    {Tp3Rule::kPreNesting, "pre6_nesting"},
    {Tp3Rule::kPostAnswerInQuestion, "post1_answer_in_question"},
    {Tp3Rule::kPostShortQuestion, "post2_short_question"},
    {Tp3Rule::kPostUnsuitableSource, "post3_unsuitable_source"},
};

const std::set<std::string, std::less<>> kSelectableRoles = {
    "ARG0", "ARG1", "ARG2", "ARG3", "ARG4", "ARG5", "TMP", "LOC", "MNR", "CAU", "DIR"};

const std::set<std::string, std::less<>> kExcludedPos = {
    "RB", "RP", "CC", "DT", "IN", "MD", "PDT", "PRP", "WP", "WDT", "WRB"};

bool is_nominal(const Token& t) { return is_noun_tag(t.pos) || t.pos == "CD"; }

std::string format_ratio(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

const char* tp3_rule_id(Tp3Rule rule) {
  for (const auto& n : kRuleNames) {
    if (n.rule == rule) return n.id;
  }
  return "unknown";
}

Tp3Rule parse_tp3_rule(std::string_view id) {
  for (const auto& n : kRuleNames) {
    if (id == n.id) return n.rule;
  }
  throw Error(ErrorCode::kConfig, "unknown rule id '" + std::string(id) + "'");
}

RuleSet& RuleSet::disable(Tp3Rule r) {
  disabled_ |= bit(r);
  return *this;
}

RuleSet& RuleSet::enable(Tp3Rule r) {
  disabled_ &= ~bit(r);
  return *this;
}

// ---- preprocessing rules 1-4

Selection select_answers(const TaggedSentence& s, const UnigramTable& freq, const RuleSet& rules) {
  Selection out;
  if (rules.enabled(Tp3Rule::kPreSuitability)) {
    SuitabilityVerdict v = assess_suitability(s);
    if (!v.suitable) {
      AnswerCandidate whole;
      whole.span = whole.source_span = Span{0, s.size()};
      whole.text = s.text();
      out.removed.push_back({whole, Tp3Rule::kPreSuitability, join(v.reasons, ",")});
      return out;
    }
  }

  const bool role_rule = rules.enabled(Tp3Rule::kPreRole);
  std::vector<AnswerCandidate> raw;
  auto seen = [&](Span sp) {
    return std::any_of(raw.begin(), raw.end(), [&](const AnswerCandidate& c) { return c.source_span == sp; });
  };
  for (size_t f = 0; f < s.frames.size(); ++f) {
    for (const auto& a : s.frames[f].arguments) {
      if (a.role == "V" || a.span.size() == 0 || seen(a.span)) continue;
      AnswerCandidate c;
      c.span = c.source_span = a.span;
      c.text = s.text(a.span);
      c.role = a.role;
      c.frame = static_cast<int>(f);
      if (role_rule && !kSelectableRoles.count(a.role)) {
        out.removed.push_back({c, Tp3Rule::kPreRole, "role " + a.role + " is not selectable"});
        continue;
      }
      raw.push_back(std::move(c));
    }
  }

  // Named-entity runs take the role of the innermost argument around them.
  for (int i = 0; i < s.size();) {
    const std::string& ne = s.tokens[i].ne;
    if (ne.empty()) {
      ++i;
      continue;
    }
    int j = i + 1;
    while (j < s.size() && s.tokens[j].ne == ne) ++j;
    Span run{i, j};
    i = j;
    if (seen(run)) continue;
    AnswerCandidate c;
    c.span = c.source_span = run;
    c.text = s.text(run);
    c.kind = CandidateKind::kNamedEntity;
    int best = -1;
    for (size_t f = 0; f < s.frames.size(); ++f) {
      for (const auto& a : s.frames[f].arguments) {
        if (a.role == "V" || !a.span.contains(run)) continue;
        if (best < 0 || a.span.size() < best) {
          best = a.span.size();
          c.role = a.role;
          c.frame = static_cast<int>(f);
        }
      }
    }
    if (role_rule && c.role.empty()) {
      out.removed.push_back({c, Tp3Rule::kPreRole, "named entity without semantic role"});
      continue;
    }
    raw.push_back(std::move(c));
  }

  for (auto& c : raw) {
    // Punctuation never belongs at a candidate's edge.
    auto trim_edges = [&](auto excluded) {
      while (c.span.size() > 0 && excluded(s.tokens[c.span.start].pos)) ++c.span.start;
      while (c.span.size() > 0 && excluded(s.tokens[c.span.end - 1].pos)) --c.span.end;
    };
    trim_edges([](const std::string& pos) { return is_punctuation_tag(pos); });
    if (rules.enabled(Tp3Rule::kPrePos)) {
      trim_edges([](const std::string& pos) {
        return is_punctuation_tag(pos) || kExcludedPos.count(pos) > 0;
      });
      if (c.span.size() == 0) {
        out.removed.push_back({c, Tp3Rule::kPrePos, "only excluded POS tags"});
        continue;
      }
      bool nominal = false;
      for (int k = c.span.start; k < c.span.end; ++k) nominal = nominal || is_nominal(s.tokens[k]);
      if (!nominal) {
        c.text = s.text(c.span);
        out.removed.push_back({c, Tp3Rule::kPrePos, "no noun after pruning"});
        continue;
      }
    }
    if (c.span.size() == 0) continue;
    c.text = s.text(c.span);
    if (rules.enabled(Tp3Rule::kPreCommon) && c.span.size() == 1) {
      const double p = freq.probability(s.tokens[c.span.start].text);
      if (p > UnigramTable::kCommonThreshold) {
        out.removed.push_back({c, Tp3Rule::kPreCommon, "unigram probability " + format_ratio(p)});
        continue;
      }
    }
    out.kept.push_back(std::move(c));
  }
  return out;
}

// ---- preprocessing rules 5-6

int subtree_root(const TaggedSentence& s, Span span) {
  const std::vector<int> depth = dependency_depths(s);
  int best = -1;
  for (int i = span.start; i < span.end; ++i) {
    const int h = s.dep_heads[i];
    const bool head_outside = h < 0 || h == i || !span.contains(h);
    if (!head_outside) continue;
    if (best < 0 || depth[i] < depth[best]) best = i;
  }
  return best;
}

Selection filter_clause_and_nesting(const TaggedSentence& s, Selection in, const RuleSet& rules) {
  Selection out;
  out.removed = std::move(in.removed);
  const std::vector<int> depth = dependency_depths(s);
  const int root = dependency_root(s);
  const int h_s = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());

  std::vector<AnswerCandidate> survivors;
  for (auto& c : in.kept) {
    int sum = 0;
    for (int k = c.span.start; k < c.span.end; ++k) sum += depth[k];
    const int n = c.span.size();
    c.h_s = h_s;
    c.h_a = n > 0 ? static_cast<double>(sum) / n : 0.0;
    const bool in_clause = c.frame >= 0 && s.frames[c.frame].predicate != root;
    // h_a >= (2/3) h_s, kept in integers.
    if (rules.enabled(Tp3Rule::kPreClause) && in_clause && 3 * sum >= 2 * h_s * n) {
      out.removed.push_back({c, Tp3Rule::kPreClause,
                             "h_a=" + format_ratio(c.h_a) + " >= 2/3*h_s=" + format_ratio(2.0 * h_s / 3.0)});
      continue;
    }
    survivors.push_back(std::move(c));
  }

  std::map<size_t, std::string> drop;
  if (rules.enabled(Tp3Rule::kPreNesting)) {
    for (size_t i = 0; i < survivors.size(); ++i) {
      for (size_t j = 0; j < survivors.size(); ++j) {
        const auto& shorter = survivors[i];
        const auto& longer = survivors[j];
        if (i == j || shorter.frame != longer.frame || shorter.span == longer.span ||
            !longer.span.contains(shorter.span)) {
          continue;
        }
        const int rs = subtree_root(s, shorter.span);
        const int rl = subtree_root(s, longer.span);
        if (rs == rl) {
          drop.emplace(j, "shares root '" + s.tokens[rs].text + "' with '" + shorter.text + "'");
        } else {
          drop.emplace(i, "nested in '" + longer.text + "' rooted at '" + s.tokens[rl].text + "'");
        }
      }
    }
  }
  for (size_t i = 0; i < survivors.size(); ++i) {
    auto it = drop.find(i);
    if (it != drop.end()) {
      out.removed.push_back({survivors[i], Tp3Rule::kPreNesting, it->second});
    } else {
      out.kept.push_back(std::move(survivors[i]));
    }
  }
  return out;
}

Selection preprocess_answers(const TaggedSentence& s, const UnigramTable& freq, const RuleSet& rules) {
  return filter_clause_and_nesting(s, select_answers(s, freq, rules), rules);
}

// ---- constituency trees

namespace {

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  ParseNode parse() {
    skip_space();
    ParseNode root = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing text");
    // "( (S ...))" wrappers carry no label.
    while (root.label.empty() && root.children.size() == 1 && !root.children[0].leaf()) {
      ParseNode child = std::move(root.children[0]);
      root = std::move(child);
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kFormat, "constituency tree: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string atom() {
    size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  ParseNode node() {
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    skip_space();
    ParseNode n;
    n.label = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')') {
      // Preterminal: (TAG word)
      ParseNode leaf;
      leaf.label = n.label;
      leaf.word = atom();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return leaf;
    }
    while (pos_ < text_.size() && text_[pos_] == '(') {
      n.children.push_back(node());
      skip_space();
    }
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    if (n.children.empty()) fail("empty constituent");
    return n;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

void collect_leaves(const ParseNode& n, std::vector<std::string>& out) {
  if (n.leaf()) {
    out.push_back(n.word);
    return;
  }
  for (const auto& c : n.children) collect_leaves(c, out);
}

// Leaf ranges [first, last) of every SBAR node.
void sbar_ranges(const ParseNode& n, int& next_leaf, std::vector<Span>& out) {
  if (n.leaf()) {
    ++next_leaf;
    return;
  }
  const int first = next_leaf;
  for (const auto& c : n.children) sbar_ranges(c, next_leaf, out);
  if (n.label == "SBAR" || n.label.rfind("SBAR-", 0) == 0) out.push_back(Span{first, next_leaf});
}

bool is_punct_token(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::ispunct(c); });
}

std::string lower_joined(const std::vector<std::string>& tokens, size_t from, size_t n) {
  std::string out;
  for (size_t i = from; i < from + n; ++i) out += to_lower(tokens[i]) + '\x1f';
  return out;
}

// Start of `needle` inside `hay` (case-insensitive), or npos.
size_t find_tokens(const std::vector<std::string>& hay, const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > hay.size()) return std::string::npos;
  const std::string key = lower_joined(needle, 0, needle.size());
  for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    if (lower_joined(hay, i, needle.size()) == key) return i;
  }
  return std::string::npos;
}

}  // namespace

ParseNode parse_bracketed(std::string_view text) { return BracketParser(text).parse(); }

std::vector<std::string> leaves(const ParseNode& tree) {
  std::vector<std::string> out;
  collect_leaves(tree, out);
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  static const std::string kSplit = ",.;:!?\"()[]";
  std::vector<std::string> out;
  for (const auto& chunk : split(text, ' ')) {
    std::string w = trim(chunk);
    std::vector<std::string> tail;
    while (!w.empty() && kSplit.find(w.front()) != std::string::npos) {
      out.emplace_back(1, w.front());
      w.erase(0, 1);
    }
    while (!w.empty() && kSplit.find(w.back()) != std::string::npos) {
      tail.emplace_back(1, w.back());
      w.pop_back();
    }
    if (w.size() > 2 && (w.ends_with("'s") || w.ends_with("'S"))) {
      out.push_back(w.substr(0, w.size() - 2));
      out.push_back(w.substr(w.size() - 2));
    } else if (!w.empty()) {
      out.push_back(w);
    }
    out.insert(out.end(), tail.rbegin(), tail.rend());
  }
  return out;
}

std::string detokenize(const std::vector<std::string>& tokens) {
  static const std::set<std::string> kAttachLeft = {",", ".", ";", ":", "!", "?", ")", "]", "'s", "n't", "%"};
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty() && !kAttachLeft.count(t) && out.back() != '(' && out.back() != '[') out += ' ';
    out += t;
  }
  return out;
}

MainBody main_body(std::string_view answer, const std::optional<std::string>& constituency) {
  if (!constituency) return {std::string(answer), true};
  const ParseNode tree = parse_bracketed(*constituency);
  const std::vector<std::string> lv = leaves(tree);
  const std::vector<std::string> ans = tokenize(answer);
  const size_t at = find_tokens(lv, ans);
  if (at == std::string::npos) return {std::string(answer), true};
  const Span range{static_cast<int>(at), static_cast<int>(at + ans.size())};

  std::vector<Span> sbars;
  int next_leaf = 0;
  sbar_ranges(tree, next_leaf, sbars);
  std::vector<bool> removed(lv.size(), false);
  for (const Span& sb : sbars) {
    if (!range.contains(sb)) continue;
    for (int k = sb.start; k < sb.end; ++k) removed[k] = true;
  }
  std::vector<std::string> body;
  for (int k = range.start; k < range.end; ++k) {
    if (!removed[k]) body.push_back(lv[k]);
  }
  while (!body.empty() && is_punct_token(body.front())) body.erase(body.begin());
  while (!body.empty() && is_punct_token(body.back())) body.pop_back();
  return {detokenize(body), false};
}

bool contains_tokens(std::string_view haystack, std::string_view needle) {
  return find_tokens(tokenize(haystack), tokenize(needle)) != std::string::npos;
}

// ---- postprocessing

Attribution attribute(std::string_view question, std::string_view answer,
                      const std::vector<ContextSentence>& context) {
  std::set<std::string> qa;
  for (auto& w : words(question)) qa.insert(w);
  for (auto& w : words(answer)) qa.insert(w);
  Attribution out;
  for (size_t i = 0; i < context.size(); ++i) {
    std::set<std::string> si;
    for (auto& w : words(context[i].text)) si.insert(w);
    size_t n = 0;
    for (const auto& w : qa) n += si.count(w);
    if (n > out.overlap || out.best.empty()) {
      out.overlap = n;
      out.best.clear();
    }
    if (n == out.overlap) out.best.push_back(i);
  }
  return out;
}

FilterVerdict filter_question(std::string_view question, std::string_view answer,
                              const std::vector<ContextSentence>& context,
                              const std::optional<std::string>& constituency, const RuleSet& rules) {
  FilterVerdict v;
  auto drop = [&](Tp3Rule rule, std::string detail) {
    v.keep = false;
    v.rule = rule;
    v.detail = std::move(detail);
    return v;
  };
  if (rules.enabled(Tp3Rule::kPostAnswerInQuestion)) {
    if (contains_tokens(question, answer)) return drop(Tp3Rule::kPostAnswerInQuestion, "answer occurs in question");
    MainBody body = main_body(answer, constituency);
    if (!body.skipped && !body.text.empty() && contains_tokens(question, body.text)) {
      return drop(Tp3Rule::kPostAnswerInQuestion, "main body '" + body.text + "' occurs in question");
    }
  }
  if (rules.enabled(Tp3Rule::kPostShortQuestion)) {
    std::vector<std::string> content;
    for (auto& w : words(question)) {
      if (!is_stopword(w)) content.push_back(w);
    }
    if (content.size() <= 1) {
      return drop(Tp3Rule::kPostShortQuestion, "content words: " + join(content, " "));
    }
  }
  if (rules.enabled(Tp3Rule::kPostUnsuitableSource) && !context.empty()) {
    Attribution a = attribute(question, answer, context);
    for (size_t i : a.best) {
      if (!context[i].suitable) {
        return drop(Tp3Rule::kPostUnsuitableSource,
                    "attributed to unsuitable context sentence " + std::to_string(i + 1));
      }
    }
  }
  return v;
}

ExternalQuestion parse_external_question(std::string_view line) {
  try {
    auto j = nlohmann::json::parse(line);
    ExternalQuestion q;
    q.question = j.at("question").get<std::string>();
    q.answer = j.at("answer").get<std::string>();
    q.article = j.value("article", std::string());
    q.sentence_ordinal = j.value("sentence_ordinal", 0);
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed question record: ") + e.what());
  }
}

std::vector<ContextSentence> context_for(const std::vector<TaggedSentence>& corpus,
                                         const std::string& article, int ordinal,
                                         const TaggedSentence** middle) {
  std::map<int, const TaggedSentence*> by_ordinal;
  for (const auto& s : corpus) {
    if (s.source.article == article) by_ordinal[s.source.ordinal] = &s;
  }
  auto it = by_ordinal.find(ordinal);
  if (it == by_ordinal.end()) {
    throw Error(ErrorCode::kNotFound,
                "no sentence " + std::to_string(ordinal) + " in article '" + article + "'");
  }
  if (middle != nullptr) *middle = it->second;
  std::vector<ContextSentence> out;
  auto add = [&](const TaggedSentence* s) { out.push_back({s->text(), assess_suitability(*s).suitable}); };
  if (it != by_ordinal.begin()) add(std::prev(it)->second);
  add(it->second);
  if (std::next(it) != by_ordinal.end()) add(std::next(it)->second);
  return out;
}

}  // namespace metaqa
