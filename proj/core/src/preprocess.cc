#include "metaqa/preprocess.h"

#include <algorithm>
#include <regex>
#include <unordered_set>

#include "metaqa/error.h"
#include "metaqa/text.h"

namespace metaqa {

namespace {

struct Rewrite {
  std::regex pattern;
  std::string replacement;
};

const std::vector<Rewrite>& rewrites() {
  static const std::vector<Rewrite> rules = [] {
    const auto icase = std::regex::ECMAScript | std::regex::icase;
    std::vector<Rewrite> r;
    r.push_back({std::regex(R"(\be\.g\.)", icase), "for example"});
    r.push_back({std::regex(R"(\bi\.e\.)", icase), "that is"});
    r.push_back({std::regex(R"(\ba\.k\.a\.)", icase), "also known as"});
    r.push_back({std::regex(R"(\b([Ww])on(?:'|’)t\b)"), "$1ill not"});
    r.push_back({std::regex(R"(\b([Cc])an(?:'|’)t\b)"), "$1annot"});
    r.push_back({std::regex(R"(([A-Za-z])n(?:'|’)t\b)"), "$1 not"});
    r.push_back({std::regex(R"(([A-Za-z])(?:'|’)m\b)"), "$1 am"});
    r.push_back({std::regex(R"(([A-Za-z])(?:'|’)s\b)"), "$1 is"});
    r.push_back({std::regex(R"(([A-Za-z])(?:'|’)re\b)"), "$1 are"});
    r.push_back({std::regex(R"(([A-Za-z])(?:'|’)ve\b)"), "$1 have"});
    return r;
  }();
  return rules;
}

struct Slang {
  const char* word;
  const char* expansion;
};

constexpr Slang kSlang[] = {{"gonna", "going to"}, {"wanna", "want to"}, {"gotta", "got to"},
                            {"gimme", "give me"},  {"lemme", "let me"},  {"ya", "you"}};

std::string expand_slang(const std::string& in) {
  static const std::regex word_re(R"(\b(gonna|wanna|gotta|gimme|lemme|ya)\b)",
                                  std::regex::ECMAScript | std::regex::icase);
  std::string out;
  auto begin = std::sregex_iterator(in.begin(), in.end(), word_re);
  size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    out.append(in, last, m.position() - last);
    std::string matched = m.str();
    std::string lower = to_lower(matched);
    for (const auto& s : kSlang) {
      if (lower == s.word) {
        std::string rep = s.expansion;
        if (std::isupper(static_cast<unsigned char>(matched[0]))) rep = capitalize_first(rep);
        out += rep;
        break;
      }
    }
    last = m.position() + m.length();
  }
  out.append(in, last, std::string::npos);
  return out;
}

Span clause_span(const SrlFrame& f) {
  Span s{f.predicate, f.predicate + 1};
  for (const auto& a : f.arguments) {
    s.start = std::min(s.start, a.span.start);
    s.end = std::max(s.end, a.span.end);
  }
  return s;
}

SimpleSentence restrict(const TaggedSentence& s, int frame_index, Span span) {
  SimpleSentence out;
  out.parent_id = s.id;
  TaggedSentence& c = out.sentence;
  c.id = s.id;
  c.source = s.source;
  c.constituency = std::nullopt;
  for (int i = span.start; i < span.end; ++i) {
    c.tokens.push_back(s.tokens[i]);
    out.origin.push_back(i);
    int h = s.dep_heads.empty() ? -1 : s.dep_heads[i];
    c.dep_heads.push_back(span.contains(h) && h != i ? h - span.start : -1);
  }
  const SrlFrame& f = s.frames[frame_index];
  SrlFrame rebased;
  rebased.predicate = f.predicate - span.start;
  for (const auto& a : f.arguments) {
    rebased.arguments.push_back({a.role, {a.span.start - span.start, a.span.end - span.start}});
  }
  c.frames.push_back(std::move(rebased));
  for (const auto& p : s.phrases) {
    if (span.contains(p)) c.phrases.push_back({p.start - span.start, p.end - span.start});
  }
  return out;
}

int root_frame(const TaggedSentence& s) {
  if (s.frames.empty()) return -1;
  if (static_cast<int>(s.dep_heads.size()) == s.size()) {
    int root = dependency_root(s);
    for (size_t f = 0; f < s.frames.size(); ++f) {
      if (s.frames[f].predicate == root) return static_cast<int>(f);
    }
  }
  return 0;
}

}  // namespace

std::string normalize(std::string_view text) {
  std::string out(text);
  for (const auto& r : rewrites()) out = std::regex_replace(out, r.pattern, r.replacement);
  return expand_slang(out);
}

const Argument* subject_argument(const SrlFrame& frame) {
  const Argument* best = nullptr;
  for (const auto& a : frame.arguments) {
    if (!is_core_argument(a.role) || a.span.end > frame.predicate) continue;
    if (!best || core_argument_index(a.role) < core_argument_index(best->role)) best = &a;
  }
  return best;
}

const Argument* object_argument(const SrlFrame& frame) {
  for (const auto& a : frame.arguments) {
    if (is_core_argument(a.role) && a.span.start > frame.predicate) return &a;
  }
  return nullptr;
}

Segmentation segment(const TaggedSentence& s) {
  Segmentation out;
  std::vector<SimpleSentence> main, sub;
  for (size_t f = 0; f < s.frames.size(); ++f) {
    const SrlFrame& frame = s.frames[f];
    if (!subject_argument(frame) || !object_argument(frame)) {
      out.discarded.push_back({static_cast<int>(f), "clause lacks a subject or an object"});
      continue;
    }
    const Argument* enclosing = nullptr;
    for (size_t g = 0; g < s.frames.size(); ++g) {
      if (g == f) continue;
      for (const auto& a : s.frames[g].arguments) {
        if (!a.span.contains(frame.predicate)) continue;
        if (!enclosing || a.span.size() < enclosing->span.size()) enclosing = &a;
      }
    }
    SimpleSentence clause = restrict(s, static_cast<int>(f), clause_span(frame));
    if (enclosing) {
      clause.clause_role = enclosing->role;
      sub.push_back(std::move(clause));
    } else {
      main.push_back(std::move(clause));
    }
  }
  auto by_predicate = [](const SimpleSentence& a, const SimpleSentence& b) {
    return a.origin[a.frame().predicate] < b.origin[b.frame().predicate];
  };
  std::stable_sort(main.begin(), main.end(), by_predicate);
  std::stable_sort(sub.begin(), sub.end(), by_predicate);
  out.clauses = std::move(main);
  for (auto& c : sub) out.clauses.push_back(std::move(c));
  return out;
}

SimpleSentence whole_clause(const TaggedSentence& s) {
  int f = root_frame(s);
  if (f < 0) throw Error(ErrorCode::kRejected, "sentence '" + s.id + "' has no predicate frame");
  return restrict(s, f, Span{0, s.size()});
}

SimpleSentence strip_leading_conjunction(const SimpleSentence& s) {
  static const std::unordered_set<std::string> kListed = {
      "and", "but", "for", "or", "plus", "so", "therefore", "because"};
  const SrlFrame& frame = s.frame();
  const Argument* subj = subject_argument(frame);
  int limit = subj ? subj->span.start : frame.predicate;
  std::vector<bool> drop(s.sentence.size(), false);
  bool any = false;
  for (int i = 0; i < limit; ++i) {
    const Token& t = s.sentence.tokens[i];
    if (t.pos == "CC" || kListed.count(to_lower(t.text))) {
      drop[i] = true;
      any = true;
    }
  }
  if (!any) return s;

  std::vector<int> new_index(drop.size(), -1);
  int next = 0;
  for (size_t i = 0; i < drop.size(); ++i) {
    if (!drop[i]) new_index[i] = next++;
  }
  auto remap_span = [&](Span sp) {
    Span r{-1, -1};
    for (int i = sp.start; i < sp.end; ++i) {
      if (new_index[i] < 0) continue;
      if (r.start < 0) r.start = new_index[i];
      r.end = new_index[i] + 1;
    }
    return r;
  };

  SimpleSentence out;
  out.parent_id = s.parent_id;
  out.clause_role = s.clause_role;
  TaggedSentence& c = out.sentence;
  c.id = s.sentence.id;
  c.source = s.sentence.source;
  for (size_t i = 0; i < drop.size(); ++i) {
    if (drop[i]) continue;
    c.tokens.push_back(s.sentence.tokens[i]);
    out.origin.push_back(s.origin[i]);
    int h = s.sentence.dep_heads[i];
    c.dep_heads.push_back(h >= 0 && new_index[h] >= 0 && h != static_cast<int>(i) ? new_index[h] : -1);
  }
  SrlFrame f;
  f.predicate = new_index[frame.predicate];
  for (const auto& a : frame.arguments) {
    Span sp = remap_span(a.span);
    if (sp.start >= 0) f.arguments.push_back({a.role, sp});
  }
  c.frames.push_back(std::move(f));
  for (const auto& p : s.sentence.phrases) {
    Span sp = remap_span(p);
    if (sp.start >= 0) c.phrases.push_back(sp);
  }
  return out;
}

int content_word_count(const TaggedSentence& s) {
  int n = 0;
  for (const auto& t : s.tokens) {
    if (is_punctuation_tag(t.pos)) continue;
    if (!is_stopword(to_lower(t.text))) ++n;
  }
  return n;
}

SuitabilityVerdict assess_suitability(const TaggedSentence& s) {
  static const std::unordered_set<std::string> kWhWords = {
      "what", "which", "who", "whom", "whose", "when", "where", "why", "how"};
  SuitabilityVerdict v;
  int first = -1, last = -1;
  for (int i = 0; i < s.size(); ++i) {
    if (is_punctuation_tag(s.tokens[i].pos) && s.tokens[i].text != "?") continue;
    if (first < 0) first = i;
    last = i;
  }
  if (first >= 0) {
    const Token& t = s.tokens[first];
    if (is_wh_tag(t.pos) || kWhWords.count(to_lower(t.text))) v.reasons.push_back("wh_start");
    if (t.pos == "VB") v.reasons.push_back("verb_start");
  }
  if (last >= 0 && !s.tokens[last].text.empty() && s.tokens[last].text.back() == '?') {
    v.reasons.push_back("question_mark");
  }
  bool has_roles = std::any_of(s.frames.begin(), s.frames.end(), [](const SrlFrame& f) {
    return subject_argument(f) && object_argument(f);
  });
  if (!has_roles) v.reasons.push_back("missing_role");
  if (content_word_count(s) < 4) v.reasons.push_back("too_short");
  v.suitable = v.reasons.empty();
  return v;
}

}  // namespace metaqa
