#include "metaqa/distractor.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <regex>
#include <set>

#include <json.hpp>

#include "metaqa/error.h"
#include "metaqa/preprocess.h"
#include "metaqa/text.h"
#include "metaqa/tp3.h"

namespace metaqa {

using json = nlohmann::json;

uint64_t Rng::below(uint64_t n) {
  // Reject the low values that would bias x % n.
  const uint64_t threshold = (0 - n) % n;
  for (;;) {
    const uint64_t x = engine_();
    if (x >= threshold) return x % n;
  }
}

long long Rng::between(long long lo, long long hi) {
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long long>(engine_());  // full 64-bit range
  return static_cast<long long>(static_cast<uint64_t>(lo) + below(span));
}

uint64_t seed_for(std::string_view id, uint64_t global_seed) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h ^ global_seed;
}

const char* target_type_name(TargetType t) {
  switch (t) {
    case TargetType::kTemporal: return "type1_temporal";
    case TargetType::kNumeric: return "type1_numeric";
    case TargetType::kPerson: return "type2_person";
    case TargetType::kLocation: return "type2_location";
    case TargetType::kOrganization: return "type2_org";
    case TargetType::kNoun: return "type3_noun";
    case TargetType::kAdjective: return "type3_adjective";
    case TargetType::kVerb: return "type3_verb";
    case TargetType::kAdverb: return "type3_adverb";
  }
  return "unknown";
}

TargetType parse_target_type(std::string_view name) {
  for (int t = 0; t <= static_cast<int>(TargetType::kAdverb); ++t) {
    if (name == target_type_name(static_cast<TargetType>(t))) return static_cast<TargetType>(t);
  }
  throw Error(ErrorCode::kFormat, "unknown target type '" + std::string(name) + "'");
}

// ---- answers

std::string AnswerContext::text() const {
  TaggedSentence s;
  s.tokens = tokens;
  return s.text();
}

AnswerContext answer_context(const TaggedSentence& s, Span span) {
  if (span.start < 0 || span.end > s.size() || span.size() <= 0) {
    throw Error(ErrorCode::kValidation, "answer span out of range in sentence '" + s.id + "'");
  }
  AnswerContext a;
  for (int i = span.start; i < span.end; ++i) {
    a.tokens.push_back(s.tokens[i]);
    std::string role;
    RoleClass cls = RoleClass::kOther;
    int best = std::numeric_limits<int>::max();
    for (const auto& f : s.frames) {
      if (f.predicate == i && span.contains(f.predicate)) {
        role = "V";
        cls = RoleClass::kPredicate;
        best = 0;
        break;
      }
      for (const auto& arg : f.arguments) {
        if (arg.role == "V" || !arg.span.contains(i) || arg.span.size() >= best) continue;
        best = arg.span.size();
        role = arg.role;
        if (subject_argument(f) == &arg) {
          cls = RoleClass::kSubject;
        } else if (is_core_argument(arg.role)) {
          cls = RoleClass::kObject;
        } else {
          cls = RoleClass::kOther;
        }
      }
    }
    a.roles.push_back(role);
    a.role_classes.push_back(cls);
  }
  return a;
}

std::optional<Span> locate_answer(const TaggedSentence& s, std::string_view answer) {
  const std::vector<std::string> needle = tokenize(answer);
  if (needle.empty()) return std::nullopt;
  for (int i = 0; i + static_cast<int>(needle.size()) <= s.size(); ++i) {
    bool ok = true;
    for (size_t k = 0; k < needle.size() && ok; ++k) {
      ok = to_lower(s.tokens[i + k].text) == to_lower(needle[k]);
    }
    if (ok) return Span{i, i + static_cast<int>(needle.size())};
  }
  return std::nullopt;
}

namespace {

std::string entity_class(std::string_view ne) {
  if (ne == "PER" || ne == "PERSON") return "PER";
  if (ne == "LOC" || ne == "GPE") return "LOC";
  if (ne == "ORG" || ne == "ORGANIZATION") return "ORG";
  return "";
}

bool temporal_ne(std::string_view ne) { return ne == "DATE" || ne == "TIME"; }

}  // namespace

std::optional<Target> classify_target(const AnswerContext& a, Span span) {
  if (span.size() <= 0 || span.end > static_cast<int>(a.tokens.size())) return std::nullopt;
  const Token& head = a.tokens[span.end - 1];
  Target t;
  t.span = span;
  t.role = a.roles[span.start];
  t.role_class = a.role_classes[span.start];
  t.pos = head.pos;
  t.lemma = head.lemma;
  {
    TaggedSentence tmp;
    tmp.tokens.assign(a.tokens.begin() + span.start, a.tokens.begin() + span.end);
    t.text = tmp.text();
  }

  const std::string cls = entity_class(head.ne);
  if (!cls.empty()) {
    t.type = cls == "PER" ? TargetType::kPerson : cls == "LOC" ? TargetType::kLocation : TargetType::kOrganization;
    return t;
  }
  if (span.size() == 1) {
    if (auto v = parse_type1(head.text)) {
      // "may" and "march" are calendar words only as proper nouns.
      const bool calendar = (v->form == NumberForm::kWeekday || v->form == NumberForm::kMonth) &&
                            (head.pos.starts_with("NNP") || temporal_ne(head.ne));
      const bool ordinal = v->form == NumberForm::kOrdinalDigits || v->form == NumberForm::kOrdinalWords;
      if (head.pos == "CD" || calendar || temporal_ne(head.ne) || (ordinal && head.pos == "JJ")) {
        t.type = calendar || temporal_ne(head.ne) ? TargetType::kTemporal : TargetType::kNumeric;
        return t;
      }
    }
  }
  if (span.size() != 1 || is_stopword(to_lower(head.text))) return std::nullopt;
  if (is_noun_tag(head.pos)) {
    t.type = TargetType::kNoun;
  } else if (head.pos.starts_with("JJ")) {
    t.type = TargetType::kAdjective;
  } else if (head.pos.starts_with("VB")) {
    t.type = TargetType::kVerb;
  } else if (head.pos.starts_with("RB")) {
    t.type = TargetType::kAdverb;
  } else {
    return std::nullopt;
  }
  return t;
}

std::vector<Target> find_targets(const AnswerContext& a) {
  std::vector<Target> out;
  const int n = static_cast<int>(a.tokens.size());
  for (int i = 0; i < n;) {
    int j = i + 1;
    const std::string cls = entity_class(a.tokens[i].ne);
    if (!cls.empty()) {
      while (j < n && a.tokens[j].ne == a.tokens[i].ne) ++j;
    }
    if (auto t = classify_target(a, Span{i, j})) out.push_back(std::move(*t));
    i = j;
  }
  std::stable_sort(out.begin(), out.end(), [](const Target& x, const Target& y) {
    if (x.type != y.type) return x.type < y.type;
    if (x.role_class != y.role_class) return x.role_class < y.role_class;
    return x.span.start > y.span.start;
  });
  return out;
}

// ---- type 1

namespace {

const std::array<const char*, 20> kOnes = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
const std::array<const char*, 8> kTens = {"twenty", "thirty", "forty", "fifty",
                                          "sixty", "seventy", "eighty", "ninety"};
const std::array<const char*, 7> kWeekdays = {"monday", "tuesday", "wednesday", "thursday",
                                              "friday", "saturday", "sunday"};
const std::array<const char*, 12> kMonths = {"january", "february", "march", "april", "may", "june", "july",
                                             "august", "september", "october", "november", "december"};
constexpr long long kMaxWordNumber = 99;

std::string cardinal_word(long long n) {
  if (n < 20) return kOnes[n];
  std::string w = kTens[n / 10 - 2];
  if (n % 10) w += std::string("-") + kOnes[n % 10];
  return w;
}

std::string ordinal_of_word(const std::string& w) {
  static const std::map<std::string, std::string> irregular = {
      {"one", "first"}, {"two", "second"}, {"three", "third"}, {"five", "fifth"},
      {"eight", "eighth"}, {"nine", "ninth"}, {"twelve", "twelfth"}};
  auto it = irregular.find(w);
  if (it != irregular.end()) return it->second;
  if (w.ends_with("y")) return w.substr(0, w.size() - 1) + "ieth";
  return w + "th";
}

std::string ordinal_word(long long n) {
  std::string w = cardinal_word(n);
  const size_t dash = w.rfind('-');
  if (dash == std::string::npos) return ordinal_of_word(w);
  return w.substr(0, dash + 1) + ordinal_of_word(w.substr(dash + 1));
}

const std::map<std::string, long long>& word_values(bool ordinal) {
  static const auto build = [](bool ord) {
    std::map<std::string, long long> m;
    for (long long n = ord ? 1 : 0; n <= kMaxWordNumber; ++n) m[ord ? ordinal_word(n) : cardinal_word(n)] = n;
    return m;
  };
  static const std::map<std::string, long long> cardinals = build(false);
  static const std::map<std::string, long long> ordinals = build(true);
  return ordinal ? ordinals : cardinals;
}

std::string ordinal_suffix(long long n) {
  const long long m100 = n % 100;
  if (m100 >= 11 && m100 <= 13) return "th";
  switch (n % 10) {
    case 1: return "st";
    case 2: return "nd";
    case 3: return "rd";
    default: return "th";
  }
}

int digit_count(long long v) {
  int d = 1;
  for (v = v < 0 ? -v : v; v >= 10; v /= 10) ++d;
  return d;
}

long long pow10(int e) {
  long long p = 1;
  while (e-- > 0) p *= 10;
  return p;
}

bool cyclic(NumberForm f) { return f == NumberForm::kWeekday || f == NumberForm::kMonth; }
long long cycle_length(NumberForm f) { return f == NumberForm::kWeekday ? 7 : 12; }

long long wrap(NumberForm f, long long v) {
  const long long c = cycle_length(f);
  return ((v - 1) % c + c) % c + 1;
}

bool valid_value(const Type1Value& like, long long v) {
  switch (like.form) {
    case NumberForm::kWeekday:
    case NumberForm::kMonth: return wrap(like.form, v) != like.value;
    case NumberForm::kWords: return v >= 0 && v <= kMaxWordNumber && v != like.value;
    case NumberForm::kOrdinalWords: return v >= 1 && v <= kMaxWordNumber && v != like.value;
    case NumberForm::kOrdinalDigits: return v >= 1 && v != like.value;
    case NumberForm::kDigits: return v != like.value && (like.value < 0) == (v < 0) && (v != 0 || like.value >= 0);
  }
  return false;
}

}  // namespace

bool is_temporal_word(std::string_view text) {
  const std::string w = to_lower(text);
  return std::find(kWeekdays.begin(), kWeekdays.end(), w) != kWeekdays.end() ||
         std::find(kMonths.begin(), kMonths.end(), w) != kMonths.end();
}

std::optional<Type1Value> parse_type1(std::string_view text) {
  static const std::regex kNumber(R"((-?)(\d{1,3}(?:,\d{3})+|\d+)(?:\.(\d+))?)");
  static const std::regex kOrdinal(R"((\d+)(st|nd|rd|th))", std::regex::icase);
  const std::string s(text);
  if (s.empty()) return std::nullopt;
  Type1Value v;
  v.capitalized = std::isupper(static_cast<unsigned char>(s[0])) != 0;
  v.upper = s.size() > 1 && std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::islower(c); }) &&
            std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); });
  const std::string lower = to_lower(s);

  std::smatch m;
  if (std::regex_match(s, m, kNumber)) {
    std::string int_part = m[2].str();
    v.grouped = int_part.find(',') != std::string::npos;
    int_part.erase(std::remove(int_part.begin(), int_part.end(), ','), int_part.end());
    if (int_part.size() > 15) return std::nullopt;
    const std::string frac = m[3].str();
    if (frac.size() > 3) return std::nullopt;
    v.form = NumberForm::kDigits;
    v.decimals = static_cast<int>(frac.size());
    v.digits = static_cast<int>(int_part.size());
    v.value = std::stoll(int_part) * pow10(v.decimals) + (frac.empty() ? 0 : std::stoll(frac));
    if (!m[1].str().empty()) v.value = -v.value;
    v.capitalized = v.upper = false;
    return v;
  }
  if (std::regex_match(s, m, kOrdinal) && m[1].str().size() <= 15) {
    v.form = NumberForm::kOrdinalDigits;
    v.value = std::stoll(m[1].str());
    v.digits = static_cast<int>(m[1].str().size());
    v.upper = std::isupper(static_cast<unsigned char>(m[2].str()[0])) != 0;
    v.capitalized = false;
    return v;
  }
  for (size_t i = 0; i < kWeekdays.size(); ++i) {
    if (lower == kWeekdays[i]) {
      v.form = NumberForm::kWeekday;
      v.value = static_cast<long long>(i) + 1;
      return v;
    }
  }
  for (size_t i = 0; i < kMonths.size(); ++i) {
    if (lower == kMonths[i]) {
      v.form = NumberForm::kMonth;
      v.value = static_cast<long long>(i) + 1;
      return v;
    }
  }
  for (bool ordinal : {false, true}) {
    const auto& table = word_values(ordinal);
    auto it = table.find(lower);
    if (it != table.end()) {
      v.form = ordinal ? NumberForm::kOrdinalWords : NumberForm::kWords;
      v.value = it->second;
      v.digits = digit_count(v.value);
      return v;
    }
  }
  return std::nullopt;
}

std::string format_type1(const Type1Value& like, long long value) {
  std::string out;
  switch (like.form) {
    case NumberForm::kDigits: {
      const bool negative = value < 0;
      const long long mag = negative ? -value : value;
      const long long scale = pow10(like.decimals);
      std::string int_part = std::to_string(mag / scale);
      if (like.grouped) {
        for (int i = static_cast<int>(int_part.size()) - 3; i > 0; i -= 3) int_part.insert(i, ",");
      }
      out = (negative ? "-" : "") + int_part;
      if (like.decimals > 0) {
        std::string frac = std::to_string(mag % scale);
        out += "." + std::string(like.decimals - frac.size(), '0') + frac;
      }
      return out;
    }
    case NumberForm::kOrdinalDigits: {
      std::string suffix = ordinal_suffix(value);
      if (like.upper) {
        std::transform(suffix.begin(), suffix.end(), suffix.begin(), [](unsigned char c) { return std::toupper(c); });
      }
      return std::to_string(value) + suffix;
    }
    case NumberForm::kWords: out = cardinal_word(value); break;
    case NumberForm::kOrdinalWords: out = ordinal_word(value); break;
    case NumberForm::kWeekday: out = kWeekdays[wrap(like.form, value) - 1]; break;
    case NumberForm::kMonth: out = kMonths[wrap(like.form, value) - 1]; break;
  }
  if (like.upper) {
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
  } else if (like.capitalized) {
    out = capitalize_first(out);
  }
  return out;
}

const char* perturbation_name(Perturbation p) {
  switch (p) {
    case Perturbation::kShift: return "shift";
    case Perturbation::kWindow: return "window";
    case Perturbation::kRandom: return "random";
  }
  return "unknown";
}

std::string perturb_type1(std::string_view text, Perturbation p, Rng& rng) {
  const auto parsed = parse_type1(text);
  if (!parsed) throw Error(ErrorCode::kValidation, "not a numeric value: '" + std::string(text) + "'");
  const Type1Value& v = *parsed;
  std::vector<long long> pool;
  switch (p) {
    case Perturbation::kShift:
      for (long long d : {-2, -1, 1, 2}) pool.push_back(v.value + d);
      break;
    case Perturbation::kWindow: {
      // +-10 units or +-50% of the value, whichever is smaller.
      const long long mag = v.value < 0 ? -v.value : v.value;
      const long long w = std::max(1LL, std::min(10LL, mag / 2));
      for (long long d = -w; d <= w; ++d) pool.push_back(v.value + d);
      break;
    }
    case Perturbation::kRandom: {
      long long lo = 0, hi = 0;
      if (cyclic(v.form)) {
        lo = 1;
        hi = cycle_length(v.form);
      } else {
        const long long scale = pow10(v.decimals);
        lo = v.digits <= 1 ? 0 : pow10(v.digits - 1) * scale;
        hi = pow10(v.digits) * scale - 1;
        if (v.form == NumberForm::kWords || v.form == NumberForm::kOrdinalWords) hi = std::min(hi, kMaxWordNumber);
        if (v.value < 0) {
          const long long neg_lo = -hi;
          hi = -lo;
          lo = neg_lo;
        }
      }
      // Rejection draws; the range always holds at least one other value.
      for (int attempt = 0; attempt < 1000; ++attempt) {
        const long long x = rng.between(lo, hi);
        if (valid_value(v, x)) return format_type1(v, x);
      }
      for (long long x = lo; x <= hi && pool.size() < 64; ++x) pool.push_back(x);
      break;
    }
  }
  std::erase_if(pool, [&](long long x) { return !valid_value(v, x); });
  if (pool.empty()) throw Error(ErrorCode::kValidation, "no alternative value for '" + std::string(text) + "'");
  return format_type1(v, pool[rng.below(pool.size())]);
}

std::string perturb_type1(std::string_view text, Rng& rng) {
  return perturb_type1(text, kAllPerturbations[rng.below(kAllPerturbations.size())], rng);
}

// ---- type 2

std::vector<NamedEntity> article_entities(const std::vector<TaggedSentence>& article) {
  std::vector<NamedEntity> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& s : article) {
    for (int i = 0; i < s.size();) {
      const std::string cls = entity_class(s.tokens[i].ne);
      int j = i + 1;
      if (cls.empty()) {
        i = j;
        continue;
      }
      while (j < s.size() && s.tokens[j].ne == s.tokens[i].ne) ++j;
      NamedEntity e{s.text(Span{i, j}), cls};
      if (seen.insert({to_lower(e.text), e.tag}).second) out.push_back(std::move(e));
      i = j;
    }
  }
  return out;
}

std::vector<std::string> type2_candidates(const Target& t, const std::vector<NamedEntity>& article,
                                          const EntityKB* kb, Rng& rng) {
  const std::string tag = t.type == TargetType::kPerson     ? "PER"
                          : t.type == TargetType::kLocation ? "LOC"
                                                            : "ORG";
  const std::string self = to_lower(t.text);
  std::set<std::string> used{self};
  std::vector<std::string> from_article;
  for (const auto& e : article) {
    if (e.tag == tag && used.insert(to_lower(e.text)).second) from_article.push_back(e.text);
  }
  rng.shuffle(from_article);
  std::vector<std::string> from_kb;
  if (kb != nullptr) {
    for (const auto* b : kb->buckets_of(t.text)) {
      if (!b->tag.empty() && b->tag != tag) continue;
      for (const auto& m : b->members) {
        if (used.insert(to_lower(m)).second) from_kb.push_back(m);
      }
    }
    std::sort(from_kb.begin(), from_kb.end());
    rng.shuffle(from_kb);
  }
  from_article.insert(from_article.end(), from_kb.begin(), from_kb.end());
  return from_article;
}

std::string swap_type2(const Target& t, const std::vector<NamedEntity>& article, const EntityKB* kb,
                       Rng& rng) {
  auto c = type2_candidates(t, article, kb, rng);
  if (c.empty()) throw Error(ErrorCode::kNotFound, "no replacement entity for '" + t.text + "'");
  return c.front();
}

// ---- type 3

namespace {

std::string_view lexicon_pos(std::string_view penn) {
  if (penn.starts_with("NN")) return "n";
  if (penn.starts_with("VB")) return "v";
  if (penn.starts_with("JJ")) return "a";
  if (penn.starts_with("RB")) return "r";
  return {};
}

// The form of the target found in the resources: surface text, then lemma.
std::string lookup_key(const Target& t, const EmbeddingTable& emb, const LexicalGraph& lex) {
  const std::string surface = to_lower(t.text);
  if (emb.contains(surface) || !lex.senses_of(surface).empty()) return surface;
  const std::string lemma = to_lower(t.lemma);
  if (!lemma.empty() && (emb.contains(lemma) || !lex.senses_of(lemma).empty())) return lemma;
  return {};
}

}  // namespace

std::vector<Type3Candidate> candidates_type3(const Target& t, const EmbeddingTable& emb,
                                             const LexicalGraph& lex, double lo, double hi) {
  const std::string key = lookup_key(t, emb, lex);
  if (key.empty()) throw Error(ErrorCode::kNotFound, "target '" + t.text + "' has no vector or senses");
  std::vector<Type3Candidate> out;
  std::set<std::string> seen{key};
  if (emb.contains(key)) {
    for (const auto& n : emb.neighbors(key, lo, hi)) {
      if (seen.insert(n.word).second) out.push_back({n.word, lex.antonyms(key, n.word), "embedding"});
    }
  }
  for (const auto& h : lex.hypernym_lemmas(key, lexicon_pos(t.pos))) {
    const std::string w = to_lower(h);
    if (seen.insert(w).second) out.push_back({w, lex.antonyms(key, w), "hypernym"});
  }
  return out;
}

std::optional<std::string> rejection_reason(std::string_view candidate, std::string_view target) {
  const std::string c = to_lower(candidate);
  const std::string t = to_lower(target);
  const std::vector<std::string> cw = words(c);
  const std::vector<std::string> tw = words(t);
  if (!tw.empty() && std::search(cw.begin(), cw.end(), tw.begin(), tw.end()) != cw.end()) {
    return "contains the target word";
  }
  size_t prefix = 0;
  while (prefix < c.size() && prefix < t.size() && c[prefix] == t[prefix]) ++prefix;
  if (prefix >= 3 && edit_distance(c, t) < 3) return "shares a prefix with the target within edit distance 2";
  return std::nullopt;
}

std::vector<Type3Candidate> filter_candidates(std::vector<Type3Candidate> cands, std::string_view target) {
  std::erase_if(cands, [&](const Type3Candidate& c) { return rejection_reason(c.word, target).has_value(); });
  return cands;
}

double edit_score(int e) { return 1.0 - 1.0 / (1.0 + std::exp(static_cast<double>(e))); }

double combined_score(double s_v, double s_n, double s_d, bool antonym) {
  return antonym ? (2.0 * s_v + s_n + s_d) / 4.0 : (s_v + s_n + s_d) / 3.0;
}

double entropy_score(double r_prime) { return r_prime <= 0.0 ? 0.0 : -r_prime * std::log(r_prime); }

DistractorScore score(std::string_view candidate, std::string_view target, const EmbeddingTable& emb,
                      const LexicalGraph& lex, bool antonym) {
  DistractorScore s;
  s.E = edit_distance(to_lower(candidate), to_lower(target));
  s.S_v = emb.similarity(candidate, target);
  s.S_n = lex.wup(candidate, target);
  s.S_d = edit_score(s.E);
  // A negative cosine can pull the mean below zero; the entropy needs [0, 1].
  s.R_prime = std::clamp(combined_score(s.S_v, s.S_n, s.S_d, antonym), 0.0, 1.0);
  s.R = entropy_score(s.R_prime);
  return s;
}

std::vector<RankedCandidate> rank_type3(const Target& t, const EmbeddingTable& emb, const LexicalGraph& lex,
                                        double lo, double hi) {
  const std::string key = lookup_key(t, emb, lex);
  std::vector<RankedCandidate> out;
  for (auto& c : filter_candidates(candidates_type3(t, emb, lex, lo, hi), key)) {
    if (!emb.contains(c.word) || !emb.contains(key)) continue;
    DistractorScore s = score(c.word, key, emb, lex, c.antonym);
    out.push_back({std::move(c), s});
  }
  std::sort(out.begin(), out.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
    if (a.score.R != b.score.R) return a.score.R > b.score.R;
    return a.candidate.word < b.candidate.word;
  });
  return out;
}

// ---- selection

std::string replace_target(const AnswerContext& a, Span span, std::string_view replacement) {
  TaggedSentence s;
  s.tokens.assign(a.tokens.begin(), a.tokens.begin() + span.start);
  const std::vector<std::string> parts = split(replacement, ' ');
  if (!s.tokens.empty() && !parts.empty() && !parts.front().empty()) {
    std::string& article = s.tokens.back().text;
    const std::string lower = to_lower(article);
    if (lower == "a" || lower == "an") {
      const char first = static_cast<char>(std::tolower(static_cast<unsigned char>(parts.front()[0])));
      std::string fixed = std::string("aeiou").find(first) != std::string::npos ? "an" : "a";
      article = std::isupper(static_cast<unsigned char>(article[0])) ? capitalize_first(fixed) : fixed;
    }
  }
  for (const auto& p : parts) {
    if (!p.empty()) s.tokens.push_back(Token{p, p, "", ""});
  }
  s.tokens.insert(s.tokens.end(), a.tokens.begin() + span.end, a.tokens.end());
  return s.text();
}

namespace {

std::string match_case(const std::string& like, std::string word) {
  if (!like.empty() && std::isupper(static_cast<unsigned char>(like[0]))) return capitalize_first(std::move(word));
  return word;
}

const LexicalGraph& empty_lexicon() {
  static const LexicalGraph g;
  return g;
}

}  // namespace

DistractorSet generate_distractors(const AnswerContext& answer, const std::vector<NamedEntity>& article,
                                   const DistractorResources& res, const DistractorConfig& config,
                                   uint64_t seed) {
  Rng rng(seed);
  DistractorSet out;
  out.final_lo = config.lo;
  const std::vector<Target> targets = find_targets(answer);
  std::set<std::string> seen{to_lower(answer.text())};
  auto full = [&] { return out.distractors.size() >= config.count; };
  auto add = [&](const Target& t, const std::string& replacement, std::string generator,
                 std::optional<DistractorScore> s) {
    Distractor d{replace_target(answer, t.span, replacement), std::move(generator), t, replacement, s};
    if (!full() && seen.insert(to_lower(d.text)).second) out.distractors.push_back(std::move(d));
  };
  const LexicalGraph& lex = res.lexicon != nullptr ? *res.lexicon : empty_lexicon();
  auto add_type3 = [&](const Target& t, double lo) {
    if (res.embeddings == nullptr) return;
    try {
      for (const auto& rc : rank_type3(t, *res.embeddings, lex, lo, config.hi)) {
        if (full()) break;
        add(t, match_case(t.text, rc.candidate.word), "type3:" + rc.candidate.source, rc.score);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotFound) throw;
    }
  };

  for (const auto& t : targets) {
    if (full()) break;
    if (is_type1(t.type)) {
      for (int attempt = 0; attempt < 32 && !full(); ++attempt) {
        const Perturbation p = kAllPerturbations[rng.below(kAllPerturbations.size())];
        add(t, perturb_type1(t.text, p, rng), std::string("type1:") + perturbation_name(p), std::nullopt);
      }
    } else if (is_type2(t.type)) {
      std::set<std::string> in_article;
      for (const auto& e : article) in_article.insert(to_lower(e.text));
      for (const auto& c : type2_candidates(t, article, res.kb, rng)) {
        add(t, c, in_article.count(to_lower(c)) ? "type2:article" : "type2:kb", std::nullopt);
      }
    } else {
      add_type3(t, config.lo);
    }
  }
  // Widen the similarity interval downwards for the type-3 targets.
  double lo = config.lo;
  while (!full() && lo - config.relax_step >= config.relax_floor - 1e-9) {
    lo -= config.relax_step;
    out.final_lo = lo;
    for (const auto& t : targets) {
      if (is_type3(t.type)) add_type3(t, lo);
    }
  }
  out.partial = !full();
  return out;
}

// ---- multiple-choice assembly

Mcq assemble_mcq(const Qap& qap, const DistractorSet& d, uint64_t seed) {
  if (d.distractors.size() < 3) {
    throw Error(ErrorCode::kRejected, "only " + std::to_string(d.distractors.size()) +
                                          " distractors for QAP '" + qap.id + "'");
  }
  std::array<std::string, 4> items = {qap.answer, d.distractors[0].text, d.distractors[1].text,
                                      d.distractors[2].text};
  std::array<std::string, 4> prov = {"answer", "", "", ""};
  for (int i = 0; i < 3; ++i) {
    const Distractor& x = d.distractors[i];
    prov[i + 1] = x.generator + ":" + x.target.text + "->" + x.replacement;
  }
  std::vector<int> perm = {0, 1, 2, 3};
  Rng rng(seed);
  rng.shuffle(perm);
  Mcq m;
  m.id = qap.id;
  m.question = qap.question;
  for (int i = 0; i < 4; ++i) {
    m.options[i] = items[perm[i]];
    m.provenance[i] = prov[perm[i]];
    if (perm[i] == 0) m.answer_index = i;
  }
  return m;
}

std::string distractor_set_to_json(std::string_view qap_id, const DistractorSet& d) {
  json list = json::array();
  for (const auto& x : d.distractors) {
    json t = {{"text", x.target.text},   {"start", x.target.span.start}, {"end", x.target.span.end},
              {"type", target_type_name(x.target.type)}, {"role", x.target.role},
              {"role_class", static_cast<int>(x.target.role_class)},
              {"pos", x.target.pos},     {"lemma", x.target.lemma}};
    json item = {{"text", x.text}, {"generator", x.generator}, {"target", t}, {"replacement", x.replacement}};
    if (x.score) {
      item["score"] = {{"E", x.score->E},     {"S_v", x.score->S_v},         {"S_n", x.score->S_n},
                       {"S_d", x.score->S_d}, {"R_prime", x.score->R_prime}, {"R", x.score->R}};
    }
    list.push_back(std::move(item));
  }
  json j = {{"qap_id", qap_id}, {"partial", d.partial}, {"final_lo", d.final_lo}, {"distractors", list}};
  return j.dump();
}

DistractorSet parse_distractor_set_json(std::string_view line, std::string* qap_id) {
  try {
    json j = json::parse(line);
    DistractorSet d;
    if (qap_id) *qap_id = j.at("qap_id").get<std::string>();
    d.partial = j.at("partial").get<bool>();
    d.final_lo = j.at("final_lo").get<double>();
    for (const auto& item : j.at("distractors")) {
      Distractor x;
      x.text = item.at("text").get<std::string>();
      x.generator = item.at("generator").get<std::string>();
      x.replacement = item.at("replacement").get<std::string>();
      const json& t = item.at("target");
      x.target.text = t.at("text").get<std::string>();
      x.target.span = {t.at("start").get<int>(), t.at("end").get<int>()};
      x.target.type = parse_target_type(t.at("type").get<std::string>());
      x.target.role = t.value("role", "");
      const int rc = t.value("role_class", static_cast<int>(RoleClass::kOther));
      if (rc < 0 || rc > static_cast<int>(RoleClass::kOther)) throw Error(ErrorCode::kFormat, "bad role_class");
      x.target.role_class = static_cast<RoleClass>(rc);
      x.target.pos = t.value("pos", "");
      x.target.lemma = t.value("lemma", "");
      if (item.contains("score")) {
        const json& s = item["score"];
        x.score = DistractorScore{s.at("E").get<int>(),     s.at("S_v").get<double>(),
                                  s.at("S_n").get<double>(), s.at("S_d").get<double>(),
                                  s.at("R_prime").get<double>(), s.at("R").get<double>()};
      }
      d.distractors.push_back(std::move(x));
    }
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed distractor record: ") + e.what());
  }
}

std::string mcq_to_json(const Mcq& m) {
  json j = {{"id", m.id},
            {"question", m.question},
            {"options", m.options},
            {"answer_index", m.answer_index},
            {"provenance", m.provenance}};
  return j.dump();
}

Mcq parse_mcq_json(std::string_view line) {
  try {
    json j = json::parse(line);
    Mcq m;
    m.id = j.at("id").get<std::string>();
    m.question = j.at("question").get<std::string>();
    m.options = j.at("options").get<std::array<std::string, 4>>();
    m.answer_index = j.at("answer_index").get<int>();
    m.provenance = j.value("provenance", std::array<std::string, 4>{});
    if (m.answer_index < 0 || m.answer_index > 3) throw Error(ErrorCode::kValidation, "answer_index out of range");
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed MCQ record: ") + e.what());
  }
}

}  // namespace metaqa
