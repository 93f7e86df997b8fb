#include "metaqa/metaseq.h"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "metaqa/error.h"
#include "metaqa/text.h"

namespace metaqa {

const char* merge_mode_name(MergeMode mode) {
  return mode == MergeMode::kIdeal ? "ideal" : "phrasal_aware";
}

MergeMode parse_merge_mode(std::string_view name) {
  if (name == "ideal") return MergeMode::kIdeal;
  if (name == "phrasal_aware" || name == "phrasal-aware") return MergeMode::kPhrasalAware;
  throw Error(ErrorCode::kConfig, "unknown merge mode '" + std::string(name) + "'");
}

bool MetaSequence::has_pronoun() const {
  return std::any_of(elements.begin(), elements.end(),
                     [](const MetaElement& e) { return e.is_pronoun(); });
}

int MetaSequence::count_sr(std::string_view sr) const {
  return static_cast<int>(std::count_if(elements.begin(), elements.end(), [&](const MetaElement& e) {
    return !e.is_pronoun() && e.ssu.sr == sr;
  }));
}

std::string encode(const MetaElement& e) { return e.is_pronoun() ? e.pronoun : encode_ssu(e.ssu); }

std::string encode(const MetaSequence& m) {
  std::string out;
  for (const auto& e : m.elements) {
    if (!out.empty()) out += ' ';
    out += encode(e);
  }
  return out;
}

MetaSequence decode(std::string_view s, int r) {
  MetaSequence m;
  m.r = r;
  for (const auto& tok : split(s, ' ')) {
    if (tok.empty()) continue;
    if (tok.find('/') != std::string::npos) {
      m.elements.push_back(MetaElement::of(decode_ssu(tok)));
    } else if (!m.elements.empty() && m.elements.back().is_pronoun() &&
               std::islower(static_cast<unsigned char>(tok[0]))) {
      m.elements.back().pronoun += " " + tok;  // "How many"
    } else {
      m.elements.push_back(MetaElement::of_pronoun(tok));
    }
  }
  return m;
}

std::string canonical_pos(std::string_view pos) {
  if (is_noun_tag(pos)) return "NN";
  if (pos == "VBP" || pos == "VBZ") return "VBZ";
  return std::string(pos);
}

bool equivalent(const Ssu& a, const Ssu& b) {
  return a.sr == b.sr && a.ne == b.ne && canonical_pos(a.pos) == canonical_pos(b.pos);
}

bool equivalent(const MetaElement& a, const MetaElement& b) {
  if (a.is_pronoun() || b.is_pronoun()) return a.pronoun == b.pronoun;
  return equivalent(a.ssu, b.ssu);
}

std::string canonical_key(const MetaElement& e) {
  if (e.is_pronoun()) return e.pronoun;
  return e.ssu.sr + "/" + canonical_pos(e.ssu.pos) + "/" + e.ssu.ne;
}

const TextEntry* SsuTextMap::at_element(size_t ssu_index) const {
  return ssu_index < entries_.size() ? &entries_[ssu_index] : nullptr;
}

std::string SsuTextMap::joined_text() const {
  std::vector<std::string> parts;
  for (const auto& e : entries_) parts.push_back(e.text);
  return join(parts, " ");
}

namespace {

bool is_pronoun_start(const std::vector<Token>& tokens, int i) { return is_wh_tag(tokens[i].pos); }

std::string join_texts(const std::vector<std::string>& parts) {
  static const std::unordered_set<std::string> kLeft = {"'s", "n't", "'", "%"};
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty() && !kLeft.count(p)) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace

UnitList to_units(const SimpleSentence& s, MergeMode mode, bool interrogative) {
  UnitList out;
  const TaggedSentence& c = s.sentence;
  const SrlFrame& frame = s.frame();
  const int n = c.size();

  // Phrase spans honoured in ideal mode: index of the phrase covering a token.
  std::vector<int> phrase_of(n, -1);
  if (mode == MergeMode::kIdeal) {
    for (size_t p = 0; p < c.phrases.size(); ++p) {
      for (int i = c.phrases[p].start; i < c.phrases[p].end; ++i) phrase_of[i] = static_cast<int>(p);
    }
  }

  auto role_of = [&](int i) -> std::optional<std::string> {
    if (i == frame.predicate) return std::string("V");
    if (const Argument* a = frame.argument_at(i)) return a->role;
    if (s.clause_role != "MAIN") return s.clause_role;
    return std::nullopt;
  };
  auto make_unit = [&](int first, int last) {
    Unit u;
    u.first = first;
    u.last = last;
    u.sentence_initial = !s.origin.empty() && s.origin[first] == 0;
    const Token& t = c.tokens[first];
    u.proper_start = t.pos == "NNP" || t.pos == "NNPS" || t.text == "I";
    return u;
  };

  for (int i = 0; i < n; ++i) {
    const Token& t = c.tokens[i];
    if (is_punctuation_tag(t.pos)) continue;

    if (interrogative && is_pronoun_start(c.tokens, i)) {
      Unit u = make_unit(i, i);
      u.pronoun = capitalize_first(t.text);
      u.text = t.text;
      if (to_lower(t.text) == "how" && i + 1 < n) {
        std::string next = to_lower(c.tokens[i + 1].text);
        if (next == "many" || next == "much") {
          u.pronoun += " " + next;
          u.text += " " + c.tokens[i + 1].text;
          u.last = ++i;
        }
      }
      out.units.push_back(std::move(u));
      continue;
    }

    int p = phrase_of[i];
    if (p >= 0 && c.phrases[p].contains(frame.predicate)) {
      // A phrasal verb becomes one V unit carrying the predicate's POS.
      const Span& sp = c.phrases[p];
      Unit u = make_unit(sp.start, sp.end - 1);
      u.ssu = Ssu{"V", c.tokens[frame.predicate].pos, c.tokens[frame.predicate].ne};
      std::vector<std::string> texts, lemmas;
      for (int k = sp.start; k < sp.end; ++k) {
        if (is_punctuation_tag(c.tokens[k].pos)) continue;
        texts.push_back(c.tokens[k].text);
        lemmas.push_back(k == frame.predicate ? c.tokens[k].lemma : c.tokens[k].text);
      }
      u.text = join_texts(texts);
      u.lemma = join_texts(lemmas);
      out.units.push_back(std::move(u));
      i = sp.end - 1;
      continue;
    }

    std::optional<std::string> role;
    if (p >= 0) {
      for (int k = c.phrases[p].start; k < c.phrases[p].end && !role; ++k) role = role_of(k);
    } else {
      role = role_of(i);
    }
    if (!role) {
      out.untagged.push_back(i);
      continue;
    }
    Unit u = make_unit(i, i);
    u.ssu = Ssu{*role, t.pos, t.ne};
    u.text = t.text;
    u.lemma = t.lemma;
    out.units.push_back(std::move(u));
  }
  return out;
}

namespace {

bool is_particle_pos(std::string_view pos) {
  return pos == "IN" || pos == "RB" || pos == "RBR" || pos == "RBS";
}

// Units kept apart in phrasal-aware mode: prepositions/adverbs adjacent to
// a V unit, extended through same-SR runs of prepositions/adverbs.
std::vector<bool> protected_units(const std::vector<Unit>& units) {
  const size_t n = units.size();
  std::vector<bool> prot(n, false);
  auto is_v = [&](size_t i) { return units[i].pronoun.empty() && units[i].ssu.sr == "V"; };
  auto particle = [&](size_t i) {
    return units[i].pronoun.empty() && units[i].ssu.sr != "V" && is_particle_pos(units[i].ssu.pos);
  };
  for (size_t i = 0; i < n; ++i) {
    if (!particle(i)) continue;
    if ((i > 0 && is_v(i - 1)) || (i + 1 < n && is_v(i + 1))) prot[i] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < n; ++i) {
      if (prot[i] || !particle(i)) continue;
      for (size_t j : {i - 1, i + 1}) {
        if (j < n && prot[j] && units[j].ssu.sr == units[i].ssu.sr) {
          prot[i] = true;
          changed = true;
        }
      }
    }
  }
  return prot;
}

}  // namespace

Merged merge(const std::vector<Unit>& units, MergeMode mode, int r) {
  if (units.empty()) throw Error(ErrorCode::kRejected, "no units to merge");
  std::vector<bool> prot(units.size(), false);
  if (mode == MergeMode::kPhrasalAware) prot = protected_units(units);

  Merged out;
  out.sequence.r = r;
  std::map<Ssu, int> ordinals;

  size_t i = 0;
  while (i < units.size()) {
    const Unit& head = units[i];
    if (!head.pronoun.empty()) {
      out.sequence.elements.push_back(MetaElement::of_pronoun(head.pronoun));
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < units.size() && units[j].pronoun.empty() && units[j].ssu.sr == head.ssu.sr &&
           prot[j] == prot[j - 1]) {
      ++j;
    }
    Ssu merged{head.ssu.sr, "", ""};
    std::string noun_pos;
    std::vector<std::string> texts;
    for (size_t k = i; k < j; ++k) {
      const Ssu& u = units[k].ssu;
      merged.pos = u.pos;
      if (is_noun_tag(u.pos)) noun_pos = u.pos;
      if (!u.ne.empty()) merged.ne = u.ne;
      texts.push_back(units[k].text);
    }
    if (!noun_pos.empty()) merged.pos = noun_pos;

    TextEntry entry;
    entry.ssu = merged;
    entry.ordinal = ordinals[merged]++;
    entry.text = join_texts(texts);
    std::vector<std::string> lemma_parts{head.lemma};
    lemma_parts.insert(lemma_parts.end(), texts.begin() + 1, texts.end());
    entry.lemma = join_texts(lemma_parts);
    entry.sentence_initial = head.sentence_initial;
    entry.proper_start = head.proper_start;
    out.map.add(std::move(entry));
    out.sequence.elements.push_back(MetaElement::of(merged));
    i = j;
  }

  std::map<std::string, int> counts;
  for (const auto& e : out.sequence.elements) {
    if (!e.is_pronoun()) ++counts[e.ssu.sr];
  }
  for (const auto& [sr, count] : counts) {
    if (count > r) {
      throw Error(ErrorCode::kValidation, "SR tag " + sr + " occurs " + std::to_string(count) +
                                              " times, exceeding the bound r=" + std::to_string(r));
    }
  }
  return out;
}

}  // namespace metaqa
