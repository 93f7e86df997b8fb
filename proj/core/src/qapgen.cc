#include "metaqa/qapgen.h"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "metaqa/error.h"
#include "metaqa/preprocess.h"
#include "metaqa/text.h"

namespace metaqa {

using json = nlohmann::ordered_json;

std::string qap_to_json(const Qap& q) {
  json j = {{"id", q.id},         {"question", q.question},   {"answer", q.answer},
            {"source", q.source}, {"md", q.md},               {"mi_index", q.mi_index},
            {"match_kind", match_kind_name(q.match_kind)}};
  return j.dump();
}

Qap parse_qap_json(std::string_view line) {
  try {
    json j = json::parse(line);
    Qap q;
    q.id = j.at("id").get<std::string>();
    q.question = j.at("question").get<std::string>();
    q.answer = j.at("answer").get<std::string>();
    q.source = j.at("source").get<std::string>();
    q.md = j.value("md", std::string());
    q.mi_index = j.value("mi_index", 0);
    q.match_kind = parse_match_kind(j.value("match_kind", std::string("perfect")));
    return q;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed QAP record: ") + e.what());
  }
}

namespace {

bool contains(const std::vector<MetaElement>& set, const MetaElement& e) {
  return std::any_of(set.begin(), set.end(), [&](const MetaElement& o) { return equivalent(o, e); });
}

}  // namespace

std::vector<size_t> answer_positions(const MetaSequence& x, const MetaSequence& y,
                                     const MetaSequence& x_s) {
  std::set<size_t> out;
  for (const auto& a : set_difference(x.elements, y.elements)) {
    if (a.is_pronoun()) continue;
    bool found = false;
    for (size_t i = 0; i < x_s.size(); ++i) {
      if (equivalent(x_s.elements[i], a)) {
        out.insert(i);
        found = true;
      }
    }
    if (found) continue;
    for (size_t i = 0; i < x_s.size(); ++i) {
      const MetaElement& e = x_s.elements[i];
      if (!e.is_pronoun() && e.ssu.sr == a.ssu.sr && !contains(y.elements, e)) out.insert(i);
    }
  }
  return {out.begin(), out.end()};
}

MetaSequence synthesize_mi(const MetaSequence& x, const MetaSequence& y, const MetaSequence& x_s,
                           const MatchResult& match) {
  const std::vector<MetaElement> drop =
      set_difference(set_intersection(x.elements, y.elements), x_s.elements);
  std::vector<MetaElement> answers;
  for (size_t i : answer_positions(x, y, x_s)) answers.push_back(x_s.elements[i]);

  MetaSequence out;
  out.r = y.r;
  for (const auto& e : y.elements) {
    if (!contains(drop, e)) out.elements.push_back(e);
  }
  if (match.z.size() != x_s.size()) {
    std::vector<MetaElement> extra;
    for (const auto* run : {&match.after_z, &match.before_z}) {
      for (const auto& e : *run) {
        if (contains(match.z.elements, e) || contains(out.elements, e) || contains(extra, e)) continue;
        extra.push_back(e);
      }
    }
    out.elements.insert(out.elements.end(), extra.begin(), extra.end());
  }
  std::erase_if(out.elements, [&](const MetaElement& e) { return !e.is_pronoun() && contains(answers, e); });
  if (std::none_of(out.elements.begin(), out.elements.end(),
                   [](const MetaElement& e) { return e.is_verb(); })) {
    throw Error(ErrorCode::kRejected, "synthesized sequence '" + encode(out) + "' has no V element");
  }
  return out;
}

std::string helping_verb(Number number, std::string_view tense_pos) {
  if (tense_pos == "VBD") return "did";
  return number == Number::kSingular ? "does" : "do";
}

Number subject_number(const Ssu& subject, std::string_view subject_text) {
  if (subject.pos == "NNS" || subject.pos == "NNPS") return Number::kPlural;
  if (subject.pos == "NN" || subject.pos == "NNP") return Number::kSingular;
  static const std::set<std::string> kPlural = {"we", "they", "you", "i", "these", "those"};
  std::vector<std::string> w = words(subject_text);
  if (w.size() == 1 && kPlural.count(w.front())) return Number::kPlural;
  return Number::kSingular;
}

std::string realize_question(const MetaSequence& y_s, const MetaSequence& x_s,
                             const SsuTextMap& map) {
  struct Slot {
    std::string text;
    int source = -1;  // x_s position the text came from
    bool lowerable = false;
  };
  std::vector<Slot> slots(y_s.size());
  std::vector<bool> used(x_s.size(), false);
  std::vector<size_t> unresolved;

  for (size_t k = 0; k < y_s.size(); ++k) {
    const MetaElement& e = y_s.elements[k];
    if (e.is_pronoun()) {
      slots[k].text = e.pronoun;
      continue;
    }
    bool found = false;
    for (size_t i = 0; i < x_s.size() && !found; ++i) {
      if (used[i] || !equivalent(x_s.elements[i], e)) continue;
      const TextEntry* entry = map.at_element(i);
      if (entry == nullptr) continue;
      used[i] = true;
      slots[k].text = entry->text;
      slots[k].source = static_cast<int>(i);
      slots[k].lowerable = entry->sentence_initial && !entry->proper_start;
      found = true;
    }
    if (found) continue;
    if (!e.is_verb()) {
      throw Error(ErrorCode::kRejected, "no text for " + encode(e) + " in the SSU-text map");
    }
    unresolved.push_back(k);
  }

  if (!unresolved.empty()) {
    size_t first_v = 0;
    while (!y_s.elements[first_v].is_verb()) ++first_v;
    const std::string& tense = y_s.elements[first_v].ssu.pos;
    if (tense != "VBD" && tense != "VBP" && tense != "VBZ") {
      throw Error(ErrorCode::kRejected, "unresolved verb after non-finite " + encode(y_s.elements[first_v]));
    }
    // Lemma source: the entry the first V matched, else the first V entry.
    const TextEntry* verb = nullptr;
    if (slots[first_v].source >= 0) verb = map.at_element(static_cast<size_t>(slots[first_v].source));
    for (size_t i = 0; verb == nullptr && i < x_s.size(); ++i) {
      if (x_s.elements[i].is_verb()) verb = map.at_element(i);
    }
    if (verb == nullptr) throw Error(ErrorCode::kRejected, "no verb text to resolve helping verb");
    const bool main_verb_pending =
        std::any_of(unresolved.begin(), unresolved.end(), [&](size_t k) { return k != first_v; });
    if (!main_verb_pending) {
      throw Error(ErrorCode::kRejected, "verb " + encode(y_s.elements[first_v]) + " has no text");
    }

    const MetaElement* subject = nullptr;
    std::string subject_text;
    for (size_t k = 0; k < y_s.size(); ++k) {
      const MetaElement& e = y_s.elements[k];
      if (e.is_pronoun() || !is_core_argument(e.ssu.sr) || slots[k].source < 0) continue;
      if (subject == nullptr || core_argument_index(e.ssu.sr) < core_argument_index(subject->ssu.sr)) {
        subject = &e;
        subject_text = slots[k].text;
      }
    }
    if (subject == nullptr) throw Error(ErrorCode::kRejected, "cannot determine agreement");

    slots[first_v].text = helping_verb(subject_number(subject->ssu, subject_text), tense);
    slots[first_v].lowerable = false;
    for (size_t k : unresolved) {
      if (k != first_v) slots[k].text = verb->lemma;
    }
  }

  std::vector<std::string> parts;
  for (size_t k = 0; k < slots.size(); ++k) {
    if (slots[k].text.empty()) continue;
    std::string t = slots[k].text;
    if (!parts.empty() && slots[k].lowerable) t = lowercase_first(t);
    parts.push_back(std::move(t));
  }
  if (parts.empty()) throw Error(ErrorCode::kRejected, "empty question");
  parts.front() = capitalize_first(parts.front());
  return join(parts, " ") + "?";
}

std::string extract_answer(const MetaSequence& x, const MetaSequence& y, const MetaSequence& x_s,
                           const SsuTextMap& map) {
  std::vector<std::string> parts;
  for (size_t i : answer_positions(x, y, x_s)) {
    if (const TextEntry* e = map.at_element(i)) parts.push_back(e->text);
  }
  if (parts.empty()) {
    throw Error(ErrorCode::kRejected, "no SSU of '" + encode(x_s) + "' answers '" + encode(y) + "'");
  }
  return join(parts, " ");
}

GenerationResult generate_qaps(const TaggedSentence& s, const MsdipStore& store, MergeMode mode) {
  if (store.empty()) throw Error(ErrorCode::kNotFound, "MSDIP store is empty");
  GenerationResult out;
  Segmentation seg = segment(s);
  if (seg.unsegmentable()) {
    out.rejections.push_back({s.id, "unsegmentable"});
    return out;
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (size_t ci = 0; ci < seg.clauses.size(); ++ci) {
    SimpleSentence clause = strip_leading_conjunction(seg.clauses[ci]);
    Merged merged;
    try {
      UnitList units = to_units(clause, mode);
      merged = merge(units.units, mode);
    } catch (const Error& e) {
      out.rejections.push_back({s.id, e.what()});
      continue;
    }
    const MetaSequence& x_s = merged.sequence;
    if (x_s.size() < 3) {
      out.rejections.push_back({s.id, "meta sequence '" + encode(x_s) + "' is shorter than 3"});
      continue;
    }
    BestMatch best = best_match(x_s, store);
    ++out.clause_kinds[static_cast<size_t>(best.kind())];
    if (best.needs_teaching()) {
      TeachRequest t;
      t.sentence_id = s.id;
      t.clause_index = static_cast<int>(ci);
      t.clause_text = clause.text();
      t.x_s = encode(x_s);
      t.kind = best.kind();
      if (!best.group.empty()) {
        t.best_md = encode(best.group.front().pair->md);
        t.lcs_length = best.group.front().z.size();
      }
      out.teach_requests.push_back(std::move(t));
    }
    for (const auto& m : best.group) {
      if (!m.usable()) continue;
      const MsdipPair& pair = *m.pair;
      for (size_t mi = 0; mi < pair.mis.size(); ++mi) {
        try {
          MetaSequence y_s = synthesize_mi(pair.md, pair.mis[mi], x_s, m);
          Qap q;
          q.question = realize_question(y_s, x_s, merged.map);
          q.answer = extract_answer(pair.md, pair.mis[mi], x_s, merged.map);
          if (!seen.emplace(q.question, q.answer).second) continue;
          q.source = s.id;
          q.md = encode(pair.md);
          q.mi_index = static_cast<int>(mi);
          q.match_kind = m.kind;
          out.qaps.push_back(std::move(q));
        } catch (const Error& e) {
          out.rejections.push_back({s.id, e.what()});
        }
      }
    }
  }
  for (size_t i = 0; i < out.qaps.size(); ++i) {
    out.qaps[i].id = s.id + "-q" + std::to_string(i + 1);
  }
  return out;
}

GenerationResult generate_corpus(const std::vector<TaggedSentence>& corpus,
                                 const MsdipStore& store, MergeMode mode) {
  if (store.empty()) throw Error(ErrorCode::kNotFound, "MSDIP store is empty");
  GenerationResult all;
  for (const auto& s : corpus) {
    GenerationResult r = generate_qaps(s, store, mode);
    std::move(r.qaps.begin(), r.qaps.end(), std::back_inserter(all.qaps));
    std::move(r.teach_requests.begin(), r.teach_requests.end(), std::back_inserter(all.teach_requests));
    std::move(r.rejections.begin(), r.rejections.end(), std::back_inserter(all.rejections));
    for (size_t k = 0; k < all.clause_kinds.size(); ++k) all.clause_kinds[k] += r.clause_kinds[k];
  }
  return all;
}

}  // namespace metaqa
