#include "metaqa/matcher.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "metaqa/annotation.h"
#include "metaqa/error.h"
#include "metaqa/suffix_tree.h"

namespace metaqa {

const char* match_kind_name(MatchKind kind) {
  switch (kind) {
    case MatchKind::kPerfect: return "perfect";
    case MatchKind::kSuccessful: return "successful";
    case MatchKind::kUnsuccessful: return "unsuccessful";
  }
  return "unsuccessful";
}

MatchKind parse_match_kind(std::string_view name) {
  for (MatchKind k : {MatchKind::kPerfect, MatchKind::kSuccessful, MatchKind::kUnsuccessful}) {
    if (name == match_kind_name(k)) return k;
  }
  throw Error(ErrorCode::kFormat, "unknown match kind '" + std::string(name) + "'");
}

LcsPosition lcs_positions(const MetaSequence& a, const MetaSequence& b) {
  std::unordered_map<std::string, int> symbols;
  auto intern = [&](const MetaSequence& m) {
    std::vector<int> out;
    out.reserve(m.size());
    for (const auto& e : m.elements) {
      auto [it, inserted] = symbols.emplace(canonical_key(e), static_cast<int>(symbols.size()));
      out.push_back(it->second);
    }
    return out;
  };
  const std::vector<int> sa = intern(a);
  const std::vector<int> sb = intern(b);
  CommonSubstring cs = longest_common_substring(sa, sb);
  return LcsPosition{cs.start_a, cs.start_b, cs.length};
}

MetaSequence lcs(const MetaSequence& a, const MetaSequence& b) {
  LcsPosition p = lcs_positions(a, b);
  MetaSequence out;
  out.r = a.r;
  out.elements.assign(a.elements.begin() + p.start_a, a.elements.begin() + p.start_a + p.length);
  return out;
}

bool has_subject_predicate_object(const MetaSequence& z) {
  auto first_v = std::find_if(z.elements.begin(), z.elements.end(),
                              [](const MetaElement& e) { return e.is_verb(); });
  if (first_v == z.elements.end()) return false;
  auto is_argn = [](const MetaElement& e) { return !e.is_pronoun() && is_core_argument(e.ssu.sr); };
  return std::any_of(z.elements.begin(), first_v, is_argn) &&
         std::any_of(first_v + 1, z.elements.end(), is_argn);
}

MatchKind classify(const MetaSequence& x, const MetaSequence& x_s, const MetaSequence& z) {
  if (!has_subject_predicate_object(z)) return MatchKind::kUnsuccessful;
  if (z.size() == x.size() && z.size() == x_s.size()) return MatchKind::kPerfect;
  return MatchKind::kSuccessful;
}

MatchResult match_pair(const MsdipPair& pair, const MetaSequence& x_s) {
  MatchResult m;
  m.pair = &pair;
  LcsPosition p = lcs_positions(pair.md, x_s);
  m.z_start_x = p.start_a;
  m.z_start_x_s = p.start_b;
  m.z.r = x_s.r;
  m.z.elements.assign(x_s.elements.begin() + p.start_b,
                      x_s.elements.begin() + p.start_b + p.length);
  m.kind = classify(pair.md, x_s, m.z);
  m.before_z.assign(x_s.elements.begin(), x_s.elements.begin() + p.start_b);
  m.after_z.assign(x_s.elements.begin() + p.start_b + p.length, x_s.elements.end());
  return m;
}

bool BestMatch::needs_teaching() const {
  return std::none_of(group.begin(), group.end(),
                      [](const MatchResult& m) { return m.kind == MatchKind::kPerfect; });
}

BestMatch best_match(const MetaSequence& x_s, const MsdipStore& store) {
  if (store.empty()) throw Error(ErrorCode::kNotFound, "MSDIP store is empty");
  BestMatch best;
  size_t best_len = 0;
  for (const auto& [key, pair] : store.pairs()) {
    MatchResult m = match_pair(pair, x_s);
    if (m.z.size() > best_len || best.group.empty()) {
      best_len = m.z.size();
      best.group.clear();
    }
    if (m.z.size() == best_len) best.group.push_back(std::move(m));
  }
  const bool any_perfect = std::any_of(best.group.begin(), best.group.end(), [](const MatchResult& m) {
    return m.kind == MatchKind::kPerfect;
  });
  if (any_perfect) {
    std::erase_if(best.group, [](const MatchResult& m) { return m.kind != MatchKind::kPerfect; });
  } else {
    // Successful matches first so kind() reports the best available.
    std::stable_partition(best.group.begin(), best.group.end(),
                          [](const MatchResult& m) { return m.usable(); });
  }
  return best;
}

namespace {

bool contains(const std::vector<MetaElement>& set, const MetaElement& e) {
  return std::any_of(set.begin(), set.end(), [&](const MetaElement& o) { return equivalent(o, e); });
}

}  // namespace

std::vector<MetaElement> set_difference(const std::vector<MetaElement>& a,
                                        const std::vector<MetaElement>& b) {
  std::vector<MetaElement> out;
  for (const auto& e : a) {
    if (!contains(b, e) && !contains(out, e)) out.push_back(e);
  }
  return out;
}

std::vector<MetaElement> set_intersection(const std::vector<MetaElement>& a,
                                          const std::vector<MetaElement>& b) {
  std::vector<MetaElement> out;
  for (const auto& e : a) {
    if (contains(b, e) && !contains(out, e)) out.push_back(e);
  }
  return out;
}

bool same_set(const std::vector<MetaElement>& a, const std::vector<MetaElement>& b) {
  return set_difference(a, b).empty() && set_difference(b, a).empty();
}

bool set_identity_holds(const MetaSequence& x, const MetaSequence& x_s, const MetaSequence& z) {
  return same_set(set_difference(x_s.elements, z.elements), set_difference(x_s.elements, x.elements));
}

}  // namespace metaqa
