#ifndef METAQA_DISTRACTOR_H_
#define METAQA_DISTRACTOR_H_

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "metaqa/annotation.h"
#include "metaqa/qapgen.h"
#include "metaqa/resources.h"

namespace metaqa {

// Deterministic across platforms: mt19937_64 plus our own bounded draws
// (the standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  uint64_t below(uint64_t n);
  // Uniform in [lo, hi].
  long long between(long long lo, long long hi);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a of `id` mixed with the run seed.
uint64_t seed_for(std::string_view id, uint64_t global_seed);

// Ordered by replacement preference.
enum class TargetType {
  kTemporal,
  kNumeric,
  kPerson,
  kLocation,
  kOrganization,
  kNoun,
  kAdjective,
  kVerb,
  kAdverb,
};

const char* target_type_name(TargetType t);
TargetType parse_target_type(std::string_view name);
inline bool is_type1(TargetType t) { return t <= TargetType::kNumeric; }
inline bool is_type2(TargetType t) { return t >= TargetType::kPerson && t <= TargetType::kOrganization; }
inline bool is_type3(TargetType t) { return t >= TargetType::kNoun; }

// Ordered by role preference.
enum class RoleClass { kSubject, kObject, kPredicate, kOther };

// Answer tokens with the semantic role each token plays in its sentence.
struct AnswerContext {
  std::vector<Token> tokens;
  std::vector<std::string> roles;  // innermost covering argument, "" if none
  std::vector<RoleClass> role_classes;

  std::string text() const;
};

AnswerContext answer_context(const TaggedSentence& s, Span span);
// Case-insensitive token match of `answer` in `s`.
std::optional<Span> locate_answer(const TaggedSentence& s, std::string_view answer);

struct Target {
  std::string text;
  Span span;  // within the answer
  TargetType type = TargetType::kNoun;
  std::string role;
  RoleClass role_class = RoleClass::kOther;
  std::string pos;
  std::string lemma;
};

// nullopt for tokens that are never replaced (function words, punctuation).
std::optional<Target> classify_target(const AnswerContext& a, Span span);
// Every target in the answer, in replacement order: type preference, then
// role preference, then right to left.
std::vector<Target> find_targets(const AnswerContext& a);

// ---- type 1

enum class NumberForm { kDigits, kOrdinalDigits, kWords, kOrdinalWords, kWeekday, kMonth };

struct Type1Value {
  long long value = 0;  // scaled by 10^decimals
  NumberForm form = NumberForm::kDigits;
  int decimals = 0;
  bool grouped = false;      // thousands separators
  bool capitalized = false;
  bool upper = false;        // all caps
  int digits = 0;            // digit count of the integer part
};

std::optional<Type1Value> parse_type1(std::string_view text);
// `value` rendered in the form of `like`.
std::string format_type1(const Type1Value& like, long long value);
bool is_temporal_word(std::string_view text);

enum class Perturbation { kShift, kWindow, kRandom };
inline constexpr std::array<Perturbation, 3> kAllPerturbations = {
    Perturbation::kShift, Perturbation::kWindow, Perturbation::kRandom};
const char* perturbation_name(Perturbation p);

// Throws Error(kValidation) when `text` is not a number-like value.
std::string perturb_type1(std::string_view text, Perturbation p, Rng& rng);
// Picks the algorithm at random.
std::string perturb_type1(std::string_view text, Rng& rng);

// ---- type 2

struct NamedEntity {
  std::string text;
  std::string tag;
};

// Distinct PER/LOC/ORG runs in order of first appearance.
std::vector<NamedEntity> article_entities(const std::vector<TaggedSentence>& article);

// Same-tag article entities (shuffled), then same-bucket KB members
// (shuffled); never the target itself.
std::vector<std::string> type2_candidates(const Target& t, const std::vector<NamedEntity>& article,
                                          const EntityKB* kb, Rng& rng);
// First candidate; throws Error(kNotFound) when there is none.
std::string swap_type2(const Target& t, const std::vector<NamedEntity>& article, const EntityKB* kb,
                       Rng& rng);

// ---- type 3

struct Type3Candidate {
  std::string word;
  bool antonym = false;
  std::string source;  // "embedding" or "hypernym"
};

// Embedding neighbours with similarity in [lo, hi] plus hypernym lemmas.
// Throws Error(kNotFound) when the target is in neither resource.
std::vector<Type3Candidate> candidates_type3(const Target& t, const EmbeddingTable& emb,
                                             const LexicalGraph& lex, double lo = kDefaultNeighborLo,
                                             double hi = kDefaultNeighborHi);

// Reason a candidate is discarded, or nullopt.
std::optional<std::string> rejection_reason(std::string_view candidate, std::string_view target);
std::vector<Type3Candidate> filter_candidates(std::vector<Type3Candidate> cands, std::string_view target);

struct DistractorScore {
  int E = 0;
  double S_v = 0.0;
  double S_n = 0.0;
  double S_d = 0.0;
  double R_prime = 0.0;
  double R = 0.0;
};

double edit_score(int edit_distance);
double combined_score(double s_v, double s_n, double s_d, bool antonym);
// -x ln x, with 0 at x = 0.
double entropy_score(double r_prime);

// Throws Error(kNotFound) when either word has no vector.
DistractorScore score(std::string_view candidate, std::string_view target, const EmbeddingTable& emb,
                      const LexicalGraph& lex, bool antonym);

struct RankedCandidate {
  Type3Candidate candidate;
  DistractorScore score;
};

// Filtered and scored candidates, R descending (ties by word).
std::vector<RankedCandidate> rank_type3(const Target& t, const EmbeddingTable& emb,
                                        const LexicalGraph& lex, double lo = kDefaultNeighborLo,
                                        double hi = kDefaultNeighborHi);

// ---- selection

struct Distractor {
  std::string text;       // the answer with the target replaced
  std::string generator;  // type1:shift, type2:article, type3, ...
  Target target;
  std::string replacement;
  std::optional<DistractorScore> score;
};

struct DistractorResources {
  const EmbeddingTable* embeddings = nullptr;
  const LexicalGraph* lexicon = nullptr;
  const EntityKB* kb = nullptr;
};

struct DistractorConfig {
  size_t count = 3;
  double lo = kDefaultNeighborLo;
  double hi = kDefaultNeighborHi;
  double relax_step = 0.05;
  double relax_floor = 0.4;
};

struct DistractorSet {
  std::vector<Distractor> distractors;
  bool partial = false;  // fewer than requested after every relaxation
  double final_lo = kDefaultNeighborLo;
};

// The answer with tokens [span) replaced, fixing a preceding a/an.
std::string replace_target(const AnswerContext& a, Span span, std::string_view replacement);

DistractorSet generate_distractors(const AnswerContext& answer, const std::vector<NamedEntity>& article,
                                   const DistractorResources& res, const DistractorConfig& config,
                                   uint64_t seed);

// One JSON line per QAP: {qap_id, partial, final_lo, distractors: [...]}.
std::string distractor_set_to_json(std::string_view qap_id, const DistractorSet& d);
DistractorSet parse_distractor_set_json(std::string_view line, std::string* qap_id = nullptr);

// ---- multiple-choice assembly

struct Mcq {
  std::string id;
  std::string question;
  std::array<std::string, 4> options;
  int answer_index = 0;
  std::array<std::string, 4> provenance;
};

// Answer plus three distractors in seed-derived order. Throws
// Error(kRejected) with fewer than three distractors.
Mcq assemble_mcq(const Qap& qap, const DistractorSet& d, uint64_t seed);
std::string mcq_to_json(const Mcq& m);
Mcq parse_mcq_json(std::string_view line);

}  // namespace metaqa

#endif  // METAQA_DISTRACTOR_H_
