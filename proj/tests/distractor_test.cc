#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <regex>
#include <set>

#include "metaqa/distractor.h"
#include "metaqa/error.h"
#include "metaqa/text.h"
#include "support.h"

namespace metaqa {
namespace {

using testing::repo_data_path;
using Big = boost::multiprecision::cpp_dec_float_50;

struct Bundled {
  EmbeddingTable emb = EmbeddingTable::load(repo_data_path("embeddings.txt"));
  LexicalGraph lex = LexicalGraph::load(repo_data_path("lexicon.json"));
  EntityKB kb = EntityKB::load(repo_data_path("kb.json"));
  std::vector<TaggedSentence> corpus = read_corpus(testing::data_path("distractor_sentences.jsonl"));

  DistractorResources resources() const { return {&emb, &lex, &kb}; }

  const TaggedSentence& sentence(const std::string& id) const {
    for (const auto& s : corpus) {
      if (s.id == id) return s;
    }
    throw std::runtime_error("no fixture " + id);
  }

  std::vector<NamedEntity> article_of(const TaggedSentence& s) const {
    std::vector<TaggedSentence> art;
    for (const auto& x : corpus) {
      if (x.source.article == s.source.article) art.push_back(x);
    }
    return article_entities(art);
  }

  AnswerContext answer(const std::string& id, const std::string& text) const {
    const auto& s = sentence(id);
    auto span = locate_answer(s, text);
    if (!span) throw std::runtime_error("answer not in fixture: " + text);
    return answer_context(s, *span);
  }

  DistractorSet distract(const std::string& id, const std::string& text, uint64_t seed = 7) const {
    return generate_distractors(answer(id, text), article_of(sentence(id)), resources(), DistractorConfig{}, seed);
  }
};

const Bundled& bundled() {
  static const Bundled b;
  return b;
}

std::vector<std::string> texts(const DistractorSet& d) {
  std::vector<std::string> out;
  for (const auto& x : d.distractors) out.push_back(x.text);
  return out;
}

Target single(const std::string& text, const std::string& pos, const std::string& ne = "") {
  AnswerContext a;
  a.tokens.push_back(Token{text, to_lower(text), pos, ne});
  a.roles.push_back("ARG1");
  a.role_classes.push_back(RoleClass::kObject);
  auto t = classify_target(a, Span{0, 1});
  if (!t) throw std::runtime_error("not a target: " + text);
  return *t;
}

// ---- random numbers

TEST(RngTest, SameSeedSameStream) {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(RngTest, BelowStaysInRangeAndCoversIt) {
  Rng r(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const uint64_t x = r.below(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  for (int i = 0; i < 1000; ++i) {
    const long long x = r.between(-3, 3);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
  }
}

TEST(RngTest, ShuffleIsAPermutation) {
  Rng r(5);
  std::vector<int> v(20);
  for (int i = 0; i < 20; ++i) v[i] = i;
  r.shuffle(v);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 20; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(RngTest, SeedForIsFnv1a) {
  // Published FNV-1a 64-bit test vectors.
  EXPECT_EQ(seed_for("", 0), 0xcbf29ce484222325ull);
  EXPECT_EQ(seed_for("a", 0), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(seed_for("foobar", 0), 0x85944171f73967e8ull);
  EXPECT_EQ(seed_for("a", 1), 0xaf63dc4c8601ec8dull);
}

// ---- targets

TEST(Targets, Classification) {
  EXPECT_EQ(single("2020", "CD").type, TargetType::kNumeric);
  EXPECT_EQ(single("2020", "CD", "DATE").type, TargetType::kTemporal);
  EXPECT_EQ(single("Friday", "NNP").type, TargetType::kTemporal);
  EXPECT_EQ(single("third", "JJ").type, TargetType::kNumeric);
  EXPECT_EQ(single("profession", "NN").type, TargetType::kNoun);
  EXPECT_EQ(single("economic", "JJ").type, TargetType::kAdjective);
  EXPECT_EQ(single("harvesting", "VBG").type, TargetType::kVerb);
  EXPECT_EQ(single("quickly", "RB").type, TargetType::kAdverb);
  EXPECT_EQ(single("Boston", "NNP", "LOC").type, TargetType::kLocation);
  const auto ny = bundled().answer("team", "New York");
  const auto targets = find_targets(ny);
  ASSERT_EQ(targets.size(), 1u);
  EXPECT_EQ(targets[0].text, "New York");
  EXPECT_EQ(targets[0].type, TargetType::kLocation);
}

TEST(Targets, ModalMayIsNotAMonth) {
  AnswerContext a;
  a.tokens = {Token{"may", "may", "MD", ""}};
  a.roles = {""};
  a.role_classes = {RoleClass::kOther};
  EXPECT_FALSE(classify_target(a, Span{0, 1}).has_value());
}

TEST(Targets, PreferenceOrder) {
  const auto a = bundled().answer("chie", "her soft scuttling footsteps, the creak of the door");
  std::vector<std::string> order;
  for (const auto& t : find_targets(a)) order.push_back(t.text);
  EXPECT_EQ(order, (std::vector<std::string>{"door", "creak", "footsteps", "scuttling", "soft"}));

  const auto e = bundled().answer("ethics", "when someone makes an economic decision");
  const auto et = find_targets(e);
  ASSERT_GE(et.size(), 3u);
  EXPECT_EQ(et[0].text, "someone");  // subject noun first
  EXPECT_EQ(et[0].role_class, RoleClass::kSubject);
  EXPECT_EQ(et[1].text, "decision");
  EXPECT_EQ(et.back().text, "makes");
  EXPECT_EQ(et.back().role_class, RoleClass::kPredicate);
}

// ---- type 1

TEST(Type1, ParseAndFormatRoundTrip) {
  for (const char* s : {"2020", "1,250", "3.5", "-4", "21st", "3RD", "five", "Twenty-two", "third",
                        "Friday", "May", "December", "ninety-ninth", "0.05"}) {
    auto v = parse_type1(s);
    ASSERT_TRUE(v.has_value()) << s;
    EXPECT_EQ(format_type1(*v, v->value), s);
  }
  EXPECT_FALSE(parse_type1("books").has_value());
  EXPECT_FALSE(parse_type1("").has_value());
  EXPECT_EQ(parse_type1("Friday")->value, 5);
  EXPECT_EQ(parse_type1("twenty-two")->value, 22);
  EXPECT_EQ(parse_type1("1,250")->value, 1250);
  EXPECT_EQ(parse_type1("3.5")->value, 35);
}

TEST(Type1, FridayMinusOneIsThursday) {
  const auto v = *parse_type1("Friday");
  EXPECT_EQ(format_type1(v, 4), "Thursday");
  EXPECT_EQ(format_type1(v, 8), "Monday");
  EXPECT_EQ(format_type1(*parse_type1("January"), 0), "December");
  EXPECT_EQ(format_type1(*parse_type1("third"), 2), "second");
  EXPECT_EQ(format_type1(*parse_type1("11th"), 12), "12th");
  EXPECT_EQ(format_type1(*parse_type1("11th"), 22), "22nd");
  EXPECT_EQ(format_type1(*parse_type1("1,250"), 1000250), "1,000,250");

  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Rng r(seed);
    seen.insert(perturb_type1("Friday", Perturbation::kShift, r));
  }
  EXPECT_EQ(seen, (std::set<std::string>{"Wednesday", "Thursday", "Saturday", "Sunday"}));
}

TEST(Type1, EveryAlgorithmKeepsTheYearForm) {
  const std::regex year(R"(by \d{4})");
  for (Perturbation p : kAllPerturbations) {
    for (uint64_t seed = 0; seed < 300; ++seed) {
      Rng r(seed);
      const std::string out = "by " + perturb_type1("2020", p, r);
      ASSERT_TRUE(std::regex_match(out, year)) << out;
      ASSERT_NE(out, "by 2020");
      const int y = std::stoi(out.substr(3));
      if (p == Perturbation::kShift) EXPECT_TRUE(y >= 2018 && y <= 2022);
      if (p == Perturbation::kWindow) EXPECT_TRUE(y >= 2010 && y <= 2030);
    }
  }
}

TEST(Type1, WindowReachesItsEdges) {
  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 2000; ++seed) {
    Rng r(seed);
    seen.insert(perturb_type1("2020", Perturbation::kWindow, r));
  }
  EXPECT_TRUE(seen.count("2030"));
  EXPECT_TRUE(seen.count("2010"));
  EXPECT_EQ(seen.size(), 20u);
  // Small values: half the value caps the window.
  std::set<std::string> small;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    Rng r(seed);
    small.insert(perturb_type1("4", Perturbation::kWindow, r));
  }
  EXPECT_EQ(small, (std::set<std::string>{"2", "3", "5", "6"}));
}

TEST(Type1, FormsArePreserved) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    for (Perturbation p : kAllPerturbations) {
      Rng r(seed);
      const auto five = perturb_type1("Five", p, r);
      const auto v = parse_type1(five);
      ASSERT_TRUE(v.has_value()) << five;
      EXPECT_EQ(v->form, NumberForm::kWords);
      EXPECT_TRUE(std::isupper(static_cast<unsigned char>(five[0])));
      EXPECT_NE(five, "Five");
      const auto ord = perturb_type1("1st", p, r);
      EXPECT_EQ(parse_type1(ord)->form, NumberForm::kOrdinalDigits) << ord;
      EXPECT_GE(parse_type1(ord)->value, 1);
      const auto dec = perturb_type1("3.5", p, r);
      EXPECT_EQ(parse_type1(dec)->decimals, 1) << dec;
      const auto zero = perturb_type1("0", p, r);
      EXPECT_GE(std::stoll(zero), 0) << zero;
    }
  }
}

TEST(Type1, DeterministicUnderSeed) {
  for (Perturbation p : kAllPerturbations) {
    Rng a(11), b(11);
    EXPECT_EQ(perturb_type1("2020", p, a), perturb_type1("2020", p, b));
  }
  EXPECT_THROW(
      {
        Rng r(1);
        perturb_type1("door", r);
      },
      Error);
}

// ---- type 2

TEST(Type2, ArticleEntitiesFirst) {
  const auto& b = bundled();
  const auto a = b.answer("chie", "Chie");
  const Target t = find_targets(a).at(0);
  Rng r(3);
  EXPECT_EQ(swap_type2(t, b.article_of(b.sentence("chie")), &b.kb, r), "Akira");
}

TEST(Type2, KnowledgeBaseFallback) {
  const auto& b = bundled();
  const Target t = find_targets(b.answer("team", "New York")).at(0);
  const std::set<std::string> cities = {"Boston", "Philadelphia", "Chicago", "Los Angeles",
                                        "San Francisco", "Seattle", "Washington"};
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng r(seed);
    const auto c = type2_candidates(t, {}, &b.kb, r);
    EXPECT_EQ(std::set<std::string>(c.begin(), c.end()), cities);
  }
  Rng r(1);
  EXPECT_THROW(swap_type2(t, {}, nullptr, r), Error);
}

// ---- type 3

TEST(Type3, CandidatesBeforeFiltering) {
  const auto& b = bundled();
  auto words_of = [](const std::vector<Type3Candidate>& c) {
    std::set<std::string> out;
    for (const auto& x : c) out.insert(x.word);
    return out;
  };
  EXPECT_TRUE(words_of(candidates_type3(single("news", "NN"), b.emb, b.lex)).count("breaking news"));
  EXPECT_TRUE(words_of(candidates_type3(single("knowledge", "NN"), b.emb, b.lex)).count("knowladge"));
  EXPECT_THROW(candidates_type3(single("zyzzyva", "NN"), b.emb, b.lex), Error);
}

TEST(Type3, Filters) {
  EXPECT_TRUE(rejection_reason("breaking news", "news").has_value());
  EXPECT_TRUE(rejection_reason("knowladge", "knowledge").has_value());
  EXPECT_FALSE(rejection_reason("perspectives", "insights").has_value());
  EXPECT_FALSE(rejection_reason("inexperienced", "experienced").has_value());
  EXPECT_TRUE(rejection_reason("professor", "profession").has_value());
  // A shared prefix alone is not enough.
  EXPECT_FALSE(rejection_reason("professorship", "profession").has_value());
  // Two characters of prefix is not enough either.
  EXPECT_FALSE(rejection_reason("dome", "door").has_value());
  EXPECT_TRUE(rejection_reason("doors", "door").has_value());
  const auto kept = filter_candidates({{"breaking news"}, {"headlines"}, {"news"}}, "news");
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].word, "headlines");
}

TEST(Type3, NoNeighboursNoHypernymsIsEmpty) {
  EmbeddingTable emb(2);
  emb.add("alpha", {1.0, 0.0});
  emb.add("beta", {0.0, 1.0});
  LexicalGraph lex;
  lex.finalize();
  EXPECT_TRUE(candidates_type3(single("alpha", "NN"), emb, lex).empty());
}

TEST(Type3, AntonymsAreFlagged) {
  const auto& b = bundled();
  const auto c = candidates_type3(single("experienced", "JJ"), b.emb, b.lex);
  bool found = false;
  for (const auto& x : c) {
    if (x.word == "inexperienced") {
      found = true;
      EXPECT_TRUE(x.antonym);
    } else {
      EXPECT_FALSE(x.antonym) << x.word;
    }
  }
  EXPECT_TRUE(found);
}

// ---- formulas

TEST(Formulas, EditScore) {
  EXPECT_DOUBLE_EQ(edit_score(0), 0.5);
  EXPECT_NEAR(edit_score(1), 1.0 - 1.0 / (1.0 + std::exp(1.0)), 1e-9);
  EXPECT_NEAR(edit_score(1), 0.7310585786300049, 1e-9);
  for (int e = 0; e < 40; ++e) {
    EXPECT_GE(edit_score(e), 0.5);
    EXPECT_LE(edit_score(e), 1.0);
    if (e > 0 && e < 30) EXPECT_GT(edit_score(e), edit_score(e - 1));
  }
}

TEST(Formulas, EntropyEndpointsAndMaximum) {
  EXPECT_EQ(entropy_score(1.0), 0.0);
  EXPECT_EQ(entropy_score(0.0), 0.0);
  double best_x = 0.0, best = -1.0;
  for (int i = 0; i <= 1000000; ++i) {
    const double x = i / 1000000.0;
    const double r = entropy_score(x);
    EXPECT_GE(r, 0.0);
    if (r > best) {
      best = r;
      best_x = x;
    }
  }
  EXPECT_NEAR(best_x, 1.0 / std::exp(1.0), 1e-6);
}

TEST(Formulas, AntonymBranchIdentity) {
  Rng r(2024);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * (r.next() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 1000; ++i) {
    const double sv = uniform(-1.0, 1.0);
    const double sn = uniform(0.0, 1.0);
    const double sd = uniform(0.5, 1.0);
    const double diff = combined_score(sv, sn, sd, true) - combined_score(sv, sn, sd, false);
    EXPECT_NEAR(diff, (2 * sv - sn - sd) / 12.0, 1e-12);
  }
}

// Hand-built resources scored by an independent arbitrary-precision oracle.
struct TinyWorld {
  EmbeddingTable emb{3};
  LexicalGraph lex;
  std::map<std::string, std::vector<double>> vec;
  std::map<std::string, std::string> parent;  // a tree, one sense per word

  TinyWorld() {
    vec = {{"cat", {1.0, 0.2, 0.0}},   {"dog", {0.8, 0.5, 0.1}},  {"wolf", {0.6, 0.6, 0.3}},
           {"tiger", {0.9, 0.0, 0.4}}, {"animal", {0.5, 0.5, 0.5}}, {"car", {0.0, 1.0, 0.0}},
           {"truck", {0.1, 0.9, 0.2}}, {"vehicle", {0.2, 0.8, 0.4}}, {"thing", {0.4, 0.4, 0.4}},
           {"kitten", {0.95, 0.25, 0.05}}};
    for (const auto& [w, v] : vec) emb.add(w, v);
    parent = {{"animal", "thing"}, {"vehicle", "thing"}, {"cat", "animal"}, {"dog", "animal"},
              {"wolf", "dog"},     {"tiger", "cat"},      {"kitten", "cat"},  {"car", "vehicle"},
              {"truck", "vehicle"}};
    for (const auto& [w, v] : vec) lex.add_sense({w + ".n.01", "n", {w}});
    for (const auto& [c, p] : parent) lex.add_hypernym(c + ".n.01", p + ".n.01");
    lex.add_antonym("car.n.01", "truck.n.01");
    lex.finalize();
  }

  int depth(const std::string& w) const {
    auto it = parent.find(w);
    return it == parent.end() ? 1 : 1 + depth(it->second);
  }

  Big wup(const std::string& a, const std::string& b) const {
    std::set<std::string> up;
    for (std::string x = a;; x = parent.at(x)) {
      up.insert(x);
      if (!parent.count(x)) break;
    }
    for (std::string y = b;; y = parent.at(y)) {
      if (up.count(y)) return Big(2 * depth(y)) / Big(depth(a) + depth(b));
      if (!parent.count(y)) break;
    }
    return Big("0.1");
  }

  static int lev(const std::string& a, const std::string& b) {
    std::function<int(size_t, size_t)> go;
    std::map<std::pair<size_t, size_t>, int> memo;
    go = [&](size_t i, size_t j) -> int {
      if (i == a.size()) return static_cast<int>(b.size() - j);
      if (j == b.size()) return static_cast<int>(a.size() - i);
      auto key = std::make_pair(i, j);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      int best = go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
      best = std::min(best, go(i + 1, j) + 1);
      best = std::min(best, go(i, j + 1) + 1);
      return memo[key] = best;
    };
    return go(0, 0);
  }

  Big oracle_r(const std::string& c, const std::string& t, bool antonym) const {
    const auto& u = vec.at(c);
    const auto& v = vec.at(t);
    Big dot = 0, nu = 0, nv = 0;
    for (size_t i = 0; i < 3; ++i) {
      dot += Big(u[i]) * Big(v[i]);
      nu += Big(u[i]) * Big(u[i]);
      nv += Big(v[i]) * Big(v[i]);
    }
    const Big sv = dot / (sqrt(nu) * sqrt(nv));
    const Big sn = wup(c, t);
    const Big sd = Big(1) - Big(1) / (Big(1) + exp(Big(lev(c, t))));
    const Big rp = antonym ? Big((2 * sv + sn + sd) / 4) : Big((sv + sn + sd) / 3);
    return -rp * log(rp);
  }
};

TEST(Formulas, ScoreMatchesArbitraryPrecisionOracle) {
  const TinyWorld w;
  int checked = 0;
  for (const auto& [c, cv] : w.vec) {
    for (const auto& [t, tv] : w.vec) {
      if (c == t) continue;
      const bool ant = w.lex.antonyms(c, t);
      const DistractorScore s = score(c, t, w.emb, w.lex, ant);
      EXPECT_EQ(s.E, TinyWorld::lev(c, t));
      EXPECT_NEAR(s.S_n, w.wup(c, t).convert_to<double>(), 1e-12) << c << " " << t;
      EXPECT_NEAR(s.R, w.oracle_r(c, t, ant).convert_to<double>(), 1e-9) << c << " " << t;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 90);
  EXPECT_TRUE(w.lex.antonyms("car", "truck"));
}

TEST(Formulas, RankingIsByRDescending) {
  const TinyWorld w;
  const auto ranked = rank_type3(single("cat", "NN"), w.emb, w.lex, 0.0, 0.999);
  ASSERT_FALSE(ranked.empty());
  for (size_t i = 1; i < ranked.size(); ++i) EXPECT_GE(ranked[i - 1].score.R, ranked[i].score.R);
  for (const auto& r : ranked) {
    EXPECT_GE(r.score.R, 0.0);
    EXPECT_GE(r.score.R_prime, 0.0);
    EXPECT_LE(r.score.R_prime, 1.0);
    EXPECT_GT(r.score.S_n, 0.0);
    EXPECT_LE(r.score.S_n, 1.0);
    EXPECT_GE(r.score.S_d, 0.5);
    EXPECT_LE(r.score.S_d, 1.0);
  }
}

// ---- full generation

TEST(Generate, ChoiceOfProfession) {
  const auto d = bundled().distract("profession", "that he has made a mistake in the choice of his profession");
  EXPECT_FALSE(d.partial);
  EXPECT_EQ(texts(d), (std::vector<std::string>{
                          "that he has made a mistake in the choice of his association",
                          "that he has made a mistake in the choice of his engineering",
                          "that he has made a mistake in the way of his profession"}));
  EXPECT_EQ(d.distractors[0].target.text, "profession");
  EXPECT_EQ(d.distractors[2].target.text, "choice");
}

TEST(Generate, CreakOfTheDoor) {
  const auto d = bundled().distract("chie", "her soft scuttling footsteps, the creak of the door");
  EXPECT_EQ(texts(d), (std::vector<std::string>{"her soft scuttling footsteps, the creak of the stairwell",
                                                "her soft scuttling footsteps, the creak of the driveway",
                                                "her soft scuttling footsteps, the knock of the door"}));
}

TEST(Generate, TheirInsights) {
  const auto d = bundled().distract("insights", "Their insights");
  const auto t = texts(d);
  EXPECT_EQ(std::set<std::string>(t.begin(), t.end()),
            (std::set<std::string>{"Their perspectives", "Their findings", "Their valuables"}));
}

TEST(Generate, ByTwentyTwenty) {
  const auto d = bundled().distract("asteroids", "by 2020");
  ASSERT_EQ(d.distractors.size(), 3u);
  const std::regex year(R"(by \d{4})");
  for (const auto& x : d.distractors) {
    EXPECT_TRUE(std::regex_match(x.text, year)) << x.text;
    EXPECT_TRUE(x.generator.starts_with("type1:"));
  }
}

TEST(Generate, ArticleOnlyEntityIsPartial) {
  const auto d = bundled().distract("chie", "Chie");
  EXPECT_EQ(texts(d), std::vector<std::string>{"Akira"});
  EXPECT_TRUE(d.partial);
  EXPECT_NEAR(d.final_lo, 0.4, 1e-9);
}

TEST(Generate, ArticleAgreement) {
  const auto a = bundled().answer("ethics", "when someone makes an economic decision");
  EXPECT_EQ(replace_target(a, Span{4, 5}, "political"), "when someone makes a political decision");
  EXPECT_EQ(replace_target(a, Span{4, 5}, "Austrian"), "when someone makes an Austrian decision");
  EXPECT_EQ(replace_target(a, Span{5, 6}, "breaking news"), "when someone makes an economic breaking news");
}

TEST(Generate, RelaxationWidensTheInterval) {
  EmbeddingTable emb(3);
  emb.add("cat", {1.0, 0.0, 0.0});
  emb.add("lynx", {0.5, std::sqrt(0.75), 0.0});     // 0.5
  emb.add("puma", {0.45, 0.0, std::sqrt(0.7975)});  // 0.45
  LexicalGraph lex;
  lex.finalize();
  AnswerContext a;
  a.tokens = {Token{"the", "the", "DT", ""}, Token{"cat", "cat", "NN", ""}};
  a.roles = {"ARG1", "ARG1"};
  a.role_classes = {RoleClass::kObject, RoleClass::kObject};
  DistractorConfig cfg;
  cfg.count = 2;
  const auto d = generate_distractors(a, {}, DistractorResources{&emb, &lex, nullptr}, cfg, 1);
  EXPECT_EQ(texts(d), (std::vector<std::string>{"the lynx", "the puma"}));
  EXPECT_FALSE(d.partial);
  EXPECT_NEAR(d.final_lo, 0.45, 1e-9);

  cfg.count = 3;
  const auto p = generate_distractors(a, {}, DistractorResources{&emb, &lex, nullptr}, cfg, 1);
  EXPECT_TRUE(p.partial);
  EXPECT_EQ(p.distractors.size(), 2u);
  EXPECT_NEAR(p.final_lo, 0.4, 1e-9);
}

TEST(Generate, DistinctAndNeverTheAnswer) {
  const auto& b = bundled();
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"profession", "that he has made a mistake in the choice of his profession"},
      {"ethics", "when someone makes an economic decision"},
      {"chie", "her soft scuttling footsteps, the creak of the door"},
      {"asteroids", "by 2020"},
      {"asteroids", "Deep Space Industries of Virginia"},
      {"team", "New York"},
      {"team", "Friday"},
      {"insights", "Their insights"}};
  for (const auto& [id, ans] : cases) {
    for (uint64_t seed = 0; seed < 25; ++seed) {
      const auto d = b.distract(id, ans, seed);
      std::set<std::string> seen;
      for (const auto& x : d.distractors) {
        EXPECT_NE(to_lower(x.text), to_lower(ans)) << id;
        EXPECT_TRUE(seen.insert(to_lower(x.text)).second) << x.text;
      }
      EXPECT_LE(d.distractors.size(), 3u);
      EXPECT_EQ(d.partial, d.distractors.size() < 3u);
    }
  }
}

TEST(Generate, Deterministic) {
  const auto& b = bundled();
  for (uint64_t seed : {0ull, 1ull, 99ull}) {
    EXPECT_EQ(texts(b.distract("asteroids", "by 2020", seed)), texts(b.distract("asteroids", "by 2020", seed)));
    EXPECT_EQ(texts(b.distract("team", "New York", seed)), texts(b.distract("team", "New York", seed)));
  }
}

// ---- assembly

TEST(Mcqs, AssembleAndRoundTrip) {
  const auto d = bundled().distract("profession", "that he has made a mistake in the choice of his profession");
  Qap q;
  q.id = "profession-q1";
  q.question = "What does no man like to acknowledge?";
  q.answer = "that he has made a mistake in the choice of his profession";
  std::set<int> positions;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Mcq m = assemble_mcq(q, d, seed);
    EXPECT_EQ(m.options[m.answer_index], q.answer);
    EXPECT_EQ(m.provenance[m.answer_index], "answer");
    positions.insert(m.answer_index);
    std::set<std::string> opts(m.options.begin(), m.options.end());
    EXPECT_EQ(opts.size(), 4u);
    const Mcq back = parse_mcq_json(mcq_to_json(m));
    EXPECT_EQ(back.options, m.options);
    EXPECT_EQ(back.answer_index, m.answer_index);
    EXPECT_EQ(back.provenance, m.provenance);
    EXPECT_EQ(mcq_to_json(assemble_mcq(q, d, seed)), mcq_to_json(m));
  }
  EXPECT_EQ(positions.size(), 4u);
  DistractorSet two = d;
  two.distractors.resize(2);
  EXPECT_THROW(assemble_mcq(q, two, 1), Error);
  EXPECT_THROW(parse_mcq_json(R"({"id":"x"})"), Error);
}

}  // namespace
}  // namespace metaqa
