#include <benchmark/benchmark.h>

#include <random>

#include "metaqa/distractor.h"
#include "metaqa/matcher.h"
#include "metaqa/msdip.h"
#include "metaqa/qapgen.h"
#include "metaqa/suffix_tree.h"

namespace {

using namespace metaqa;

std::string data(const std::string& name) { return std::string(METAQA_REPO_DATA_DIR) + "/" + name; }

std::vector<int> symbols(std::mt19937& rng, size_t n, int alphabet) {
  std::vector<int> v(n);
  for (int& x : v) x = static_cast<int>(rng() % alphabet);
  return v;
}

void BM_SuffixTreeLcs(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto n = static_cast<size_t>(state.range(0));
  const auto a = symbols(rng, n, 50), b = symbols(rng, n, 50);
  for (auto _ : state) benchmark::DoNotOptimize(longest_common_substring(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SuffixTreeLcs)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

const MsdipStore& seed_store() {
  static const MsdipStore store = [] {
    MsdipStore s;
    for (const auto& p : read_pair_corpus(data("seed_pairs.jsonl"))) {
      s.learn(p.declarative, p.interrogatives, MergeMode::kIdeal);
    }
    return s;
  }();
  return store;
}

const std::vector<TaggedSentence>& scale_corpus() {
  static const auto corpus = read_corpus(data("scale_corpus.jsonl"));
  return corpus;
}

void BM_GenerateSentence(benchmark::State& state) {
  const auto& corpus = scale_corpus();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_qaps(corpus[i++ % corpus.size()], seed_store(), MergeMode::kIdeal));
  }
}
BENCHMARK(BM_GenerateSentence);

void BM_GenerateCorpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_corpus(scale_corpus(), seed_store(), MergeMode::kIdeal));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(scale_corpus().size()));
}
BENCHMARK(BM_GenerateCorpus)->Unit(benchmark::kMillisecond);

struct Resources {
  EmbeddingTable emb = EmbeddingTable::load(data("embeddings.txt"));
  LexicalGraph lex = LexicalGraph::load(data("lexicon.json"));
};

const Resources& resources() {
  static const Resources r;
  return r;
}

Target noun(const std::string& word) {
  AnswerContext a;
  a.tokens.push_back(Token{word, word, "NN", ""});
  a.roles.push_back("ARG1");
  a.role_classes.push_back(RoleClass::kObject);
  return classify_target(a, Span{0, 1}).value();
}

void BM_ScorePair(benchmark::State& state) {
  const auto& r = resources();
  for (auto _ : state) benchmark::DoNotOptimize(score("headlines", "news", r.emb, r.lex, false));
}
BENCHMARK(BM_ScorePair);

void BM_RankType3(benchmark::State& state) {
  const auto& r = resources();
  const Target t = noun("knowledge");
  for (auto _ : state) benchmark::DoNotOptimize(rank_type3(t, r.emb, r.lex));
}
BENCHMARK(BM_RankType3);

}  // namespace

BENCHMARK_MAIN();
