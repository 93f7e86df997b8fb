#ifndef METAQA_RESOURCES_H_
#define METAQA_RESOURCES_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace metaqa {

// Cosine similarity. Throws Error(kValidation) on a dimension mismatch or a
// zero vector.
double cosine(std::span<const double> a, std::span<const double> b);

struct Neighbor {
  std::string word;
  double score = 0.0;
};

inline constexpr double kDefaultNeighborLo = 0.6;
inline constexpr double kDefaultNeighborHi = 0.85;

// Word vectors in the "count dim" + "word v1 .. vdim" text layout.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(size_t dim) : dim_(dim) {}

  static EmbeddingTable load(const std::string& path);
  static EmbeddingTable read(std::istream& in);

  void add(std::string word, std::vector<double> vec);
  size_t dimension() const { return dim_; }
  size_t size() const { return vectors_.size(); }
  bool contains(std::string_view word) const;
  // nullptr when absent.
  const std::vector<double>* find(std::string_view word) const;
  // Throws Error(kNotFound) when either word is absent.
  double similarity(std::string_view a, std::string_view b) const;

  // Words with cosine in [lo, hi] (inclusive), highest first, ties by word.
  // Throws Error(kNotFound) when `word` is absent.
  std::vector<Neighbor> neighbors(std::string_view word, double lo = kDefaultNeighborLo,
                                  double hi = kDefaultNeighborHi) const;

 private:
  size_t dim_ = 0;
  std::map<std::string, std::vector<double>, std::less<>> vectors_;
};

// Senses with lemmas, a hypernym DAG and antonym links.
class LexicalGraph {
 public:
  struct Sense {
    std::string id;
    std::string pos;  // n, v, a, r
    std::vector<std::string> lemmas;
  };

  static constexpr double kAbsentScore = 0.1;

  static LexicalGraph load(const std::string& path);
  static LexicalGraph parse(std::string_view json_text);

  // Throws Error(kValidation) on duplicate ids, unknown endpoints or cycles.
  void add_sense(Sense s);
  void add_hypernym(const std::string& child, const std::string& parent);
  void add_antonym(const std::string& a, const std::string& b);
  // Validates and computes depths; called by load/parse.
  void finalize();

  size_t size() const { return senses_.size(); }
  const Sense* sense(std::string_view id) const;
  std::vector<int> senses_of(std::string_view word) const;
  // 1 + longest hop count to a root.
  int depth(int sense) const { return depth_[sense]; }
  // All ancestors including the sense itself.
  std::set<int> ancestors(int sense) const;

  double wup_senses(int a, int b) const;
  // Max over same-POS sense pairs; kAbsentScore when either word is unknown
  // or no pair shares an ancestor.
  double wup(std::string_view a, std::string_view b) const;

  // Lemmas of the direct hypernyms of every sense of `word` with POS `pos`
  // (any POS when empty), deduplicated and sorted.
  std::vector<std::string> hypernym_lemmas(std::string_view word, std::string_view pos = {}) const;
  std::vector<std::string> synonyms(std::string_view word) const;
  bool antonyms(std::string_view a, std::string_view b) const;

 private:
  int index_of(const std::string& id) const;

  std::vector<Sense> senses_;
  std::unordered_map<std::string, int> by_id_;
  std::unordered_map<std::string, std::vector<int>> by_lemma_;  // lowercase
  std::vector<std::vector<int>> parents_;
  std::set<std::pair<int, int>> antonym_pairs_;
  std::vector<int> depth_;
};

// word -> probability, absent words 0.
class UnigramTable {
 public:
  static constexpr double kCommonThreshold = 0.0015;

  static UnigramTable load(const std::string& path);
  static UnigramTable read(std::istream& in);

  void set(std::string word, double p);
  double probability(std::string_view word) const;
  size_t size() const { return probs_.size(); }

 private:
  std::unordered_map<std::string, double> probs_;
};

// Named buckets of entities ("cities", "tech companies") tagged with an NE class.
class EntityKB {
 public:
  struct Bucket {
    std::string name;
    std::string tag;  // PER, LOC, ORG
    std::vector<std::string> members;
  };

  static EntityKB load(const std::string& path);
  static EntityKB parse(std::string_view json_text);

  void add_bucket(Bucket b);
  const std::vector<Bucket>& buckets() const { return buckets_; }
  std::vector<const Bucket*> buckets_of(std::string_view entity) const;
  // Other members of every bucket holding `entity`, sorted and deduplicated.
  std::vector<std::string> same_bucket(std::string_view entity) const;

 private:
  std::vector<Bucket> buckets_;
};

}  // namespace metaqa

#endif  // METAQA_RESOURCES_H_
