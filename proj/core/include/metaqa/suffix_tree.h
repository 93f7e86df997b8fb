#ifndef METAQA_SUFFIX_TREE_H_
#define METAQA_SUFFIX_TREE_H_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace metaqa {

// Ukkonen's online suffix tree over an integer alphabet. The text must end
// with a symbol that occurs nowhere else so every suffix ends at a leaf.
class SuffixTree {
 public:
  struct Node {
    int start = -1;
    int end = -1;  // exclusive; kOpenEnd on leaves
    int link = 0;
    int suffix = -1;  // start of the suffix spelled by a leaf
    int depth = 0;    // string depth of the node
    int parent = -1;
    std::map<int, int> next;

    bool leaf() const { return next.empty(); }
  };

  explicit SuffixTree(std::vector<int> text);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<int>& text() const { return text_; }
  int root() const { return 0; }
  // Nodes in DFS preorder (parents before children).
  const std::vector<int>& preorder() const { return order_; }
  int edge_length(int node) const;

 private:
  static constexpr int kOpenEnd = 1 << 30;

  int new_node(int start, int end);
  void extend(int pos);
  void annotate();

  std::vector<int> text_;
  std::vector<Node> nodes_;
  std::vector<int> order_;
  int active_node_ = 0;
  int active_edge_ = 0;
  int active_length_ = 0;
  int remainder_ = 0;
};

struct CommonSubstring {
  size_t start_a = 0;
  size_t start_b = 0;
  size_t length = 0;
};

// Longest common contiguous run of `a` and `b` via a generalized suffix
// tree. Symbols must be non-negative. Ties go to the earliest start in `a`,
// then in `b`.
CommonSubstring longest_common_substring(std::span<const int> a, std::span<const int> b);

}  // namespace metaqa

#endif  // METAQA_SUFFIX_TREE_H_
