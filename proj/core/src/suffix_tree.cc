#include "metaqa/suffix_tree.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace metaqa {

SuffixTree::SuffixTree(std::vector<int> text) : text_(std::move(text)) {
  nodes_.reserve(2 * text_.size() + 2);
  new_node(-1, -1);
  for (int pos = 0; pos < static_cast<int>(text_.size()); ++pos) extend(pos);
  annotate();
}

int SuffixTree::new_node(int start, int end) {
  Node n;
  n.start = start;
  n.end = end;
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int SuffixTree::edge_length(int node) const {
  const Node& n = nodes_[node];
  if (node == 0) return 0;
  int end = std::min(n.end, static_cast<int>(text_.size()));
  return end - n.start;
}

void SuffixTree::extend(int pos) {
  const int c = text_[pos];
  ++remainder_;
  int last_internal = -1;
  auto link_from_last = [&](int target) {
    if (last_internal >= 0) nodes_[last_internal].link = target;
    last_internal = -1;
  };

  while (remainder_ > 0) {
    if (active_length_ == 0) active_edge_ = pos;
    const int edge_symbol = text_[active_edge_];
    auto it = nodes_[active_node_].next.find(edge_symbol);
    if (it == nodes_[active_node_].next.end()) {
      int leaf = new_node(pos, kOpenEnd);
      nodes_[active_node_].next[edge_symbol] = leaf;
      link_from_last(active_node_);
    } else {
      const int child = it->second;
      const int child_start = nodes_[child].start;
      const int len = std::min(nodes_[child].end, pos + 1) - child_start;
      if (active_length_ >= len) {
        // Walk down.
        active_edge_ += len;
        active_length_ -= len;
        active_node_ = child;
        continue;
      }
      if (text_[child_start + active_length_] == c) {
        if (active_node_ != 0) link_from_last(active_node_);
        ++active_length_;
        break;
      }
      int split = new_node(child_start, child_start + active_length_);
      nodes_[active_node_].next[edge_symbol] = split;
      int leaf = new_node(pos, kOpenEnd);
      nodes_[split].next[c] = leaf;
      nodes_[child].start += active_length_;
      nodes_[split].next[text_[nodes_[child].start]] = child;
      link_from_last(split);
      last_internal = split;
    }
    --remainder_;
    if (active_node_ == 0 && active_length_ > 0) {
      --active_length_;
      active_edge_ = pos - remainder_ + 1;
    } else if (active_node_ != 0) {
      active_node_ = nodes_[active_node_].link;
    }
  }
}

void SuffixTree::annotate() {
  const int n = static_cast<int>(text_.size());
  order_.clear();
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order_.push_back(v);
    Node& node = nodes_[v];
    if (v != 0) {
      node.depth = nodes_[node.parent].depth + edge_length(v);
      if (node.leaf()) node.suffix = n - node.depth;
    }
    // Reverse so children pop in symbol order.
    for (auto it = node.next.rbegin(); it != node.next.rend(); ++it) {
      nodes_[it->second].parent = v;
      stack.push_back(it->second);
    }
  }
}

CommonSubstring longest_common_substring(std::span<const int> a, std::span<const int> b) {
  CommonSubstring best;
  if (a.empty() || b.empty()) return best;
  for (int s : a) {
    if (s < 0) throw std::invalid_argument("symbols must be non-negative");
  }
  for (int s : b) {
    if (s < 0) throw std::invalid_argument("symbols must be non-negative");
  }
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  std::vector<int> text(a.begin(), a.end());
  text.push_back(-1);
  text.insert(text.end(), b.begin(), b.end());
  text.push_back(-2);
  SuffixTree tree(std::move(text));

  const auto& nodes = tree.nodes();
  constexpr int kNone = std::numeric_limits<int>::max();
  std::vector<int> min_a(nodes.size(), kNone), min_b(nodes.size(), kNone);
  const auto& order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    const auto& node = nodes[v];
    if (node.leaf()) {
      if (node.suffix < na) {
        min_a[v] = node.suffix;
      } else if (node.suffix > na && node.suffix < na + 1 + nb) {
        min_b[v] = node.suffix - na - 1;
      }
    }
    if (node.parent >= 0) {
      min_a[node.parent] = std::min(min_a[node.parent], min_a[v]);
      min_b[node.parent] = std::min(min_b[node.parent], min_b[v]);
    }
  }
  for (int v : order) {
    const auto& node = nodes[v];
    if (v == 0 || node.leaf() || min_a[v] == kNone || min_b[v] == kNone) continue;
    const size_t len = static_cast<size_t>(node.depth);
    const size_t sa = static_cast<size_t>(min_a[v]);
    const size_t sb = static_cast<size_t>(min_b[v]);
    if (len > best.length || (len == best.length && (sa < best.start_a ||
                                                     (sa == best.start_a && sb < best.start_b)))) {
      best = CommonSubstring{sa, sb, len};
    }
  }
  return best;
}

}  // namespace metaqa
