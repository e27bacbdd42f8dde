#include "subwords/trie.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace subwords {

std::vector<Int> SubwordTrie::level_counts() const {
  std::size_t max_depth = 0;
  for (const Node& n : nodes_) max_depth = std::max(max_depth, static_cast<std::size_t>(n.depth));
  std::vector<Int> counts(max_depth + 1);
  for (const Node& n : nodes_) counts[static_cast<std::size_t>(n.depth)] += 1;
  return counts;
}

Word SubwordTrie::label(int id) const {
  std::vector<std::uint8_t> letters;
  for (int cur = id; cur != 0; cur = node(cur).parent) {
    letters.push_back(static_cast<std::uint8_t>(node(cur).letter));
  }
  std::reverse(letters.begin(), letters.end());
  return Word(source_.base(), std::move(letters));
}

int SubwordTrie::child(int id, int letter) const {
  for (int c : node(id).children) {
    if (node(c).letter == letter) return c;
  }
  return -1;
}

SubwordTrie build_trie(const Word& w, std::size_t length_guard) {
  if (w.size() > length_guard) {
    throw std::length_error("word exceeds the trie size guard");
  }
  const int b = w.base().value();
  const std::size_t len = w.size();

  // next[i][a] = smallest j >= i with w[j] = a, or len.
  std::vector<std::vector<std::size_t>> next(len + 1,
                                             std::vector<std::size_t>(static_cast<std::size_t>(b), len));
  for (std::size_t i = len; i-- > 0;) {
    next[i] = next[i + 1];
    next[i][static_cast<std::size_t>(w.digit(i))] = i;
  }

  std::vector<SubwordTrie::Node> nodes(1);
  // A node is identified with the end position of the greedy (leftmost)
  // occurrence of its label; children follow first occurrences.
  std::vector<std::size_t> after = {0};  // scan position per node
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const std::size_t from = after[id];
    const int first_letter = (id == 0) ? 1 : 0;  // the root skips digit 0
    for (int a = first_letter; a < b; ++a) {
      const std::size_t q = next[from][static_cast<std::size_t>(a)];
      if (q == len) continue;
      SubwordTrie::Node child;
      child.letter = a;
      child.parent = static_cast<int>(id);
      child.depth = nodes[id].depth + 1;
      nodes[id].children.push_back(static_cast<int>(nodes.size()));
      nodes.push_back(child);
      after.push_back(q + 1);
    }
  }
  return SubwordTrie(w, std::move(nodes));
}

BlockDecomposition block_factorization(const Word& w) {
  if (w.is_empty() || !is_canonical(w)) {
    throw std::domain_error("block factorization expects a nonempty canonical word");
  }
  BlockDecomposition d{w, {}, {}, {}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int letter = w.digit(i);
    if (!d.blocks.empty() && d.blocks.back().letter == letter) {
      ++d.blocks.back().run;
    } else {
      d.blocks.push_back({letter, 1});
    }
  }
  const std::size_t m = d.blocks.size();
  const int b = w.base().value();
  d.alph.assign(m, {});
  d.first.assign(m, std::vector<int>(static_cast<std::size_t>(b), 0));
  for (std::size_t l = m; l-- > 0;) {
    std::set<int> letters;
    if (l + 1 < m) letters.insert(d.alph[l + 1].begin(), d.alph[l + 1].end());
    letters.insert(d.blocks[l].letter);
    d.alph[l].assign(letters.begin(), letters.end());
    if (l + 1 < m) d.first[l] = d.first[l + 1];
    d.first[l][static_cast<std::size_t>(d.blocks[l].letter)] = static_cast<int>(l) + 1;
  }
  return d;
}

namespace {

bool isomorphic(const SubwordTrie& t, int lhs, int rhs) {
  if (lhs == rhs) return true;
  const auto& a = t.node(lhs).children;
  const auto& c = t.node(rhs).children;
  if (a.size() != c.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (t.node(a[i]).letter != t.node(c[i]).letter) return false;
    if (!isomorphic(t, a[i], c[i])) return false;
  }
  return true;
}

std::vector<int> child_letters(const SubwordTrie& t, int id) {
  std::vector<int> letters;
  for (int c : t.node(id).children) letters.push_back(t.node(c).letter);
  return letters;
}

}  // namespace

bool verify_structure(const SubwordTrie& t, const BlockDecomposition& d) {
  if (t.source() != d.source) {
    throw std::invalid_argument("trie and block decomposition built from different words");
  }
  const Word& w = t.source();
  const std::size_t m = d.block_count();

  // Spine node of depth k = the prefix w[0..k); the blocks concatenate to w.
  std::vector<int> spine(w.size() + 1);
  spine[0] = t.root();
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int c = t.child(spine[k], w.digit(k));
    if (c < 0) return false;
    spine[k + 1] = c;
  }

  // T_l is rooted at the first node of block l+1.
  std::vector<int> subtree_root(m);
  {
    std::size_t depth = 0;
    for (std::size_t l = 0; l < m; ++l) {
      subtree_root[l] = spine[depth + 1];
      depth += static_cast<std::size_t>(d.blocks[l].run);
    }
  }

  // Root: children are exactly Alph(0) \ {0}, each isomorphic to T_{j(a,0)-1}.
  {
    std::vector<int> expected;
    for (int a : d.alph[0]) {
      if (a != 0) expected.push_back(a);
    }
    if (child_letters(t, t.root()) != expected) return false;
    for (int a : expected) {
      const int child = t.child(t.root(), a);
      const int ref = subtree_root[static_cast<std::size_t>(d.first_index(a, 0) - 1)];
      if (!isomorphic(t, child, ref)) return false;
    }
  }

  // Inner spine nodes a_1^{n_1}...a_l^{n_l} a_{l+1}^i with (l, i) != (0, 0):
  // children are exactly Alph(l); off-spine children match T_{j(a,l)-1}.
  std::size_t depth_before_block = 0;
  for (std::size_t l = 0; l < m; ++l) {
    const int block_letter = d.blocks[l].letter;
    for (int i = 0; i < d.blocks[l].run; ++i) {
      if (l == 0 && i == 0) continue;
      const int node = spine[depth_before_block + static_cast<std::size_t>(i)];
      if (child_letters(t, node) != d.alph[l]) return false;
      for (int a : d.alph[l]) {
        if (a == block_letter) continue;
        const int child = t.child(node, a);
        const int ref = subtree_root[static_cast<std::size_t>(d.first_index(a, static_cast<int>(l)) - 1)];
        if (!isomorphic(t, child, ref)) return false;
      }
    }
    depth_before_block += static_cast<std::size_t>(d.blocks[l].run);
  }
  return true;
}

std::string to_dot(const SubwordTrie& t) {
  std::ostringstream out;
  out << "digraph subword_trie {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t id = 0; id < t.nodes().size(); ++id) {
    const Word label = t.label(static_cast<int>(id));
    out << "  n" << id << " [label=\"" << (label.is_empty() ? std::string("e") : label.str())
        << "\"];\n";
  }
  for (std::size_t id = 0; id < t.nodes().size(); ++id) {
    for (int c : t.node(static_cast<int>(id)).children) {
      out << "  n" << id << " -> n" << c << " [label=\"" << t.node(c).letter << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace subwords
