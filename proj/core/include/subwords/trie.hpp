#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subwords/words.hpp"

namespace subwords {

/// Words longer than this are refused by build_trie: the node count can reach
/// 2^|w|, and the trie is a verification oracle, not the production path.
inline constexpr std::size_t kTrieLengthGuard = 20;

/// The trie of canonical subwords of a word w: the root is the empty word and
/// the children of the root are restricted to nonzero digits. Node n is the
/// canonical subword spelled by the letters on the path from the root.
class SubwordTrie {
 public:
  struct Node {
    int letter = -1;   // edge letter from the parent; -1 for the root
    int parent = -1;
    int depth = 0;
    std::vector<int> children;  // sorted by letter
  };

  SubwordTrie(Word source, std::vector<Node> nodes)
      : source_(std::move(source)), nodes_(std::move(nodes)) {}

  const Word& source() const noexcept { return source_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  int root() const noexcept { return 0; }

  Int node_count() const { return Int(nodes_.size()); }

  /// Entry l = number of distinct canonical subwords of length l.
  std::vector<Int> level_counts() const;

  /// Label of a node, i.e. the subword spelled from the root.
  Word label(int id) const;

  /// Child of `id` along `letter`, or -1.
  int child(int id, int letter) const;

 private:
  Word source_;
  std::vector<Node> nodes_;
};

SubwordTrie build_trie(const Word& w, std::size_t length_guard = kTrieLengthGuard);

/// Maximal-block factorization w = a_1^{n_1} ... a_M^{n_M} with adjacent block
/// letters distinct, plus the suffix alphabet and first-block-index tables.
struct BlockDecomposition {
  struct Block {
    int letter;
    int run;
  };

  Word source;
  std::vector<Block> blocks;             // blocks[k-1] holds (a_k, n_k)
  std::vector<std::vector<int>> alph;    // alph[l] = letters of a_{l+1}..a_M, sorted
  std::vector<std::vector<int>> first;   // first[l][a] = j(a,l), 0 when a is absent

  std::size_t block_count() const { return blocks.size(); }
  /// j(a, l): smallest index in {l+1, ..., M} whose block letter is a.
  int first_index(int letter, int l) const {
    return first.at(static_cast<std::size_t>(l)).at(static_cast<std::size_t>(letter));
  }
};

/// Factorizes a nonempty canonical word; throws std::domain_error otherwise.
BlockDecomposition block_factorization(const Word& w);

/// Checks the structural description of the trie against the block
/// factorization: root degree and labels, inner-node degrees along the spine,
/// and label-preserving isomorphism of the hanging subtrees.
/// Throws std::invalid_argument if t and d were built from different words.
bool verify_structure(const SubwordTrie& t, const BlockDecomposition& d);

/// Graphviz DOT rendering, one node per subword.
std::string to_dot(const SubwordTrie& t);

}  // namespace subwords
