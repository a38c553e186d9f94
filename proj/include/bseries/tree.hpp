#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bseries/rational.hpp"

namespace bseries {

// Canonical unlabelled rooted tree.  Children are stored strictly increasing
// under the canonical total order with equal children merged into a
// multiplicity, so structural equality coincides with rooted-tree
// isomorphism.  Values are immutable and cheap to copy.
class Tree {
 public:
  struct Child;

  // The single-vertex tree.
  Tree();

  static Tree leaf();

  // Builds [t1 t2 ... tm] from a multiset of children (any order, duplicates
  // allowed); an empty multiset yields the single-vertex tree.
  static Tree make_node(std::vector<Tree> children);

  int order() const;
  bool is_leaf() const;
  const std::vector<Child>& children() const;

  // sigma(t): number of root-preserving automorphisms,
  // sigma(t) = prod k_i! sigma(t_i)^{k_i}.
  Int symmetry() const;

  // gamma(t) = |t| * prod gamma(t_i); the exact-flow coefficient is 1/gamma.
  Int density() const;

  bool operator==(const Tree& other) const;
  bool operator!=(const Tree& other) const { return !(*this == other); }
  bool operator<(const Tree& other) const;

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend int compare(const Tree& lhs, const Tree& rhs);
};

struct Tree::Child {
  Tree subtree;
  int multiplicity = 1;
};

struct Tree::Node {
  std::vector<Child> children;  // strictly increasing, duplicates merged
  int order = 1;
};

inline int Tree::order() const { return node_->order; }
inline bool Tree::is_leaf() const { return node_->children.empty(); }
inline const std::vector<Tree::Child>& Tree::children() const {
  return node_->children;
}

// Canonical total order: by order first, then lexicographically on the
// multiplicity-expanded child sequences, children compared recursively.
int compare(const Tree& lhs, const Tree& rhs);

inline bool Tree::operator==(const Tree& other) const {
  return compare(*this, other) == 0;
}
inline bool Tree::operator<(const Tree& other) const {
  return compare(*this, other) < 0;
}

// Grammar (bit-exact): tree ::= "." | "[" tree (" " tree)* "]"
// Child order in the input is irrelevant; the result is canonical.
Tree parse_tree(std::string_view text);

// Canonical bracket text, children repeated by multiplicity.
std::string render_tree(const Tree& tree);

// All canonical trees of order <= max_order, canonically sorted.
std::vector<Tree> enumerate_trees(int max_order);

}  // namespace bseries
