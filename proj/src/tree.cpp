#include "bseries/tree.hpp"

#include <algorithm>

#include "bseries/errors.hpp"

namespace bseries {

Tree::Tree() {
  static const std::shared_ptr<const Node> node = std::make_shared<Node>();
  node_ = node;
}

Tree Tree::leaf() { return Tree(); }

Tree Tree::make_node(std::vector<Tree> children) {
  std::sort(children.begin(), children.end());
  auto node = std::make_shared<Node>();
  int total = 1;
  for (auto& child : children) {
    total += child.order();
    if (!node->children.empty() && node->children.back().subtree == child) {
      ++node->children.back().multiplicity;
    } else {
      node->children.push_back(Child{std::move(child), 1});
    }
  }
  node->order = total;
  return Tree(std::move(node));
}

Int Tree::symmetry() const {
  Int result = 1;
  for (const auto& child : children()) {
    result *= factorial(child.multiplicity);
    result *= boost::multiprecision::pow(child.subtree.symmetry(),
                                         unsigned(child.multiplicity));
  }
  return result;
}

Int Tree::density() const {
  Int result = order();
  for (const auto& child : children()) {
    result *= boost::multiprecision::pow(child.subtree.density(),
                                         unsigned(child.multiplicity));
  }
  return result;
}

int compare(const Tree& lhs, const Tree& rhs) {
  if (lhs.node_ == rhs.node_) return 0;
  if (lhs.order() != rhs.order()) return lhs.order() < rhs.order() ? -1 : 1;

  const auto& a = lhs.children();
  const auto& b = rhs.children();
  std::size_t ia = 0, ib = 0;
  int left_a = 0, left_b = 0;
  while (true) {
    if (ia == a.size() && ib == b.size()) return 0;
    if (ia == a.size()) return -1;
    if (ib == b.size()) return 1;
    if (left_a == 0) left_a = a[ia].multiplicity;
    if (left_b == 0) left_b = b[ib].multiplicity;
    const int c = compare(a[ia].subtree, b[ib].subtree);
    if (c != 0) return c;
    const int step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0) ++ia;
    if (left_b == 0) ++ib;
  }
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  Tree parse_document() {
    Tree tree = parse_tree_expr();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return tree;
  }

 private:
  Tree parse_tree_expr() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '.') {
      ++pos_;
      return Tree::leaf();
    }
    if (c == '[') {
      ++pos_;
      std::vector<Tree> children;
      children.push_back(parse_tree_expr());
      while (pos_ < text_.size() && text_[pos_] == ' ') {
        ++pos_;
        children.push_back(parse_tree_expr());
      }
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return Tree::make_node(std::move(children));
    }
    fail("expected '.' or '['");
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_to(const Tree& tree, std::string& out) {
  if (tree.is_leaf()) {
    out += '.';
    return;
  }
  out += '[';
  bool first = true;
  for (const auto& child : tree.children()) {
    for (int rep = 0; rep < child.multiplicity; ++rep) {
      if (!first) out += ' ';
      first = false;
      render_to(child.subtree, out);
    }
  }
  out += ']';
}

}  // namespace

Tree parse_tree(std::string_view text) {
  return TreeParser(text).parse_document();
}

std::string render_tree(const Tree& tree) {
  std::string out;
  render_to(tree, out);
  return out;
}

std::vector<Tree> enumerate_trees(int max_order) {
  if (max_order < 1) throw DomainError("enumerate_trees: max_order must be >= 1");

  std::vector<std::vector<Tree>> by_order(max_order + 1);
  by_order[1] = {Tree::leaf()};

  for (int n = 2; n <= max_order; ++n) {
    // Candidates for children: every tree of order < n, canonically sorted.
    std::vector<Tree> candidates;
    for (int k = 1; k < n; ++k) {
      candidates.insert(candidates.end(), by_order[k].begin(), by_order[k].end());
    }

    std::vector<Tree> chosen;
    auto dfs = [&](auto&& self, std::size_t start, int remaining) -> void {
      if (remaining == 0) {
        by_order[n].push_back(Tree::make_node(chosen));
        return;
      }
      for (std::size_t i = start; i < candidates.size(); ++i) {
        if (candidates[i].order() > remaining) break;
        chosen.push_back(candidates[i]);
        self(self, i, remaining - candidates[i].order());
        chosen.pop_back();
      }
    };
    dfs(dfs, 0, n - 1);
    std::sort(by_order[n].begin(), by_order[n].end());
  }

  std::vector<Tree> result;
  for (int n = 1; n <= max_order; ++n) {
    result.insert(result.end(), by_order[n].begin(), by_order[n].end());
  }
  return result;
}

}  // namespace bseries
