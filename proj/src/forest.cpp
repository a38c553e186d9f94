#include "bseries/forest.hpp"

#include <algorithm>

namespace bseries {

Forest Forest::single(const Tree& tree) {
  Forest forest;
  forest.entries_.push_back(Entry{tree, 1});
  return forest;
}

Forest Forest::of(std::vector<Tree> trees) {
  std::sort(trees.begin(), trees.end());
  Forest forest;
  for (auto& tree : trees) {
    if (!forest.entries_.empty() && forest.entries_.back().tree == tree) {
      ++forest.entries_.back().multiplicity;
    } else {
      forest.entries_.push_back(Entry{std::move(tree), 1});
    }
  }
  return forest;
}

int Forest::order() const {
  int total = 0;
  for (const auto& entry : entries_) {
    total += entry.multiplicity * entry.tree.order();
  }
  return total;
}

Forest Forest::operator*(const Forest& other) const {
  Forest result;
  std::size_t ia = 0, ib = 0;
  const auto& a = entries_;
  const auto& b = other.entries_;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size() || (ia < a.size() && a[ia].tree < b[ib].tree)) {
      result.entries_.push_back(a[ia++]);
    } else if (ia == a.size() || b[ib].tree < a[ia].tree) {
      result.entries_.push_back(b[ib++]);
    } else {
      result.entries_.push_back(
          Entry{a[ia].tree, a[ia].multiplicity + b[ib].multiplicity});
      ++ia;
      ++ib;
    }
  }
  return result;
}

int compare(const Forest& lhs, const Forest& rhs) {
  if (lhs.order() != rhs.order()) return lhs.order() < rhs.order() ? -1 : 1;

  const auto& a = lhs.entries();
  const auto& b = rhs.entries();
  std::size_t ia = 0, ib = 0;
  int left_a = 0, left_b = 0;
  while (true) {
    if (ia == a.size() && ib == b.size()) return 0;
    if (ia == a.size()) return -1;
    if (ib == b.size()) return 1;
    if (left_a == 0) left_a = a[ia].multiplicity;
    if (left_b == 0) left_b = b[ib].multiplicity;
    const int c = compare(a[ia].tree, b[ib].tree);
    if (c != 0) return c;
    const int step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0) ++ia;
    if (left_b == 0) ++ib;
  }
}

Forest forest_of_children(const Tree& tree) {
  Forest forest;
  std::vector<Tree> trees;
  for (const auto& child : tree.children()) {
    for (int rep = 0; rep < child.multiplicity; ++rep) {
      trees.push_back(child.subtree);
    }
  }
  return Forest::of(std::move(trees));
}

Tree graft(const Forest& forest) {
  std::vector<Tree> children;
  for (const auto& entry : forest.entries()) {
    for (int rep = 0; rep < entry.multiplicity; ++rep) {
      children.push_back(entry.tree);
    }
  }
  return Tree::make_node(std::move(children));
}

std::string render_forest(const Forest& forest) {
  if (forest.is_identity()) return "1";
  std::string out;
  bool first = true;
  for (const auto& entry : forest.entries()) {
    for (int rep = 0; rep < entry.multiplicity; ++rep) {
      if (!first) out += ' ';
      first = false;
      out += render_tree(entry.tree);
    }
  }
  return out;
}

ForestSum ForestSum::of(Forest forest, Rational coefficient) {
  ForestSum sum;
  sum.add_term(forest, coefficient);
  return sum;
}

void ForestSum::add_term(const Forest& forest, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(forest, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

ForestSum& ForestSum::operator+=(const ForestSum& other) {
  for (const auto& [forest, coefficient] : other.terms_) {
    add_term(forest, coefficient);
  }
  return *this;
}

ForestSum ForestSum::operator+(const ForestSum& other) const {
  ForestSum result = *this;
  result += other;
  return result;
}

ForestSum ForestSum::operator*(const ForestSum& other) const {
  ForestSum result;
  for (const auto& [fa, ca] : terms_) {
    for (const auto& [fb, cb] : other.terms_) {
      result.add_term(fa * fb, ca * cb);
    }
  }
  return result;
}

ForestSum ForestSum::scaled(const Rational& factor) const {
  ForestSum result;
  if (factor == 0) return result;
  for (const auto& [forest, coefficient] : terms_) {
    result.terms_.emplace(forest, coefficient * factor);
  }
  return result;
}

ForestSum ForestSum::pow(int exponent) const {
  ForestSum result = ForestSum::of(Forest());
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::string render_forest_sum(const ForestSum& sum) {
  if (sum.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [forest, coefficient] : sum.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(coefficient);
    out += "*(";
    out += render_forest(forest);
    out += ')';
  }
  return out;
}

}  // namespace bseries
