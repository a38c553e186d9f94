#include "bseries/series.hpp"

#include <random>
#include <utility>

#include <nlohmann/json.hpp>

#include "bseries/errors.hpp"
#include "bseries/pruning.hpp"

namespace bseries {

BSeries::BSeries(int max_order, Rational empty_coefficient,
                 std::map<Tree, Rational> coefficients)
    : max_order_(max_order),
      empty_(std::move(empty_coefficient)),
      coefficients_(std::move(coefficients)) {
  const std::vector<Tree> expected = enumerate_trees(max_order);
  if (coefficients_.size() != expected.size()) {
    throw DomainError("BSeries: coefficient table must cover exactly the trees of order <= max_order");
  }
  for (const Tree& tree : expected) {
    if (!coefficients_.count(tree)) {
      throw DomainError("BSeries: missing coefficient for " + render_tree(tree));
    }
  }
}

BSeries BSeries::identity(int max_order) {
  std::map<Tree, Rational> coefficients;
  for (const Tree& tree : enumerate_trees(max_order)) {
    coefficients.emplace(tree, 0);
  }
  return BSeries(max_order, 1, std::move(coefficients));
}

BSeries BSeries::exact_flow(int max_order) {
  std::map<Tree, Rational> coefficients;
  for (const Tree& tree : enumerate_trees(max_order)) {
    coefficients.emplace(tree, Rational(Int(1), tree.density()));
  }
  return BSeries(max_order, 1, std::move(coefficients));
}

BSeries BSeries::random(std::uint64_t seed, int max_order, bool in_class_b) {
  std::mt19937_64 generator(seed);
  // Explicit modulo mapping keeps the stream identical across platforms.
  auto draw = [&generator]() {
    const long long p = static_cast<long long>(generator() % 19) - 9;
    const long long q = static_cast<long long>(generator() % 9) + 1;
    return Rational(p, q);
  };
  const Rational empty = in_class_b ? Rational(1) : draw();
  std::map<Tree, Rational> coefficients;
  for (const Tree& tree : enumerate_trees(max_order)) {
    coefficients.emplace(tree, draw());
  }
  return BSeries(max_order, empty, std::move(coefficients));
}

const Rational& BSeries::coefficient(const Tree& tree) const {
  if (tree.order() > max_order_) {
    throw TruncationError("coefficient of a tree of order " +
                          std::to_string(tree.order()) +
                          " requested from a series truncated at " +
                          std::to_string(max_order_));
  }
  return coefficients_.at(tree);
}

Rational BSeries::derivative_coefficient(const std::optional<Tree>& tree) const {
  if (!tree.has_value()) return 0;
  Rational result = 1;
  for (const auto& child : tree->children()) {
    result *= rational_pow(coefficient(child.subtree), child.multiplicity);
  }
  return result;
}

Rational BSeries::eval(const Forest& forest) const {
  Rational result = 1;
  for (const auto& entry : forest.entries()) {
    result *= rational_pow(coefficient(entry.tree), entry.multiplicity);
  }
  return result;
}

Rational BSeries::eval(const ForestSum& sum) const {
  Rational result = 0;
  for (const auto& [forest, coefficient] : sum.terms()) {
    result += coefficient * eval(forest);
  }
  return result;
}

BSeries BSeries::truncated(int max_order) const {
  if (max_order > max_order_) {
    throw TruncationError("cannot extend a series truncated at " +
                          std::to_string(max_order_));
  }
  std::map<Tree, Rational> coefficients;
  for (const Tree& tree : enumerate_trees(max_order)) {
    coefficients.emplace(tree, coefficients_.at(tree));
  }
  return BSeries(max_order, empty_, std::move(coefficients));
}

BSeries BSeries::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("series file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("max_order") ||
      !doc.contains("empty") || !doc.contains("trees")) {
    throw FormatError("series file: expected object with max_order, empty, trees");
  }
  if (!doc["max_order"].is_number_integer() || doc["max_order"].get<int>() < 1) {
    throw FormatError("series file: max_order must be a positive integer");
  }
  const int max_order = doc["max_order"].get<int>();
  if (!doc["empty"].is_string()) {
    throw FormatError("series file: empty must be a rational string");
  }
  const Rational empty = parse_rational(doc["empty"].get<std::string>());
  if (!doc["trees"].is_object()) {
    throw FormatError("series file: trees must be an object");
  }
  const auto& trees = doc["trees"];

  std::map<Tree, Rational> coefficients;
  const std::vector<Tree> expected = enumerate_trees(max_order);
  for (const Tree& tree : expected) {
    const std::string key = render_tree(tree);
    if (!trees.contains(key)) {
      throw FormatError("series file: missing tree \"" + key + "\"");
    }
    if (!trees[key].is_string()) {
      throw FormatError("series file: coefficient of \"" + key +
                        "\" must be a rational string");
    }
    coefficients.emplace(tree, parse_rational(trees[key].get<std::string>()));
  }
  if (trees.size() != expected.size()) {
    throw FormatError("series file: unexpected extra tree keys");
  }
  return BSeries(max_order, empty, std::move(coefficients));
}

std::string BSeries::to_json_text() const {
  nlohmann::json trees = nlohmann::json::object();
  for (const auto& [tree, coefficient] : coefficients_) {
    trees[render_tree(tree)] = to_string(coefficient);
  }
  nlohmann::json doc{{"max_order", max_order_},
                     {"empty", to_string(empty_)},
                     {"trees", std::move(trees)}};
  return doc.dump(2);
}

bool BSeries::operator==(const BSeries& other) const {
  return max_order_ == other.max_order_ && empty_ == other.empty_ &&
         coefficients_ == other.coefficients_;
}

BSeries compose(const BSeries& a, const BSeries& b, int max_order) {
  if (!a.in_class_b()) {
    throw DomainError("compose: the inner series must have empty coefficient 1");
  }
  if (a.max_order() < max_order || b.max_order() < max_order) {
    throw TruncationError("compose: both series must be truncated at >= the requested order");
  }
  std::map<Tree, Rational> coefficients;
  for (const Tree& tree : enumerate_trees(max_order)) {
    Rational value = b.empty_coefficient() * a.coefficient(tree);
    for (const Tree& sub : enumerate_subtrees(tree)) {
      value += b.coefficient(sub) * a.eval(prune(tree, sub));
    }
    coefficients.emplace(tree, std::move(value));
  }
  return BSeries(max_order, b.empty_coefficient(), std::move(coefficients));
}

}  // namespace bseries
