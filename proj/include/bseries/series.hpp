#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "bseries/forest.hpp"
#include "bseries/rational.hpp"
#include "bseries/tree.hpp"

namespace bseries {

// Truncated B-series coefficient map: an exact rational for the empty tree
// and for every tree of order <= max_order.
class BSeries {
 public:
  // `coefficients` must cover exactly the trees of order <= max_order.
  BSeries(int max_order, Rational empty_coefficient,
          std::map<Tree, Rational> coefficients);

  // e: 1 at the empty tree, 0 on every tree.
  static BSeries identity(int max_order);

  // Exact solution series: 1 at the empty tree, 1/gamma(t) on trees.
  static BSeries exact_flow(int max_order);

  // Deterministic small rationals p/q, |p| <= 9, 1 <= q <= 9; the empty
  // coefficient is forced to 1 when in_class_b, otherwise drawn first.
  static BSeries random(std::uint64_t seed, int max_order, bool in_class_b);

  int max_order() const { return max_order_; }
  const Rational& empty_coefficient() const { return empty_; }
  bool in_class_b() const { return empty_ == 1; }

  // Throws TruncationError when order(tree) > max_order.
  const Rational& coefficient(const Tree& tree) const;

  // (aD): 0 at the empty tree (nullopt), 1 at the single-vertex tree,
  // otherwise the product of the coefficients over the root branches.
  // Only the children of `tree` must be within the truncation.
  Rational derivative_coefficient(const std::optional<Tree>& tree) const;

  // Homomorphic extension: product over the forest, then linear over terms.
  Rational eval(const Forest& forest) const;
  Rational eval(const ForestSum& sum) const;

  // Restriction to a smaller truncation order.
  BSeries truncated(int max_order) const;

  // JSON object { "max_order": N, "empty": "p/q", "trees": { "<bracket>":
  // "p/q", ... } } with every tree of order <= N present.
  static BSeries from_json_text(const std::string& text);
  std::string to_json_text() const;

  bool operator==(const BSeries& other) const;
  bool operator!=(const BSeries& other) const { return !(*this == other); }

 private:
  int max_order_;
  Rational empty_;
  std::map<Tree, Rational> coefficients_;
};

// Composition product of Theorem-style coefficient maps:
//   (ab)(empty) = b(empty)
//   (ab)(t) = b(empty) a(t) + sum over subtrees t' of b(t') a(t \ t').
// Requires a in class B (DomainError otherwise) and both truncations >= N.
BSeries compose(const BSeries& a, const BSeries& b, int max_order);

}  // namespace bseries
