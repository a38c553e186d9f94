#pragma once

#include <map>
#include <string>
#include <vector>

#include "bseries/rational.hpp"
#include "bseries/tree.hpp"

namespace bseries {

// Multiset of rooted trees; the empty forest is the monoid identity 1.
class Forest {
 public:
  struct Entry {
    Tree tree;
    int multiplicity = 1;
  };

  Forest() = default;  // the identity forest

  static Forest single(const Tree& tree);
  static Forest of(std::vector<Tree> trees);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_identity() const { return entries_.empty(); }

  // Total vertex count over all trees; 0 for the identity.
  int order() const;

  // Multiset union.
  Forest operator*(const Forest& other) const;

  bool operator==(const Forest& other) const;
  bool operator!=(const Forest& other) const { return !(*this == other); }
  bool operator<(const Forest& other) const;

 private:
  std::vector<Entry> entries_;  // strictly increasing by canonical tree order
};

// Total order: by forest order first, then lexicographically on the
// multiplicity-expanded tree sequences.
int compare(const Forest& lhs, const Forest& rhs);

inline bool Forest::operator==(const Forest& other) const {
  return compare(*this, other) == 0;
}
inline bool Forest::operator<(const Forest& other) const {
  return compare(*this, other) < 0;
}

// The children multiset of t; the single-vertex tree maps to the identity.
Forest forest_of_children(const Tree& tree);

// [f]: attaches every tree of f to a fresh root; inverse of
// forest_of_children.
Tree graft(const Forest& forest);

// Trees joined by single spaces in canonical order; identity renders as "1".
std::string render_forest(const Forest& forest);

// Finite rational-linear combination of forests.  Normalized: no zero
// coefficients, no duplicate forest keys.
class ForestSum {
 public:
  ForestSum() = default;  // zero

  static ForestSum of(Forest forest, Rational coefficient = 1);

  const std::map<Forest, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ForestSum& operator+=(const ForestSum& other);
  ForestSum operator+(const ForestSum& other) const;
  ForestSum operator*(const ForestSum& other) const;
  ForestSum scaled(const Rational& factor) const;
  ForestSum pow(int exponent) const;  // exponent >= 0

  bool operator==(const ForestSum& other) const { return terms_ == other.terms_; }
  bool operator!=(const ForestSum& other) const { return !(*this == other); }

 private:
  void add_term(const Forest& forest, const Rational& coefficient);

  std::map<Forest, Rational> terms_;
};

// Terms "<rational>*(<forest>)" joined by " + ", sorted by
// (forest order, canonical order); the zero sum renders as "0".
std::string render_forest_sum(const ForestSum& sum);

}  // namespace bseries
