#pragma once

#include <string>
#include <vector>

#include "bseries/forest.hpp"
#include "bseries/tree.hpp"

namespace bseries {

// Deterministic vertex labelling of a canonical tree: pre-order over the
// canonical child order, so parent[i] < i for every non-root vertex.
struct LabelledTree {
  std::vector<int> parent;                 // parent[0] == -1
  std::vector<std::vector<int>> children;  // ascending adjacency per vertex
  Tree source;

  int size() const { return static_cast<int>(parent.size()); }
};

LabelledTree to_labelled(const Tree& tree);

// Injective, root-preserving, edge-preserving map from the labelled form of
// t' into the labelled form of t.
struct Embedding {
  std::vector<int> vertex_map;

  bool operator==(const Embedding& other) const {
    return vertex_map == other.vertex_map;
  }
};

// All embeddings of t_sub into t, sorted lexicographically by vertex map.
// Empty exactly when t_sub is not a subtree of t.
std::vector<Embedding> enumerate_embeddings(const Tree& t_sub, const Tree& t);

bool is_subtree(const Tree& t_sub, const Tree& t);

// All distinct canonical subtree shapes of t (root-containing connected
// vertex subsets, canonicalized and deduplicated), sorted canonically.
std::vector<Tree> enumerate_subtrees(const Tree& t);

// Sum over all embeddings of the forest induced on the unmapped vertices.
// Each embedding counts once, so this equals sigma(t_sub) times the
// assignment-based pruning.
ForestSum prune_by_embeddings(const Tree& t, const Tree& t_sub);

// (n'+1) x n nonnegative integer matrix distributing the root branches of t'
// over those of t.  Row 0 is the untouched row; rows 1..n' and the columns
// follow the canonical order of the distinct children of t' and t.
// Conditions: entries in rows >= 1 may be positive only where the t' child is
// a subtree of the t child; column sums equal the t multiplicities k_j; row
// sums (rows >= 1) equal the t' multiplicities k'_i.
class AssignmentMatrix {
 public:
  AssignmentMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), cells_(std::size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const { return cells_[std::size_t(i) * cols_ + j]; }
  int& at(int i, int j) { return cells_[std::size_t(i) * cols_ + j]; }

  bool operator==(const AssignmentMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           cells_ == other.cells_;
  }
  // Row-major lexicographic; shape compared first.
  bool operator<(const AssignmentMatrix& other) const;

 private:
  int rows_;
  int cols_;
  std::vector<int> cells_;
};

// Rows separated by "; ", entries by single spaces, row 0 first,
// e.g. "0 1 1; 1 0 0; 0 2 0".
std::string render_assignment(const AssignmentMatrix& matrix);

// All assignment matrices for the pair (t_sub, t), sorted row-major
// lexicographically.  For t_sub the single-vertex tree the unique assignment
// is the forced row-0 matrix.
std::vector<AssignmentMatrix> enumerate_assignments(const Tree& t_sub,
                                                    const Tree& t);

// The pruning contribution of a single assignment:
// prod_j (k_j! / prod_i m_ij!) prod_i (t_j \ t'_i)^{m_ij},
// with the untouched row contributing t_j itself.
ForestSum assignment_term(const AssignmentMatrix& matrix, const Tree& t_sub,
                          const Tree& t);

// Sum of assignment_term over all assignments, computed recursively with the
// base cases t \ (untouched) = t and leaf \ leaf = identity forest.
// Zero exactly when t_sub is not a subtree of t.
ForestSum prune_by_assignments(const Tree& t, const Tree& t_sub);

// Canonical pruning t \ t_sub (assignment semantics; one term per
// root-containing vertex subset).  prune_by_embeddings equals this scaled by
// sigma(t_sub).
ForestSum prune(const Tree& t, const Tree& t_sub);

}  // namespace bseries
