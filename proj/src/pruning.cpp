#include "bseries/pruning.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "bseries/errors.hpp"

namespace bseries {

namespace {

void build_labelled(const Tree& tree, int parent, LabelledTree& out) {
  const int index = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  for (const auto& child : tree.children()) {
    for (int rep = 0; rep < child.multiplicity; ++rep) {
      build_labelled(child.subtree, index, out);
    }
  }
}

// Canonical tree of the vertex subset reachable from `root` through included
// vertices.
Tree subset_tree(const LabelledTree& labelled, const std::vector<char>& in,
                 int root) {
  std::vector<Tree> children;
  for (int c : labelled.children[root]) {
    if (in[c]) children.push_back(subset_tree(labelled, in, c));
  }
  return Tree::make_node(std::move(children));
}

// Forest induced on the vertices outside `removed`; component roots are the
// kept vertices whose parent was removed.
Forest induced_forest(const LabelledTree& labelled,
                      const std::vector<char>& removed) {
  std::vector<char> kept(removed.size());
  for (std::size_t v = 0; v < removed.size(); ++v) kept[v] = !removed[v];
  std::vector<Tree> roots;
  for (int v = 0; v < labelled.size(); ++v) {
    if (removed[v]) continue;
    const int p = labelled.parent[v];
    if (p == -1 || removed[p]) roots.push_back(subset_tree(labelled, kept, v));
  }
  return Forest::of(std::move(roots));
}

}  // namespace

LabelledTree to_labelled(const Tree& tree) {
  LabelledTree out;
  out.source = tree;
  out.parent.reserve(tree.order());
  build_labelled(tree, -1, out);
  out.children.assign(out.parent.size(), {});
  for (int v = 1; v < out.size(); ++v) {
    out.children[out.parent[v]].push_back(v);
  }
  return out;
}

std::vector<Embedding> enumerate_embeddings(const Tree& t_sub, const Tree& t) {
  std::vector<Embedding> result;
  if (t_sub.order() > t.order()) return result;

  const LabelledTree sub = to_labelled(t_sub);
  const LabelledTree host = to_labelled(t);
  std::vector<int> map(sub.size(), -1);
  std::vector<char> used(host.size(), 0);
  map[0] = 0;
  used[0] = 1;

  auto dfs = [&](auto&& self, int v) -> void {
    if (v == sub.size()) {
      result.push_back(Embedding{map});
      return;
    }
    const int image_parent = map[sub.parent[v]];
    for (int c : host.children[image_parent]) {
      if (used[c]) continue;
      map[v] = c;
      used[c] = 1;
      self(self, v + 1);
      used[c] = 0;
    }
  };
  dfs(dfs, 1);

  std::sort(result.begin(), result.end(),
            [](const Embedding& a, const Embedding& b) {
              return a.vertex_map < b.vertex_map;
            });
  return result;
}

bool is_subtree(const Tree& t_sub, const Tree& t) {
  if (t_sub.order() > t.order()) return false;
  if (t_sub.is_leaf()) return true;

  const LabelledTree sub = to_labelled(t_sub);
  const LabelledTree host = to_labelled(t);
  std::vector<int> map(sub.size(), -1);
  std::vector<char> used(host.size(), 0);
  map[0] = 0;
  used[0] = 1;

  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == sub.size()) return true;
    const int image_parent = map[sub.parent[v]];
    for (int c : host.children[image_parent]) {
      if (used[c]) continue;
      map[v] = c;
      used[c] = 1;
      if (self(self, v + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  return dfs(dfs, 1);
}

std::vector<Tree> enumerate_subtrees(const Tree& t) {
  const LabelledTree labelled = to_labelled(t);
  const int n = labelled.size();
  std::set<Tree> shapes;
  std::vector<char> in(n, 0);
  in[0] = 1;

  // Vertices decided in index order; a vertex may be included only if its
  // parent is, so every subset is connected and contains the root.
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      shapes.insert(subset_tree(labelled, in, 0));
      return;
    }
    in[v] = 0;
    self(self, v + 1);
    if (in[labelled.parent[v]]) {
      in[v] = 1;
      self(self, v + 1);
      in[v] = 0;
    }
  };
  dfs(dfs, 1);

  return std::vector<Tree>(shapes.begin(), shapes.end());
}

ForestSum prune_by_embeddings(const Tree& t, const Tree& t_sub) {
  const LabelledTree host = to_labelled(t);
  ForestSum result;
  for (const Embedding& embedding : enumerate_embeddings(t_sub, t)) {
    std::vector<char> removed(host.size(), 0);
    for (int image : embedding.vertex_map) removed[image] = 1;
    result += ForestSum::of(induced_forest(host, removed));
  }
  return result;
}

bool AssignmentMatrix::operator<(const AssignmentMatrix& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  return cells_ < other.cells_;
}

std::string render_assignment(const AssignmentMatrix& matrix) {
  std::string out;
  for (int i = 0; i < matrix.rows(); ++i) {
    if (i > 0) out += "; ";
    for (int j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(matrix.at(i, j));
    }
  }
  return out;
}

std::vector<AssignmentMatrix> enumerate_assignments(const Tree& t_sub,
                                                    const Tree& t) {
  const auto& sub_children = t_sub.children();  // rows 1..n'
  const auto& t_children = t.children();        // columns 1..n
  const int n_prime = static_cast<int>(sub_children.size());
  const int n = static_cast<int>(t_children.size());

  std::vector<std::vector<char>> feasible(n_prime, std::vector<char>(n, 0));
  for (int i = 0; i < n_prime; ++i) {
    for (int j = 0; j < n; ++j) {
      feasible[i][j] = is_subtree(sub_children[i].subtree, t_children[j].subtree);
    }
  }

  std::vector<int> capacity(n);
  for (int j = 0; j < n; ++j) capacity[j] = t_children[j].multiplicity;

  AssignmentMatrix matrix(n_prime + 1, n);
  std::vector<AssignmentMatrix> result;

  auto fill_row = [&](auto&& self, int row, int j, int remaining) -> void {
    if (j == n) {
      if (remaining != 0) return;
      if (row == n_prime) {
        for (int col = 0; col < n; ++col) matrix.at(0, col) = capacity[col];
        result.push_back(matrix);
        return;
      }
      self(self, row + 1, 0, sub_children[row].multiplicity);
      return;
    }
    const int limit =
        feasible[row - 1][j] ? std::min(remaining, capacity[j]) : 0;
    for (int put = 0; put <= limit; ++put) {
      matrix.at(row, j) = put;
      capacity[j] -= put;
      self(self, row, j + 1, remaining - put);
      capacity[j] += put;
    }
    matrix.at(row, j) = 0;
  };

  if (n_prime == 0) {
    for (int col = 0; col < n; ++col) matrix.at(0, col) = capacity[col];
    result.push_back(matrix);
  } else {
    fill_row(fill_row, 1, 0, sub_children[0].multiplicity);
  }

  std::sort(result.begin(), result.end());
  return result;
}

namespace {

using PruneMemo = std::map<std::pair<Tree, Tree>, ForestSum>;

ForestSum prune_assign_rec(const Tree& t, const Tree& t_sub, PruneMemo& memo);

ForestSum assignment_term_rec(const AssignmentMatrix& matrix,
                              const Tree& t_sub, const Tree& t,
                              PruneMemo& memo) {
  const auto& sub_children = t_sub.children();
  const auto& t_children = t.children();
  const int n = static_cast<int>(t_children.size());

  // prod_j k_j! / prod_{i=0..n'} m_ij!  (exact per column)
  Int combinations = 1;
  for (int j = 0; j < n; ++j) {
    Int column = factorial(t_children[j].multiplicity);
    for (int i = 0; i < matrix.rows(); ++i) {
      column /= factorial(matrix.at(i, j));
    }
    combinations *= column;
  }

  ForestSum term = ForestSum::of(Forest(), Rational(combinations));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < matrix.rows(); ++i) {
      const int count = matrix.at(i, j);
      if (count == 0) continue;
      const ForestSum factor =
          i == 0 ? ForestSum::of(Forest::single(t_children[j].subtree))
                 : prune_assign_rec(t_children[j].subtree,
                                    sub_children[i - 1].subtree, memo);
      term = term * factor.pow(count);
    }
  }
  return term;
}

ForestSum prune_assign_rec(const Tree& t, const Tree& t_sub, PruneMemo& memo) {
  const auto key = std::make_pair(t, t_sub);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  ForestSum total;
  for (const AssignmentMatrix& matrix : enumerate_assignments(t_sub, t)) {
    total += assignment_term_rec(matrix, t_sub, t, memo);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

ForestSum assignment_term(const AssignmentMatrix& matrix, const Tree& t_sub,
                          const Tree& t) {
  if (matrix.rows() != static_cast<int>(t_sub.children().size()) + 1 ||
      matrix.cols() != static_cast<int>(t.children().size())) {
    throw DomainError("assignment_term: matrix shape does not match the pair");
  }
  PruneMemo memo;
  return assignment_term_rec(matrix, t_sub, t, memo);
}

ForestSum prune_by_assignments(const Tree& t, const Tree& t_sub) {
  PruneMemo memo;
  return prune_assign_rec(t, t_sub, memo);
}

ForestSum prune(const Tree& t, const Tree& t_sub) {
  return prune_by_assignments(t, t_sub);
}

}  // namespace bseries
