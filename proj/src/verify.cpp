#include "bseries/verify.hpp"

#include <map>

#include "bseries/errors.hpp"

namespace bseries {

namespace {

void require_class_b(const BSeries& a) {
  if (!a.in_class_b()) {
    throw DomainError("verification requires a series with empty coefficient 1");
  }
}

}  // namespace

VerifyReport compare_series(const SeriesVector& lhs, const SeriesVector& rhs,
                            int from_order) {
  if (lhs.dimension() != rhs.dimension() ||
      lhs.max_order() != rhs.max_order()) {
    throw DimensionError("compare_series: shape mismatch");
  }
  for (int k = from_order; k <= lhs.max_order(); ++k) {
    if (lhs.at(k) != rhs.at(k)) {
      return VerifyReport{false, k, lhs.at(k), rhs.at(k)};
    }
  }
  return VerifyReport{};
}

SeriesVector prop1_lhs(const PolynomialVectorField& f, const BSeries& a,
                       const std::vector<std::vector<Rational>>& vectors,
                       const std::vector<Rational>& y0, int max_order) {
  const SeriesVector point = evaluate_bseries(a, f, y0, max_order);
  std::vector<SeriesVector> args;
  args.reserve(vectors.size());
  for (const auto& vector : vectors) {
    args.push_back(SeriesVector::constant(vector, max_order));
  }
  return f.apply_derivative(point, args);
}

SeriesVector prop1_rhs(const PolynomialVectorField& f, const BSeries& a,
                       const std::vector<std::vector<Rational>>& vectors,
                       const std::vector<Rational>& y0, int max_order) {
  SeriesVector out(f.dimension(), max_order);
  // Forests of order <= N correspond bijectively to their grafts, the trees
  // of order <= N + 1.
  for (const Tree& grafted : enumerate_trees(max_order + 1)) {
    const int forest_order = grafted.order() - 1;
    const Rational weight =
        a.derivative_coefficient(grafted) / Rational(grafted.symmetry());
    if (weight == 0) continue;
    const std::vector<Rational> value =
        stump_differential(f, Stump{grafted, static_cast<int>(vectors.size())},
                           vectors, y0);
    out.accumulate(forest_order, value, weight);
  }
  return out;
}

VerifyReport verify_prop1(const PolynomialVectorField& f, const BSeries& a,
                          int n,
                          const std::vector<std::vector<Rational>>& vectors,
                          const std::vector<Rational>& y0, int max_order) {
  require_class_b(a);
  if (static_cast<int>(vectors.size()) != n) {
    throw DimensionError("verify_prop1: need exactly n test vectors");
  }
  return compare_series(prop1_lhs(f, a, vectors, y0, max_order),
                        prop1_rhs(f, a, vectors, y0, max_order));
}

SeriesVector lemma1_lhs(const PolynomialVectorField& f, const BSeries& a,
                        const Tree& t_sub, const std::vector<Rational>& y0,
                        int max_order) {
  const SeriesVector point = evaluate_bseries(a, f, y0, max_order);
  const SeriesVector differential =
      elementary_differential_at_series(f, t_sub, point);
  return differential.shifted(t_sub.order())
      .scaled(Rational(Int(1), t_sub.symmetry()));
}

SeriesVector lemma1_rhs(const PolynomialVectorField& f, const BSeries& a,
                        const Tree& t_sub, const std::vector<Rational>& y0,
                        int max_order, PruneSemantics semantics) {
  SeriesVector out(f.dimension(), max_order);
  std::map<Tree, std::vector<Rational>> memo;
  for (const Tree& tree : enumerate_trees(max_order)) {
    std::vector<std::vector<Rational>> args;
    for (const auto& child : tree.children()) {
      const auto& branch = memo.at(child.subtree);
      for (int rep = 0; rep < child.multiplicity; ++rep) args.push_back(branch);
    }
    std::vector<Rational> value = f.apply_derivative(y0, args);
    if (is_subtree(t_sub, tree)) {
      const ForestSum pruned = semantics == PruneSemantics::embedding
                                   ? prune_by_embeddings(tree, t_sub)
                                   : prune(tree, t_sub);
      out.accumulate(tree.order(), value,
                     a.eval(pruned) / Rational(tree.symmetry()));
    }
    memo.emplace(tree, std::move(value));
  }
  return out;
}

VerifyReport verify_lemma1(const PolynomialVectorField& f, const BSeries& a,
                           const Tree& t_sub, const std::vector<Rational>& y0,
                           int max_order, PruneSemantics semantics) {
  require_class_b(a);
  if (t_sub.order() > max_order) {
    throw TruncationError("verify_lemma1: |t'| must be <= max_order");
  }
  return compare_series(lemma1_lhs(f, a, t_sub, y0, max_order),
                        lemma1_rhs(f, a, t_sub, y0, max_order, semantics),
                        t_sub.order());
}

VerifyReport verify_composition(const PolynomialVectorField& f,
                                const BSeries& a, const BSeries& b,
                                const std::vector<Rational>& y0,
                                int max_order) {
  require_class_b(a);
  const SeriesVector point = evaluate_bseries(a, f, y0, max_order);
  const SeriesVector lhs = evaluate_bseries_at_series(b, f, point, max_order);
  const BSeries product = compose(a, b, max_order);
  const SeriesVector rhs = evaluate_bseries(product, f, y0, max_order);
  return compare_series(lhs, rhs);
}

}  // namespace bseries
