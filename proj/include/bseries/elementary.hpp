#pragma once

#include <map>
#include <string>
#include <vector>

#include "bseries/rational.hpp"
#include "bseries/series.hpp"
#include "bseries/tree.hpp"

namespace bseries {

// Truncated vector power series in the step size h: sum_k c_k h^k with exact
// rational coefficient vectors c_0..c_N.
class SeriesVector {
 public:
  SeriesVector(int dimension, int max_order);

  static SeriesVector constant(const std::vector<Rational>& value,
                               int max_order);

  int dimension() const { return dimension_; }
  int max_order() const { return max_order_; }

  const std::vector<Rational>& at(int order) const;

  // coefficients[order] += scale * value
  void accumulate(int order, const std::vector<Rational>& value,
                  const Rational& scale = 1);

  SeriesVector operator+(const SeriesVector& other) const;
  SeriesVector operator-(const SeriesVector& other) const;
  SeriesVector scaled(const Rational& factor) const;

  // Multiplication by h^by; top coefficients fall off the truncation.
  SeriesVector shifted(int by) const;

  SeriesVector truncated(int max_order) const;

  bool operator==(const SeriesVector& other) const;
  bool operator!=(const SeriesVector& other) const { return !(*this == other); }

 private:
  int dimension_;
  int max_order_;
  std::vector<std::vector<Rational>> coefficients_;  // [order][component]
};

// Polynomial vector field with exact rational coefficients; every Frechet
// derivative is finite and computed symbolically from the exponent vectors.
class PolynomialVectorField {
 public:
  using Monomial = std::vector<int>;  // exponents, length == dimension
  using Component = std::map<Monomial, Rational>;

  PolynomialVectorField(int dimension, std::vector<Component> components);

  // JSON object { "dimension": d, "components": [ [ {"coeff": "p/q",
  // "exponents": [e1,...,ed]}, ... ], ... ] }.
  static PolynomialVectorField from_json_text(const std::string& text);
  std::string to_json_text() const;

  int dimension() const { return dimension_; }
  const std::vector<Component>& components() const { return components_; }
  int max_total_degree() const;

  // Symmetric m-linear Frechet derivative at `point`, contracted with the m
  // arguments; m == 0 is plain evaluation.
  std::vector<Rational> apply_derivative(
      const std::vector<Rational>& point,
      const std::vector<std::vector<Rational>>& args) const;
  SeriesVector apply_derivative(const SeriesVector& point,
                                const std::vector<SeriesVector>& args) const;

 private:
  int dimension_;
  std::vector<Component> components_;
};

// Tree with `blanks` extra edges at the root, each awaiting an argument.
struct Stump {
  Tree base;
  int blanks = 0;

  // Grafts the given trees onto the blanks: [t1...tm s1...sn].
  Tree apply(const std::vector<Tree>& args) const;
};

// F(t): F(leaf) = f(y0), F([t1...tm]) = f^(m)(y0)[F(t1),...,F(tm)].
std::vector<Rational> elementary_differential(const PolynomialVectorField& f,
                                              const Tree& tree,
                                              const std::vector<Rational>& y0);

// Same recursion with every evaluation at the series point.
SeriesVector elementary_differential_at_series(const PolynomialVectorField& f,
                                               const Tree& tree,
                                               const SeriesVector& point);

// F(t *^n): the derivative of order m+n contracted with the m branch
// differentials (evaluated at `at`) and the n supplied arguments.
std::vector<Rational> stump_differential(
    const PolynomialVectorField& f, const Stump& stump,
    const std::vector<std::vector<Rational>>& args,
    const std::vector<Rational>& at);
SeriesVector stump_differential(const PolynomialVectorField& f,
                                const Stump& stump,
                                const std::vector<SeriesVector>& args,
                                const SeriesVector& at);

// (B_h y0) a = a(empty) y0 + sum over trees h^|t| a(t)/sigma(t) F(t)(y0),
// truncated at max_order.
SeriesVector evaluate_bseries(const BSeries& a, const PolynomialVectorField& f,
                              const std::vector<Rational>& y0, int max_order);

// Same sum with the elementary differentials taken at a series point.
SeriesVector evaluate_bseries_at_series(const BSeries& b,
                                        const PolynomialVectorField& f,
                                        const SeriesVector& point,
                                        int max_order);

}  // namespace bseries
