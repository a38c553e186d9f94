#include "bseries/elementary.hpp"

#include <algorithm>
#include <utility>

#include <nlohmann/json.hpp>

#include "bseries/errors.hpp"

namespace bseries {

namespace {

// Scalar truncated power series, coefficient vector of length max_order + 1.
using ScalarSeries = std::vector<Rational>;

ScalarSeries scalar_constant(const Rational& value, int max_order) {
  ScalarSeries series(max_order + 1, Rational(0));
  series[0] = value;
  return series;
}

ScalarSeries scalar_mul(const ScalarSeries& a, const ScalarSeries& b) {
  ScalarSeries out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

SeriesVector::SeriesVector(int dimension, int max_order)
    : dimension_(dimension),
      max_order_(max_order),
      coefficients_(max_order + 1, std::vector<Rational>(dimension, Rational(0))) {
  if (dimension < 1 || max_order < 0) {
    throw DimensionError("SeriesVector: dimension must be >= 1 and max_order >= 0");
  }
}

SeriesVector SeriesVector::constant(const std::vector<Rational>& value,
                                    int max_order) {
  SeriesVector out(static_cast<int>(value.size()), max_order);
  out.coefficients_[0] = value;
  return out;
}

const std::vector<Rational>& SeriesVector::at(int order) const {
  return coefficients_.at(order);
}

void SeriesVector::accumulate(int order, const std::vector<Rational>& value,
                              const Rational& scale) {
  if (static_cast<int>(value.size()) != dimension_) {
    throw DimensionError("SeriesVector::accumulate: dimension mismatch");
  }
  if (order > max_order_) return;
  for (int i = 0; i < dimension_; ++i) {
    coefficients_[order][i] += scale * value[i];
  }
}

SeriesVector SeriesVector::operator+(const SeriesVector& other) const {
  if (dimension_ != other.dimension_ || max_order_ != other.max_order_) {
    throw DimensionError("SeriesVector: shape mismatch in addition");
  }
  SeriesVector out = *this;
  for (int k = 0; k <= max_order_; ++k) {
    for (int i = 0; i < dimension_; ++i) {
      out.coefficients_[k][i] += other.coefficients_[k][i];
    }
  }
  return out;
}

SeriesVector SeriesVector::operator-(const SeriesVector& other) const {
  return *this + other.scaled(-1);
}

SeriesVector SeriesVector::scaled(const Rational& factor) const {
  SeriesVector out = *this;
  for (auto& row : out.coefficients_) {
    for (auto& value : row) value *= factor;
  }
  return out;
}

SeriesVector SeriesVector::shifted(int by) const {
  SeriesVector out(dimension_, max_order_);
  for (int k = 0; k + by <= max_order_; ++k) {
    out.coefficients_[k + by] = coefficients_[k];
  }
  return out;
}

SeriesVector SeriesVector::truncated(int max_order) const {
  if (max_order > max_order_) {
    throw TruncationError("SeriesVector: cannot extend the truncation");
  }
  SeriesVector out(dimension_, max_order);
  for (int k = 0; k <= max_order; ++k) out.coefficients_[k] = coefficients_[k];
  return out;
}

bool SeriesVector::operator==(const SeriesVector& other) const {
  return dimension_ == other.dimension_ && max_order_ == other.max_order_ &&
         coefficients_ == other.coefficients_;
}

PolynomialVectorField::PolynomialVectorField(int dimension,
                                             std::vector<Component> components)
    : dimension_(dimension), components_(std::move(components)) {
  if (dimension < 1) {
    throw DimensionError("PolynomialVectorField: dimension must be >= 1");
  }
  if (static_cast<int>(components_.size()) != dimension) {
    throw DimensionError("PolynomialVectorField: need one polynomial per component");
  }
  for (const auto& component : components_) {
    for (const auto& [monomial, coefficient] : component) {
      if (static_cast<int>(monomial.size()) != dimension) {
        throw DimensionError("PolynomialVectorField: exponent vector length mismatch");
      }
      for (int e : monomial) {
        if (e < 0) throw DimensionError("PolynomialVectorField: negative exponent");
      }
    }
  }
}

int PolynomialVectorField::max_total_degree() const {
  int degree = 0;
  for (const auto& component : components_) {
    for (const auto& [monomial, coefficient] : component) {
      int total = 0;
      for (int e : monomial) total += e;
      degree = std::max(degree, total);
    }
  }
  return degree;
}

PolynomialVectorField PolynomialVectorField::from_json_text(
    const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("vector-field file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") ||
      !doc.contains("components")) {
    throw FormatError("vector-field file: expected object with dimension, components");
  }
  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<int>() < 1) {
    throw FormatError("vector-field file: dimension must be a positive integer");
  }
  const int dimension = doc["dimension"].get<int>();
  if (!doc["components"].is_array() ||
      static_cast<int>(doc["components"].size()) != dimension) {
    throw FormatError("vector-field file: components must be an array of length dimension");
  }

  std::vector<Component> components;
  for (const auto& entry_list : doc["components"]) {
    if (!entry_list.is_array()) {
      throw FormatError("vector-field file: each component must be an array of terms");
    }
    Component component;
    for (const auto& term : entry_list) {
      if (!term.is_object() || !term.contains("coeff") ||
          !term.contains("exponents") || !term["coeff"].is_string() ||
          !term["exponents"].is_array()) {
        throw FormatError("vector-field file: term must be {\"coeff\": \"p/q\", \"exponents\": [..]}");
      }
      Monomial monomial;
      for (const auto& e : term["exponents"]) {
        if (!e.is_number_integer() || e.get<int>() < 0) {
          throw FormatError("vector-field file: exponents must be nonnegative integers");
        }
        monomial.push_back(e.get<int>());
      }
      if (static_cast<int>(monomial.size()) != dimension) {
        throw FormatError("vector-field file: exponent vector length must equal dimension");
      }
      const Rational coefficient = parse_rational(term["coeff"].get<std::string>());
      if (!component.emplace(std::move(monomial), coefficient).second) {
        throw FormatError("vector-field file: duplicate exponent vector in a component");
      }
    }
    components.push_back(std::move(component));
  }
  return PolynomialVectorField(dimension, std::move(components));
}

std::string PolynomialVectorField::to_json_text() const {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& component : components_) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [monomial, coefficient] : component) {
      terms.push_back({{"coeff", to_string(coefficient)},
                       {"exponents", monomial}});
    }
    components.push_back(std::move(terms));
  }
  nlohmann::json doc{{"dimension", dimension_},
                     {"components", std::move(components)}};
  return doc.dump(2);
}

namespace {

// Walks all index tuples (j_1..j_m) in [0,d)^m.
class IndexTuples {
 public:
  IndexTuples(int count, int base) : tuple_(count, 0), base_(base), done_(base == 0 && count > 0) {}

  bool done() const { return done_; }
  const std::vector<int>& get() const { return tuple_; }

  void advance() {
    for (std::size_t k = 0; k < tuple_.size(); ++k) {
      if (++tuple_[k] < base_) return;
      tuple_[k] = 0;
    }
    done_ = true;
  }

 private:
  std::vector<int> tuple_;
  int base_;
  bool done_;
};

// The monomial derived by the index tuple: repeated d/dy_j applications.
// Returns false when the derivative vanishes.
bool derive_monomial(const PolynomialVectorField::Monomial& exponents,
                     const std::vector<int>& by, Int& factor,
                     PolynomialVectorField::Monomial& out) {
  out = exponents;
  factor = 1;
  for (int j : by) {
    if (out[j] == 0) return false;
    factor *= out[j];
    --out[j];
  }
  return true;
}

}  // namespace

std::vector<Rational> PolynomialVectorField::apply_derivative(
    const std::vector<Rational>& point,
    const std::vector<std::vector<Rational>>& args) const {
  if (static_cast<int>(point.size()) != dimension_) {
    throw DimensionError("apply_derivative: point dimension mismatch");
  }
  for (const auto& arg : args) {
    if (static_cast<int>(arg.size()) != dimension_) {
      throw DimensionError("apply_derivative: argument dimension mismatch");
    }
  }
  const int m = static_cast<int>(args.size());

  // Powers of the point components up to the field degree.
  const int degree = max_total_degree();
  std::vector<std::vector<Rational>> powers(dimension_);
  for (int i = 0; i < dimension_; ++i) {
    powers[i].resize(degree + 1);
    powers[i][0] = 1;
    for (int p = 1; p <= degree; ++p) powers[i][p] = powers[i][p - 1] * point[i];
  }

  std::vector<Rational> result(dimension_, Rational(0));
  Monomial derived;
  Int factor;
  for (IndexTuples tuples(m, dimension_); !tuples.done(); tuples.advance()) {
    const std::vector<int>& idx = tuples.get();
    Rational arg_product = 1;
    for (int l = 0; l < m; ++l) arg_product *= args[l][idx[l]];
    if (arg_product == 0) continue;
    for (int c = 0; c < dimension_; ++c) {
      for (const auto& [exponents, coefficient] : components_[c]) {
        if (!derive_monomial(exponents, idx, factor, derived)) continue;
        Rational value = coefficient * Rational(factor);
        for (int i = 0; i < dimension_; ++i) {
          if (derived[i] > 0) value *= powers[i][derived[i]];
        }
        result[c] += value * arg_product;
      }
    }
  }
  return result;
}

SeriesVector PolynomialVectorField::apply_derivative(
    const SeriesVector& point, const std::vector<SeriesVector>& args) const {
  if (point.dimension() != dimension_) {
    throw DimensionError("apply_derivative: point dimension mismatch");
  }
  const int max_order = point.max_order();
  for (const auto& arg : args) {
    if (arg.dimension() != dimension_ || arg.max_order() != max_order) {
      throw DimensionError("apply_derivative: argument shape mismatch");
    }
  }
  const int m = static_cast<int>(args.size());

  // Component series of the point and their powers up to the field degree.
  auto component_series = [max_order](const SeriesVector& v, int i) {
    ScalarSeries s(max_order + 1);
    for (int k = 0; k <= max_order; ++k) s[k] = v.at(k)[i];
    return s;
  };
  const int degree = max_total_degree();
  std::vector<std::vector<ScalarSeries>> powers(dimension_);
  for (int i = 0; i < dimension_; ++i) {
    powers[i].resize(degree + 1);
    powers[i][0] = scalar_constant(1, max_order);
    if (degree >= 1) powers[i][1] = component_series(point, i);
    for (int p = 2; p <= degree; ++p) {
      powers[i][p] = scalar_mul(powers[i][p - 1], powers[i][1]);
    }
  }
  std::vector<std::vector<ScalarSeries>> arg_series(m);
  for (int l = 0; l < m; ++l) {
    arg_series[l].reserve(dimension_);
    for (int i = 0; i < dimension_; ++i) {
      arg_series[l].push_back(component_series(args[l], i));
    }
  }

  std::vector<ScalarSeries> result(dimension_,
                                   ScalarSeries(max_order + 1, Rational(0)));
  Monomial derived;
  Int factor;
  for (IndexTuples tuples(m, dimension_); !tuples.done(); tuples.advance()) {
    const std::vector<int>& idx = tuples.get();
    ScalarSeries arg_product = scalar_constant(1, max_order);
    for (int l = 0; l < m; ++l) {
      arg_product = scalar_mul(arg_product, arg_series[l][idx[l]]);
    }
    for (int c = 0; c < dimension_; ++c) {
      ScalarSeries partial(max_order + 1, Rational(0));
      bool any = false;
      for (const auto& [exponents, coefficient] : components_[c]) {
        if (!derive_monomial(exponents, idx, factor, derived)) continue;
        ScalarSeries value = scalar_constant(coefficient * Rational(factor), max_order);
        for (int i = 0; i < dimension_; ++i) {
          if (derived[i] > 0) value = scalar_mul(value, powers[i][derived[i]]);
        }
        for (int k = 0; k <= max_order; ++k) partial[k] += value[k];
        any = true;
      }
      if (!any) continue;
      const ScalarSeries contribution = scalar_mul(partial, arg_product);
      for (int k = 0; k <= max_order; ++k) result[c][k] += contribution[k];
    }
  }

  SeriesVector out(dimension_, max_order);
  for (int k = 0; k <= max_order; ++k) {
    std::vector<Rational> row(dimension_);
    for (int c = 0; c < dimension_; ++c) row[c] = result[c][k];
    out.accumulate(k, row);
  }
  return out;
}

Tree Stump::apply(const std::vector<Tree>& args) const {
  if (static_cast<int>(args.size()) != blanks) {
    throw DimensionError("Stump::apply: expected exactly `blanks` trees");
  }
  std::vector<Tree> children;
  for (const auto& child : base.children()) {
    for (int rep = 0; rep < child.multiplicity; ++rep) {
      children.push_back(child.subtree);
    }
  }
  children.insert(children.end(), args.begin(), args.end());
  return Tree::make_node(std::move(children));
}

std::vector<Rational> elementary_differential(const PolynomialVectorField& f,
                                              const Tree& tree,
                                              const std::vector<Rational>& y0) {
  std::vector<std::vector<Rational>> args;
  for (const auto& child : tree.children()) {
    const std::vector<Rational> branch = elementary_differential(f, child.subtree, y0);
    for (int rep = 0; rep < child.multiplicity; ++rep) args.push_back(branch);
  }
  return f.apply_derivative(y0, args);
}

SeriesVector elementary_differential_at_series(const PolynomialVectorField& f,
                                               const Tree& tree,
                                               const SeriesVector& point) {
  std::vector<SeriesVector> args;
  for (const auto& child : tree.children()) {
    const SeriesVector branch = elementary_differential_at_series(f, child.subtree, point);
    for (int rep = 0; rep < child.multiplicity; ++rep) args.push_back(branch);
  }
  return f.apply_derivative(point, args);
}

std::vector<Rational> stump_differential(
    const PolynomialVectorField& f, const Stump& stump,
    const std::vector<std::vector<Rational>>& args,
    const std::vector<Rational>& at) {
  if (static_cast<int>(args.size()) != stump.blanks) {
    throw DimensionError("stump_differential: argument count must equal blanks");
  }
  std::vector<std::vector<Rational>> all_args;
  for (const auto& child : stump.base.children()) {
    const std::vector<Rational> branch = elementary_differential(f, child.subtree, at);
    for (int rep = 0; rep < child.multiplicity; ++rep) all_args.push_back(branch);
  }
  all_args.insert(all_args.end(), args.begin(), args.end());
  return f.apply_derivative(at, all_args);
}

SeriesVector stump_differential(const PolynomialVectorField& f,
                                const Stump& stump,
                                const std::vector<SeriesVector>& args,
                                const SeriesVector& at) {
  if (static_cast<int>(args.size()) != stump.blanks) {
    throw DimensionError("stump_differential: argument count must equal blanks");
  }
  std::vector<SeriesVector> all_args;
  for (const auto& child : stump.base.children()) {
    const SeriesVector branch = elementary_differential_at_series(f, child.subtree, at);
    for (int rep = 0; rep < child.multiplicity; ++rep) all_args.push_back(branch);
  }
  all_args.insert(all_args.end(), args.begin(), args.end());
  return f.apply_derivative(at, all_args);
}

SeriesVector evaluate_bseries(const BSeries& a, const PolynomialVectorField& f,
                              const std::vector<Rational>& y0, int max_order) {
  if (a.max_order() < max_order) {
    throw TruncationError("evaluate_bseries: series truncated below the requested order");
  }
  if (static_cast<int>(y0.size()) != f.dimension()) {
    throw DimensionError("evaluate_bseries: y0 dimension mismatch");
  }
  SeriesVector out(f.dimension(), max_order);
  out.accumulate(0, y0, a.empty_coefficient());
  if (max_order < 1) return out;

  // Children precede their parents in canonical order, so a single pass can
  // reuse memoized branch differentials.
  std::map<Tree, std::vector<Rational>> memo;
  for (const Tree& tree : enumerate_trees(max_order)) {
    std::vector<std::vector<Rational>> args;
    for (const auto& child : tree.children()) {
      const auto& branch = memo.at(child.subtree);
      for (int rep = 0; rep < child.multiplicity; ++rep) args.push_back(branch);
    }
    auto value = f.apply_derivative(y0, args);
    out.accumulate(tree.order(), value,
                   a.coefficient(tree) / Rational(tree.symmetry()));
    memo.emplace(tree, std::move(value));
  }
  return out;
}

SeriesVector evaluate_bseries_at_series(const BSeries& b,
                                        const PolynomialVectorField& f,
                                        const SeriesVector& point,
                                        int max_order) {
  if (b.max_order() < max_order) {
    throw TruncationError("evaluate_bseries_at_series: series truncated below the requested order");
  }
  if (point.dimension() != f.dimension()) {
    throw DimensionError("evaluate_bseries_at_series: point dimension mismatch");
  }
  const SeriesVector base = point.max_order() == max_order
                                ? point
                                : point.truncated(max_order);
  SeriesVector out = base.scaled(b.empty_coefficient());
  if (max_order < 1) return out;

  std::map<Tree, SeriesVector> memo;
  for (const Tree& tree : enumerate_trees(max_order)) {
    std::vector<SeriesVector> args;
    for (const auto& child : tree.children()) {
      const auto& branch = memo.at(child.subtree);
      for (int rep = 0; rep < child.multiplicity; ++rep) args.push_back(branch);
    }
    SeriesVector value = f.apply_derivative(base, args);
    out = out + value.shifted(tree.order())
                    .scaled(b.coefficient(tree) / Rational(tree.symmetry()));
    memo.emplace(tree, std::move(value));
  }
  return out;
}

}  // namespace bseries
