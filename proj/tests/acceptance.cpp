// Acceptance suite: every criterion is an exact rational identity (tolerance
// zero) with a wall-clock budget.  One PASS/FAIL line is printed per
// criterion; the process exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bseries/elementary.hpp"
#include "bseries/pruning.hpp"
#include "bseries/series.hpp"
#include "bseries/verify.hpp"

using namespace bseries;

namespace {

int g_checks_failed = 0;

void expect(bool condition, const std::string& what) {
  if (!condition) {
    ++g_checks_failed;
    std::printf("    check failed: %s\n", what.c_str());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream input(path, std::ios::binary);
  if (!input) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << input.rdbuf();
  return buffer.str();
}

PolynomialVectorField load_fixture_field(const std::string& name) {
  return PolynomialVectorField::from_json_text(
      read_file(std::string(FIXTURES_DIR) + "/" + name));
}

const std::vector<Rational> kY0Riccati{Rational(1)};
const std::vector<Rational> kY0Quadratic{Rational(1, 2), Rational(-1, 3)};

// --- AC1: the four pruning fixtures, both methods -------------------------

bool ac1_paper_pruning_fixtures() {
  struct Example {
    const char* t;
    const char* sub;
    const char* expected;
  };
  const Example examples[] = {
      {"[[.] .]", "[[.]]", "1*(.)"},
      {"[. .]", "[.]", "2*(.)"},
      {"[. [.] [.]]", "[. [.]]", "2*(. .) + 2*([.])"},
      {"[. [.] [. .]]", "[. [.]]", "3*(. . .) + 2*(. [.]) + 1*([. .])"},
  };
  for (const Example& example : examples) {
    const Tree t = parse_tree(example.t);
    const Tree sub = parse_tree(example.sub);
    expect(sub.symmetry() == 1, std::string("sigma(t') = 1 for ") + example.sub);
    expect(render_forest_sum(prune_by_assignments(t, sub)) == example.expected,
           std::string("assignment pruning of ") + example.t);
    expect(render_forest_sum(prune_by_embeddings(t, sub)) == example.expected,
           std::string("embedding pruning of ") + example.t);
  }
  return g_checks_failed == 0;
}

// --- AC2: the worked five-assignment example -------------------------------

bool ac2_assignment_example() {
  const Tree t = parse_tree("[. [.] [.] [.] [. .]]");
  const Tree sub = parse_tree("[. [.] [.]]");

  const auto matrices = enumerate_assignments(sub, t);
  expect(matrices.size() == 5, "exactly five assignments");

  const std::map<std::string, std::string> expected_terms{
      {"0 1 1; 1 0 0; 0 2 0", "3*([.] [. .])"},
      {"0 2 0; 1 0 0; 0 1 1", "6*(. [.] [.])"},
      {"1 0 1; 0 1 0; 0 2 0", "3*(. . [. .])"},
      {"1 1 0; 0 1 0; 0 1 1", "12*(. . . [.])"},
      {"1 1 0; 0 0 1; 0 2 0", "3*(. . . [.])"},
  };
  std::set<std::string> seen;
  for (const auto& matrix : matrices) {
    const std::string key = render_assignment(matrix);
    seen.insert(key);
    const auto it = expected_terms.find(key);
    if (it == expected_terms.end()) {
      expect(false, "unexpected assignment " + key);
      continue;
    }
    expect(render_forest_sum(assignment_term(matrix, sub, t)) == it->second,
           "pruning term of assignment " + key);
  }
  expect(seen.size() == expected_terms.size(), "all five assignments listed");
  expect(render_forest_sum(prune(t, sub)) ==
             "15*(. . . [.]) + 3*(. . [. .]) + 6*(. [.] [.]) + 3*([.] [. .])",
         "assignment terms sum to the worked total");
  return g_checks_failed == 0;
}

// --- AC3: semantics equivalence sweep over |t| <= 7 ------------------------

bool ac3_semantics_sweep() {
  for (const Tree& tree : enumerate_trees(7)) {
    expect(Int(enumerate_embeddings(tree, tree).size()) == tree.symmetry(),
           "self-embedding count equals sigma for " + render_tree(tree));
    for (const Tree& sub : enumerate_subtrees(tree)) {
      const ForestSum by_assignments = prune_by_assignments(tree, sub);
      const ForestSum by_embeddings = prune_by_embeddings(tree, sub);
      expect(by_embeddings ==
                 by_assignments.scaled(Rational(sub.symmetry())),
             "sigma scaling for (" + render_tree(sub) + ", " +
                 render_tree(tree) + ")");
      expect(!by_assignments.is_zero(),
             "nonzero pruning for a genuine subtree pair");
    }
  }
  return g_checks_failed == 0;
}

// --- AC4: the pruning identity (lemma1) -------------------------------------

bool ac4_lemma1() {
  const PolynomialVectorField riccati = load_fixture_field("riccati.json");
  const PolynomialVectorField quadratic = load_fixture_field("quadratic2d.json");
  const int order = 7;

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const BSeries a = BSeries::random(seed, order, true);
    for (const Tree& sub : enumerate_trees(4)) {
      expect(verify_lemma1(riccati, a, sub, kY0Riccati, order).equal,
             "lemma1 on d=1, seed " + std::to_string(seed) + ", t' = " +
                 render_tree(sub));
      expect(verify_lemma1(quadratic, a, sub, kY0Quadratic, order).equal,
             "lemma1 on d=2, seed " + std::to_string(seed) + ", t' = " +
                 render_tree(sub));
    }
  }

  // Diagnostic: the raw embedding count fails by the factor sigma(t') = 2.
  const Tree bush = parse_tree("[. .]");
  const BSeries a = BSeries::random(1, order, true);
  const VerifyReport report = verify_lemma1(riccati, a, bush, kY0Riccati,
                                            order, PruneSemantics::embedding);
  expect(!report.equal, "embedding semantics must not satisfy lemma1");
  expect(report.first_mismatch == 2, "mismatch at h^2");
  for (std::size_t i = 0; i < report.lhs.size(); ++i) {
    expect(report.rhs[i] == report.lhs[i] * 2,
           "mismatch factor exactly sigma(t') = 2");
  }
  return g_checks_failed == 0;
}

// --- AC5: the stump expansion identity (prop1) ------------------------------

bool ac5_prop1() {
  const PolynomialVectorField riccati = load_fixture_field("riccati.json");
  const PolynomialVectorField quadratic = load_fixture_field("quadratic2d.json");
  const int order = 6;

  const std::vector<std::vector<Rational>> vectors_d1{
      {Rational(1)}, {Rational(-1, 2)}};
  const std::vector<std::vector<Rational>> vectors_d2{
      {Rational(1), Rational(-1, 2)}, {Rational(2, 3), Rational(1)}};

  std::vector<BSeries> series;
  series.push_back(BSeries::exact_flow(order));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    series.push_back(BSeries::random(seed, order, true));
  }

  for (std::size_t i = 0; i < series.size(); ++i) {
    for (int n = 1; n <= 2; ++n) {
      const std::vector<std::vector<Rational>> v1(vectors_d1.begin(),
                                                  vectors_d1.begin() + n);
      const std::vector<std::vector<Rational>> v2(vectors_d2.begin(),
                                                  vectors_d2.begin() + n);
      expect(verify_prop1(riccati, series[i], n, v1, kY0Riccati, order).equal,
             "prop1 on d=1, series " + std::to_string(i) + ", n = " +
                 std::to_string(n));
      expect(verify_prop1(quadratic, series[i], n, v2, kY0Quadratic, order).equal,
             "prop1 on d=2, series " + std::to_string(i) + ", n = " +
                 std::to_string(n));
    }
  }
  return g_checks_failed == 0;
}

// --- AC6: the composition identity (theorem1) -------------------------------

bool ac6_theorem1() {
  const PolynomialVectorField riccati = load_fixture_field("riccati.json");
  const PolynomialVectorField quadratic = load_fixture_field("quadratic2d.json");
  const int order = 6;

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const BSeries a = BSeries::random(seed, order, true);
    const BSeries b = BSeries::random(seed + 10, order, false);
    expect(verify_composition(riccati, a, b, kY0Riccati, order).equal,
           "theorem1 on d=1, seed " + std::to_string(seed));
    expect(verify_composition(quadratic, a, b, kY0Quadratic, order).equal,
           "theorem1 on d=2, seed " + std::to_string(seed));
  }
  return g_checks_failed == 0;
}

// --- AC7: exact-flow closed forms -------------------------------------------

bool ac7_exact_flow_closed_forms() {
  const PolynomialVectorField riccati = load_fixture_field("riccati.json");

  const SeriesVector flow =
      evaluate_bseries(BSeries::exact_flow(10), riccati, kY0Riccati, 10);
  for (int k = 0; k <= 10; ++k) {
    expect(flow.at(k) == std::vector<Rational>{Rational(1)},
           "1/(1-h) coefficient at h^" + std::to_string(k));
  }

  const BSeries doubled =
      compose(BSeries::exact_flow(8), BSeries::exact_flow(8), 8);
  for (const Tree& tree : enumerate_trees(8)) {
    expect(doubled.coefficient(tree) ==
               Rational(Int(1) << tree.order(), tree.density()),
           "flow doubling at " + render_tree(tree));
  }

  const SeriesVector composed =
      evaluate_bseries(doubled.truncated(8), riccati, kY0Riccati, 8);
  for (int k = 0; k <= 8; ++k) {
    expect(composed.at(k) == std::vector<Rational>{Rational(Int(1) << k)},
           "1/(1-2h) coefficient at h^" + std::to_string(k));
  }
  return g_checks_failed == 0;
}

// --- AC8: group identities ---------------------------------------------------

bool ac8_group_identities() {
  const int order = 6;
  const BSeries e = BSeries::identity(order);
  const BSeries a = BSeries::random(1, order, true);
  const BSeries b = BSeries::random(2, order, true);
  const BSeries c = BSeries::random(3, order, false);

  expect(compose(e, c, order) == c, "left identity");
  expect(compose(a, e, order) == a, "right identity");
  expect(compose(compose(a, b, order), c, order) ==
             compose(a, compose(b, c, order), order),
         "associativity");
  return g_checks_failed == 0;
}

// --- AC9: enumeration ---------------------------------------------------------

bool ac9_enumeration() {
  const std::vector<long long> expected{0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719};

  // independent recurrence: a(n+1) = (1/n) sum_k (sum_{d|k} d a(d)) a(n-k+1)
  std::vector<long long> recurrence(11, 0);
  recurrence[1] = 1;
  for (int n = 1; n < 10; ++n) {
    long long total = 0;
    for (int k = 1; k <= n; ++k) {
      long long divisor_sum = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) divisor_sum += d * recurrence[d];
      }
      total += divisor_sum * recurrence[n - k + 1];
    }
    recurrence[n + 1] = total / n;
  }

  std::map<int, long long> counts;
  for (const Tree& tree : enumerate_trees(10)) ++counts[tree.order()];
  for (int n = 1; n <= 10; ++n) {
    expect(counts[n] == expected[n],
           "count at order " + std::to_string(n) + " matches the fixture");
    expect(counts[n] == recurrence[n],
           "count at order " + std::to_string(n) + " matches the recurrence");
  }

  // the display through order 4
  const std::vector<std::string> display{".",        "[.]",      "[. .]",
                                         "[[.]]",    "[. . .]",  "[. [.]]",
                                         "[[. .]]",  "[[[.]]]"};
  const auto small = enumerate_trees(4);
  expect(small.size() == display.size(), "eight trees through order 4");
  for (std::size_t i = 0; i < display.size() && i < small.size(); ++i) {
    expect(render_tree(small[i]) == display[i],
           "display position " + std::to_string(i));
  }
  return g_checks_failed == 0;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1 paper pruning fixtures (both methods)", 1.0, ac1_paper_pruning_fixtures},
      {"AC2 worked assignment example", 1.0, ac2_assignment_example},
      {"AC3 semantics equivalence sweep |t| <= 7", 60.0, ac3_semantics_sweep},
      {"AC4 pruning identity, all |t'| <= 4, N = 7", 120.0, ac4_lemma1},
      {"AC5 stump expansion identity, n in {1,2}, N = 6", 60.0, ac5_prop1},
      {"AC6 composition identity, random series, N = 6", 120.0, ac6_theorem1},
      {"AC7 exact-flow closed forms", 30.0, ac7_exact_flow_closed_forms},
      {"AC8 group identities, N = 6", 60.0, ac8_group_identities},
      {"AC9 enumeration counts through order 10", 10.0, ac9_enumeration},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    g_checks_failed = 0;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
      ok = false;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = elapsed < criterion.budget_seconds;
    if (!in_budget) {
      std::printf("    over budget: %.2fs of %.0fs allowed\n", elapsed,
                  criterion.budget_seconds);
    }
    const bool pass = ok && in_budget;
    std::printf("%s: %s (%.2fs)\n", criterion.name, pass ? "PASS" : "FAIL",
                elapsed);
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
