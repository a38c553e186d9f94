#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bseries/errors.hpp"
#include "bseries/pruning.hpp"
#include "bseries/series.hpp"
#include "test_support.hpp"

using namespace bseries;

TEST_CASE("factory series have the documented coefficients") {
  const BSeries e = BSeries::identity(3);
  CHECK(e.empty_coefficient() == 1);
  for (const Tree& tree : enumerate_trees(3)) CHECK(e.coefficient(tree) == 0);

  const BSeries flow = BSeries::exact_flow(3);
  CHECK(flow.empty_coefficient() == 1);
  CHECK(flow.coefficient(Tree::leaf()) == 1);
  CHECK(flow.coefficient(parse_tree("[.]")) == Rational(1, 2));
  CHECK(flow.coefficient(parse_tree("[. .]")) == Rational(1, 3));
  CHECK(flow.coefficient(parse_tree("[[.]]")) == Rational(1, 6));
}

TEST_CASE("random series are deterministic and bounded") {
  const BSeries a = BSeries::random(42, 5, true);
  const BSeries b = BSeries::random(42, 5, true);
  CHECK(a == b);
  CHECK(a.in_class_b());

  const BSeries c = BSeries::random(42, 5, false);
  CHECK(c != a);

  for (const Tree& tree : enumerate_trees(5)) {
    const Rational& value = a.coefficient(tree);
    CHECK(abs(numerator(value)) <= 9);
    CHECK(denominator(value) <= 9);
  }
}

TEST_CASE("coefficient access respects the truncation") {
  const BSeries a = BSeries::random(1, 2, true);
  CHECK_NOTHROW(a.coefficient(parse_tree("[.]")));
  CHECK_THROWS_AS(a.coefficient(parse_tree("[[.]]")), TruncationError);
  // (aD) needs only the children, so one order beyond the truncation works
  CHECK_NOTHROW(a.derivative_coefficient(parse_tree("[[.] .]")));
  CHECK_THROWS_AS(a.derivative_coefficient(parse_tree("[[[.]]]")), TruncationError);
}

TEST_CASE("derivative coefficient (aD)") {
  const BSeries a = BSeries::random(7, 4, true);
  CHECK(a.derivative_coefficient(std::nullopt) == 0);
  CHECK(a.derivative_coefficient(Tree::leaf()) == 1);
  const Rational tau = a.coefficient(Tree::leaf());
  CHECK(a.derivative_coefficient(parse_tree("[. .]")) == tau * tau);
  CHECK(a.derivative_coefficient(parse_tree("[. [.]]")) ==
        tau * a.coefficient(parse_tree("[.]")));
}

TEST_CASE("homomorphic evaluation on forest sums") {
  const BSeries a = BSeries::random(3, 4, true);
  const Rational at = a.coefficient(Tree::leaf());
  const Rational ab = a.coefficient(parse_tree("[.]"));
  const Rational abb = a.coefficient(parse_tree("[. .]"));

  CHECK(a.eval(Forest()) == 1);
  CHECK(a.eval(Forest::of({Tree::leaf(), Tree::leaf()})) == at * at);

  // a([..] + 2 . [.] + 3 .^3) = a([..]) + 2 a(.) a([.]) + 3 a(.)^3
  ForestSum sum = ForestSum::of(Forest::single(parse_tree("[. .]")));
  sum += ForestSum::of(Forest::of({Tree::leaf(), parse_tree("[.]")}), 2);
  sum += ForestSum::of(Forest::of({Tree::leaf(), Tree::leaf(), Tree::leaf()}), 3);
  CHECK(a.eval(sum) == abb + 2 * at * ab + 3 * at * at * at);
}

TEST_CASE("composition identities") {
  const int order = 5;
  const BSeries e = BSeries::identity(order);
  const BSeries a = BSeries::random(1, order, true);
  const BSeries b = BSeries::random(2, order, false);

  CHECK(compose(a, e, order) == a);
  CHECK(compose(e, b, order) == b);

  const BSeries c = BSeries::random(3, order, true);
  CHECK(compose(compose(a, c, order), b, order) ==
        compose(a, compose(c, b, order), order));
}

TEST_CASE("composition against the flow-doubling closed form") {
  const int order = 6;
  const BSeries flow = BSeries::exact_flow(order);
  const BSeries doubled = compose(flow, flow, order);
  CHECK(doubled.empty_coefficient() == 1);
  CHECK(doubled.coefficient(parse_tree("[. .]")) == Rational(8, 3));
  for (const Tree& tree : enumerate_trees(order)) {
    const Rational expected =
        Rational(Int(1) << tree.order(), tree.density());
    CHECK(doubled.coefficient(tree) == expected);
  }
}

TEST_CASE("composition truncation consistency") {
  const BSeries a = BSeries::random(4, 6, true);
  const BSeries b = BSeries::random(5, 6, false);
  CHECK(compose(a, b, 6).truncated(5) == compose(a, b, 5));
}

TEST_CASE("composition preconditions") {
  const BSeries not_b = BSeries::random(6, 4, false);
  const BSeries b = BSeries::random(7, 4, true);
  CHECK_FALSE(not_b.in_class_b());
  CHECK_THROWS_AS(compose(not_b, b, 4), DomainError);
  CHECK_THROWS_AS(compose(b, b, 5), TruncationError);
}

TEST_CASE("JSON round trip and format validation") {
  const BSeries a = BSeries::random(9, 4, false);
  const BSeries back = BSeries::from_json_text(a.to_json_text());
  CHECK(back == a);

  CHECK_THROWS_AS(BSeries::from_json_text("not json"), FormatError);
  CHECK_THROWS_AS(BSeries::from_json_text("{}"), FormatError);
  CHECK_THROWS_AS(BSeries::from_json_text(
                      R"({"max_order": 1, "empty": "1", "trees": {}})"),
                  FormatError);
  CHECK_THROWS_AS(BSeries::from_json_text(
                      R"({"max_order": 1, "empty": "1", "trees": {".": "1/0"}})"),
                  FormatError);
  CHECK_THROWS_AS(
      BSeries::from_json_text(
          R"({"max_order": 1, "empty": "1", "trees": {".": "1", "[.]": "1"}})"),
      FormatError);
  CHECK_NOTHROW(BSeries::from_json_text(
      R"({"max_order": 1, "empty": "-2/3", "trees": {".": "7/9"}})"));
}

TEST_CASE("rational text forms") {
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("1/-2"), FormatError);
  CHECK_THROWS_AS(parse_rational(""), FormatError);
  CHECK_THROWS_AS(parse_rational("a"), FormatError);
}
