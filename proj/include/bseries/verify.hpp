#pragma once

#include <vector>

#include "bseries/elementary.hpp"
#include "bseries/pruning.hpp"

namespace bseries {

// Result of an exact coefficientwise comparison of two h-series.  On a
// mismatch the report carries the first differing h-order together with both
// coefficient vectors at that order.
struct VerifyReport {
  bool equal = true;
  int first_mismatch = -1;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
};

VerifyReport compare_series(const SeriesVector& lhs, const SeriesVector& rhs,
                            int from_order = 0);

enum class PruneSemantics {
  assignment,  // canonical: one term per vertex subset
  embedding,   // raw map count: sigma(t') times the canonical result
};

// f^(n) at the B-series point, contracted with the n test vectors, versus
// the stump-differential sum over forests.  Both sides exact through
// max_order; n is the number of vectors supplied.
SeriesVector prop1_lhs(const PolynomialVectorField& f, const BSeries& a,
                       const std::vector<std::vector<Rational>>& vectors,
                       const std::vector<Rational>& y0, int max_order);
SeriesVector prop1_rhs(const PolynomialVectorField& f, const BSeries& a,
                       const std::vector<std::vector<Rational>>& vectors,
                       const std::vector<Rational>& y0, int max_order);
VerifyReport verify_prop1(const PolynomialVectorField& f, const BSeries& a,
                          int n,
                          const std::vector<std::vector<Rational>>& vectors,
                          const std::vector<Rational>& y0, int max_order);

// h^|t'|/sigma(t') F(t') at the B-series point, versus the sum over
// supertrees t of h^|t|/sigma(t) a(t \ t') F(t)(y0).  The comparison window
// starts at |t'|; both sides vanish identically below it.
SeriesVector lemma1_lhs(const PolynomialVectorField& f, const BSeries& a,
                        const Tree& t_sub, const std::vector<Rational>& y0,
                        int max_order);
SeriesVector lemma1_rhs(const PolynomialVectorField& f, const BSeries& a,
                        const Tree& t_sub, const std::vector<Rational>& y0,
                        int max_order,
                        PruneSemantics semantics = PruneSemantics::assignment);
VerifyReport verify_lemma1(const PolynomialVectorField& f, const BSeries& a,
                           const Tree& t_sub, const std::vector<Rational>& y0,
                           int max_order,
                           PruneSemantics semantics = PruneSemantics::assignment);

// The composed evaluation (B-series of b at the output of a) versus the
// evaluation of the composition product compose(a, b).
VerifyReport verify_composition(const PolynomialVectorField& f,
                                const BSeries& a, const BSeries& b,
                                const std::vector<Rational>& y0,
                                int max_order);

}  // namespace bseries
