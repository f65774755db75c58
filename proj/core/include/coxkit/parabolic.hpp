#pragma once

#include <vector>

#include "coxkit/bruhat.hpp"
#include "coxkit/coxeter.hpp"

// Parabolic machinery: minimal coset and double-coset representatives, the
// triple decomposition relative to a pair (I, J) of generator subsets,
// relative longest elements, and the maximal double-coset representative
//   b_max = w_{0,I}^{I n bJb^-1} * b * w_{0,J}.

namespace cox {

/// Length-additive factorization w = minimal * sub with minimal in W^I
/// (no right descent in I) and sub in W_I.
struct ParabolicComponents {
  Element minimal;  // w^I
  Element sub;      // w_I
};

ParabolicComponents parabolic_components_right(const Element& w, GenSubset I);

/// All elements of the standard parabolic subgroup W_I, ordered by
/// (length, canonical word).
std::vector<Element> parabolic_elements(const CoxeterSystem& sys, GenSubset I);

/// W^I: minimal-length representatives of W/W_I, ordered like elements().
std::vector<Element> min_coset_reps(const CoxeterSystem& sys, GenSubset I);

/// X_IJ: elements with no left descent in I and no right descent in J,
/// the minimal representatives of the (W_I, W_J) double cosets.
std::vector<Element> double_coset_min_reps(const CoxeterSystem& sys, GenSubset I, GenSubset J);

bool in_min_coset_reps(const Element& w, GenSubset I);
bool in_double_coset_min_reps(const Element& w, GenSubset I, GenSubset J);

/// Unique decomposition w = a * b * wj with b in X_IJ, a in the
/// cross-section fiber W_I^{I n bJb^-1}, and a * b = w^J; lengths add.
struct CosetTriple {
  Element a;
  Element b;
  Element wj;
};

CosetTriple decompose_double(const Element& w, GenSubset I, GenSubset J);

/// I n bJb^-1: generators r in I of the form b s b^-1 with s in J.
/// Requires b in X_IJ (NotMinimalRep otherwise).
GenSubset cross_section(const Element& b, GenSubset I, GenSubset J);

/// w_{0,I} * w_{0,K}, the longest element of W_I^K = W^K n W_I.
/// Requires K subset of I (NotASubset otherwise).
Element relative_longest(const CoxeterSystem& sys, GenSubset I, GenSubset K);

/// Maximal element of the double coset W_I b W_J. Requires b in X_IJ.
Element max_rep(const Element& b, GenSubset I, GenSubset J);

/// All distinct products x * b * y with x in W_I, y in W_J, ordered by
/// (length, canonical word).
std::vector<Element> double_coset_elements(const Element& b, GenSubset I, GenSubset J);

/// Both Bruhat verdicts for a pair of minimal representatives: u <= v and
/// max_rep(u) <= max_rep(v). The two always agree; a disagreement raises
/// ComparisonMismatch and means the implementation is broken.
struct RepComparison {
  bool min_leq;
  bool max_leq;
};

RepComparison compare_reps(const Element& u, const Element& v, GenSubset I, GenSubset J);

/// One double coset of W_I \ W / W_J, keyed by its minimal representative.
struct DoubleCosetRecord {
  GenSubset I;
  GenSubset J;
  Element min_rep;        // b
  Element max_rep;        // b_max
  GenSubset cross;        // I n bJb^-1
  std::size_t size = 0;   // |W_I b W_J|
};

/// Records for every double coset, in X_IJ order. Sizes sum to |W|.
std::vector<DoubleCosetRecord> double_coset_records(const CoxeterSystem& sys, GenSubset I,
                                                    GenSubset J);

}  // namespace cox
