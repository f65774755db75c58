#pragma once

#include <span>
#include <utility>
#include <vector>

#include "coxkit/coxeter.hpp"

// Bruhat order: a memoized comparison driven by the lifting property, a
// subword oracle for cross-checking, cover relations, and induced subposets.

namespace cox {

/// u <= v in Bruhat order. Results are memoized inside the shared system
/// tables; the function is pure and safe to call concurrently.
bool bruhat_leq(const Element& u, const Element& v);

/// Brute-force reference: true iff some subword of v's canonical reduced
/// word multiplies to u. Guarded by length(v) <= 20 (OracleTooLarge).
bool bruhat_leq_oracle(const Element& u, const Element& v);

struct CoverList {
  Element element;
  std::vector<Element> covered;  // all u with u <| element, ordered by canonical word
};

/// Elements covered by v: products v*t over reflections t that drop the
/// length by exactly one.
CoverList covers(const Element& v);

/// Cover relations of the Bruhat order restricted to `elems`, as index pairs
/// (i, j) meaning elems[i] <| elems[j] inside the subposet. Pairs come out
/// sorted. Throws DuplicateElements on repeated input.
std::vector<std::pair<std::size_t, std::size_t>> induced_subposet(std::span<const Element> elems);

}  // namespace cox
