#include "coxkit/parabolic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "tables.hpp"

namespace cox {

namespace {

int smallest_descent_in(const GenSubset descents, const GenSubset within) {
  const GenSubset hits = descents & within;
  if (hits.empty()) return -1;
  return *hits.begin();
}

void check_rank(const detail::SystemTables& t, GenSubset I) {
  if (I.bits() >> t.rank) throw IndexOutOfRange("generator subset exceeds rank");
}

std::vector<Element> sorted_by_length_word(std::vector<Element> elems) {
  std::vector<std::vector<int>> words(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) words[i] = elems[i].canonical_word();
  std::vector<std::size_t> idx(elems.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (elems[a].length() != elems[b].length()) return elems[a].length() < elems[b].length();
    return words[a] < words[b];
  });
  std::vector<Element> out;
  out.reserve(elems.size());
  for (std::size_t i : idx) out.push_back(std::move(elems[i]));
  return out;
}

bool word_within(const Element& w, GenSubset I) {
  for (int a : w.canonical_word())
    if (!I.contains(a)) return false;
  return true;
}

}  // namespace

ParabolicComponents parabolic_components_right(const Element& w, GenSubset I) {
  const auto& t = detail::require_tables(w);
  check_rank(t, I);
  Element minimal = w;
  Element sub = detail::identity_of(t);
  // Move right I-descents of the remainder into the W_I factor.
  for (;;) {
    const int s = smallest_descent_in(minimal.right_descents(), I);
    if (s < 0) break;
    minimal = minimal.right_mul(s);
    sub = sub.left_mul(s);
  }
  return {std::move(minimal), std::move(sub)};
}

std::vector<Element> parabolic_elements(const CoxeterSystem& sys, GenSubset I) {
  if (I.bits() >> sys.rank()) throw IndexOutOfRange("generator subset exceeds rank");
  std::vector<Element> found;
  std::unordered_set<Element> seen;
  std::deque<Element> queue;
  queue.push_back(sys.identity());
  seen.insert(sys.identity());
  while (!queue.empty()) {
    Element cur = std::move(queue.front());
    queue.pop_front();
    for (int i : I) {
      Element next = cur.right_mul(i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    found.push_back(std::move(cur));
  }
  return sorted_by_length_word(std::move(found));
}

bool in_min_coset_reps(const Element& w, GenSubset I) {
  return (w.right_descents() & I).empty();
}

bool in_double_coset_min_reps(const Element& w, GenSubset I, GenSubset J) {
  return (w.left_descents() & I).empty() && (w.right_descents() & J).empty();
}

std::vector<Element> min_coset_reps(const CoxeterSystem& sys, GenSubset I) {
  std::vector<Element> out;
  for (const Element& w : sys.elements())
    if (in_min_coset_reps(w, I)) out.push_back(w);
  return out;
}

std::vector<Element> double_coset_min_reps(const CoxeterSystem& sys, GenSubset I, GenSubset J) {
  std::vector<Element> out;
  for (const Element& w : sys.elements())
    if (in_double_coset_min_reps(w, I, J)) out.push_back(w);
  return out;
}

CosetTriple decompose_double(const Element& w, GenSubset I, GenSubset J) {
  const auto& t = detail::require_tables(w);
  check_rank(t, I);
  check_rank(t, J);

  const ParabolicComponents comps = parabolic_components_right(w, J);

  // Greedy two-sided stripping reaches the unique minimal representative of
  // W_I w W_J: every strip lowers the length and the only fixed point in the
  // double coset is its minimum.
  Element b = w;
  for (;;) {
    const int left = smallest_descent_in(b.left_descents(), I);
    if (left >= 0) {
      b = b.left_mul(left);
      continue;
    }
    const int right = smallest_descent_in(b.right_descents(), J);
    if (right >= 0) {
      b = b.right_mul(right);
      continue;
    }
    break;
  }

  Element a = comps.minimal * b.inverse();
  const GenSubset cross = cross_section(b, I, J);

  if (!word_within(a, I))
    throw InternalInconsistency("double-coset decomposition: a is not in W_I");
  if (!(a.right_descents() & cross).empty())
    throw InternalInconsistency("double-coset decomposition: a has a right descent in the cross-section");
  if (a.length() + b.length() + comps.sub.length() != w.length())
    throw InternalInconsistency("double-coset decomposition: lengths do not add");
  if (!(a * b == comps.minimal))
    throw InternalInconsistency("double-coset decomposition: a*b differs from w^J");

  return {std::move(a), std::move(b), comps.sub};
}

GenSubset cross_section(const Element& b, GenSubset I, GenSubset J) {
  const auto& t = detail::require_tables(b);
  check_rank(t, I);
  check_rank(t, J);
  if (!in_double_coset_min_reps(b, I, J))
    throw NotMinimalRep("cross_section requires b in X_IJ");
  const Element b_inv = b.inverse();
  GenSubset out;
  for (int s : J) {
    const Element conj = b * detail::ElementAccess::make(&t, t.gen_action[s], 1) * b_inv;
    for (int r : I) {
      if (detail::ElementAccess::perm(conj) == t.gen_action[r]) {
        out = out.with(r);
        break;
      }
    }
  }
  return out;
}

Element relative_longest(const CoxeterSystem& sys, GenSubset I, GenSubset K) {
  if (!K.subset_of(I)) throw NotASubset("relative_longest requires K within I");
  return sys.longest_element(I) * sys.longest_element(K);
}

Element max_rep(const Element& b, GenSubset I, GenSubset J) {
  const auto& t = detail::require_tables(b);
  check_rank(t, I);
  check_rank(t, J);
  if (!in_double_coset_min_reps(b, I, J)) throw NotMinimalRep("max_rep requires b in X_IJ");
  const GenSubset cross = cross_section(b, I, J);
  const Element rel = detail::longest_in(t, I) * detail::longest_in(t, cross);
  return rel * b * detail::longest_in(t, J);
}

std::vector<Element> double_coset_elements(const Element& b, GenSubset I, GenSubset J) {
  const auto& t = detail::require_tables(b);
  check_rank(t, I);
  check_rank(t, J);

  // BFS over left W_I and right W_J multiplications, starting at b.
  std::unordered_set<Element> seen;
  std::deque<Element> queue;
  std::vector<Element> found;
  seen.insert(b);
  queue.push_back(b);
  while (!queue.empty()) {
    Element cur = std::move(queue.front());
    queue.pop_front();
    for (int i : I) {
      Element next = cur.left_mul(i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    for (int j : J) {
      Element next = cur.right_mul(j);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    found.push_back(std::move(cur));
  }
  return sorted_by_length_word(std::move(found));
}

RepComparison compare_reps(const Element& u, const Element& v, GenSubset I, GenSubset J) {
  const auto& t = detail::require_same(u, v);
  check_rank(t, I);
  check_rank(t, J);
  if (!in_double_coset_min_reps(u, I, J) || !in_double_coset_min_reps(v, I, J))
    throw NotMinimalRep("compare_reps requires u, v in X_IJ");
  const bool min_leq = bruhat_leq(u, v);
  const bool max_leq = bruhat_leq(max_rep(u, I, J), max_rep(v, I, J));
  if (min_leq != max_leq)
    throw ComparisonMismatch("minimal and maximal representative comparisons disagree");
  return {min_leq, max_leq};
}

std::vector<DoubleCosetRecord> double_coset_records(const CoxeterSystem& sys, GenSubset I,
                                                    GenSubset J) {
  std::vector<DoubleCosetRecord> out;
  for (const Element& b : double_coset_min_reps(sys, I, J)) {
    DoubleCosetRecord rec;
    rec.I = I;
    rec.J = J;
    rec.min_rep = b;
    rec.cross = cross_section(b, I, J);
    rec.max_rep = max_rep(b, I, J);
    rec.size = double_coset_elements(b, I, J).size();
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace cox
