#include "coxkit/symgroup.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cox::sn {

namespace {

void check_same_degree(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree())
    throw DegreeMismatch("permutations have different degrees");
}

void check_subset_range(int n, GenSubset H) {
  if (n < 1) throw DegreeMismatch("degree must be at least 1");
  if (n >= 2 && (H.bits() >> (n - 1)))
    throw IndexOutOfRange("generator subset exceeds s_1..s_{n-1}");
  if (n == 1 && !H.empty()) throw IndexOutOfRange("S_1 has no generators");
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
  if (n < 1) throw DegreeMismatch("degree must be at least 1");
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  return from_one_line(std::move(line));
}

Permutation Permutation::from_one_line(std::vector<int> one_line) {
  const int n = static_cast<int>(one_line.size());
  if (n < 1) throw ParseFailure("empty one-line notation");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : one_line) {
    if (v < 1 || v > n || seen[v - 1])
      throw ParseFailure("one-line notation is not a permutation of 1..n");
    seen[v - 1] = true;
  }
  Permutation p;
  p.line_ = std::move(one_line);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty()) throw ParseFailure("empty permutation string");
  std::vector<int> line;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseFailure("one-line digit string must use digits 1..9");
      line.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      int value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
      if (ec != std::errc() || ptr != text.data() + comma)
        throw ParseFailure("bad integer in one-line notation");
      line.push_back(value);
      pos = comma + 1;
      if (comma == text.size()) break;
    }
  }
  return from_one_line(std::move(line));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  if (degree() <= 9) {
    for (int v : line_) out << v;
  } else {
    for (std::size_t i = 0; i < line_.size(); ++i) {
      if (i) out << ',';
      out << line_[i];
    }
  }
  return out.str();
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  check_same_degree(*this, rhs);
  std::vector<int> line(line_.size());
  for (std::size_t k = 0; k < line_.size(); ++k) line[k] = rhs.line_[line_[k] - 1];
  Permutation p;
  p.line_ = std::move(line);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> line(line_.size());
  for (std::size_t k = 0; k < line_.size(); ++k) line[line_[k] - 1] = static_cast<int>(k) + 1;
  Permutation p;
  p.line_ = std::move(line);
  return p;
}

int Permutation::inversions() const {
  int inv = 0;
  for (std::size_t a = 0; a < line_.size(); ++a)
    for (std::size_t b = a + 1; b < line_.size(); ++b)
      if (line_[a] > line_[b]) ++inv;
  return inv;
}

bool Permutation::has_left_descent(int s) const {
  if (s < 1 || s >= degree()) throw IndexOutOfRange("generator index out of range");
  return line_[s - 1] > line_[s];
}

bool Permutation::has_right_descent(int s) const {
  if (s < 1 || s >= degree()) throw IndexOutOfRange("generator index out of range");
  // position of value s vs position of value s+1
  int pos_s = 0, pos_s1 = 0;
  for (std::size_t k = 0; k < line_.size(); ++k) {
    if (line_[k] == s) pos_s = static_cast<int>(k);
    if (line_[k] == s + 1) pos_s1 = static_cast<int>(k);
  }
  return pos_s > pos_s1;
}

GenSubset Permutation::left_descents() const {
  GenSubset out;
  for (int s = 1; s < degree(); ++s)
    if (line_[s - 1] > line_[s]) out = out.with(s - 1);
  return out;
}

GenSubset Permutation::right_descents() const {
  return inverse().left_descents();
}

Permutation Permutation::left_mul_gen(int s) const {
  if (s < 1 || s >= degree()) throw IndexOutOfRange("generator index out of range");
  Permutation p = *this;
  std::swap(p.line_[s - 1], p.line_[s]);
  return p;
}

Permutation Permutation::right_mul_gen(int s) const {
  if (s < 1 || s >= degree()) throw IndexOutOfRange("generator index out of range");
  Permutation p = *this;
  for (auto& v : p.line_) {
    if (v == s)
      v = s + 1;
    else if (v == s + 1)
      v = s;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Matrices and blocks

bool IntMatrix::dominates(const IntMatrix& o) const {
  if (rows != o.rows || cols != o.cols)
    throw DegreeMismatch("matrix shapes differ");
  for (std::size_t k = 0; k < data.size(); ++k)
    if (data[k] < o.data[k]) return false;
  return true;
}

int BlockPartition::block_of(int value) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (value >= blocks[i].first && value <= blocks[i].second) return static_cast<int>(i);
  throw IndexOutOfRange("value outside 1..n");
}

std::string BlockPartition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out << '|';
    for (int v = blocks[i].first; v <= blocks[i].second; ++v) {
      if (n > 9 && v > blocks[i].first) out << ',';
      out << v;
    }
  }
  return out.str();
}

BlockPartition blocks_from_subset(int n, GenSubset H) {
  check_subset_range(n, H);
  BlockPartition part;
  part.n = n;
  int start = 1;
  for (int i = 1; i <= n; ++i) {
    const bool joined_to_next = i < n && H.contains(i - 1);
    if (!joined_to_next) {
      part.blocks.emplace_back(start, i);
      part.ends.push_back(i);
      start = i + 1;
    }
  }
  return part;
}

CountMatrix perm_matrix(const Permutation& w) {
  const int n = w.degree();
  CountMatrix m = IntMatrix::zero(n, n);
  for (int i = 1; i <= n; ++i) m.at(i - 1, w(i) - 1) = 1;
  return m;
}

namespace {

DominanceMatrix prefix_sums(const CountMatrix& m) {
  DominanceMatrix d = IntMatrix::zero(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    int row_acc = 0;
    for (int j = 0; j < m.cols; ++j) {
      row_acc += m.at(i, j);
      d.at(i, j) = row_acc + (i > 0 ? d.at(i - 1, j) : 0);
    }
  }
  return d;
}

}  // namespace

DominanceMatrix dominance(const Permutation& w) { return prefix_sums(perm_matrix(w)); }

CountMatrix coset_matrix(const Permutation& w, GenSubset I, GenSubset J) {
  const int n = w.degree();
  const BlockPartition rows = blocks_from_subset(n, I);
  const BlockPartition cols = blocks_from_subset(n, J);
  CountMatrix m = IntMatrix::zero(rows.block_count(), cols.block_count());
  for (int k = 1; k <= n; ++k) ++m.at(rows.block_of(k), cols.block_of(w(k)));
  return m;
}

DominanceMatrix coset_dominance(const Permutation& w, GenSubset I, GenSubset J) {
  return prefix_sums(coset_matrix(w, I, J));
}

bool dominance_leq(const Permutation& u, const Permutation& v) {
  check_same_degree(u, v);
  return dominance(u).dominates(dominance(v));
}

bool in_double_coset_min_reps(const Permutation& w, GenSubset I, GenSubset J) {
  check_subset_range(w.degree(), I);
  check_subset_range(w.degree(), J);
  return (w.left_descents() & I).empty() && (w.right_descents() & J).empty();
}

bool coset_dominance_leq(const Permutation& u, const Permutation& v, GenSubset I, GenSubset J) {
  check_same_degree(u, v);
  if (!in_double_coset_min_reps(u, I, J) || !in_double_coset_min_reps(v, I, J))
    throw NotMinimalRep("coset_dominance_leq requires u, v in X_IJ");
  return coset_dominance(u, I, J).dominates(coset_dominance(v, I, J));
}

bool same_double_coset(const Permutation& u, const Permutation& v, GenSubset I, GenSubset J) {
  check_same_degree(u, v);
  return coset_matrix(u, I, J) == coset_matrix(v, I, J);
}

// ---------------------------------------------------------------------------
// Bridge

namespace {

void check_bridge(const CoxeterSystem& sys, int degree) {
  if (!is_type_a(sys) || sys.rank() != degree - 1)
    throw SystemMismatch("bridge needs a type-A system of rank degree-1");
}

}  // namespace

Element to_generic(const CoxeterSystem& sys, const Permutation& w) {
  check_bridge(sys, w.degree());
  std::vector<int> word;
  Permutation cur = w;
  GenSubset d = cur.left_descents();
  while (!d.empty()) {
    const int s = *d.begin() + 1;  // smallest left descent, 1-based
    word.push_back(s - 1);
    cur = cur.left_mul_gen(s);
    d = cur.left_descents();
  }
  return sys.from_word(word);
}

Permutation from_generic(const CoxeterSystem& sys, const Element& x) {
  if (!sys.owns(x)) throw SystemMismatch("element does not belong to the given system");
  check_bridge(sys, sys.rank() + 1);
  Permutation p = Permutation::identity(sys.rank() + 1);
  for (int a : x.canonical_word()) p = p.right_mul_gen(a + 1);
  return p;
}

}  // namespace cox::sn
