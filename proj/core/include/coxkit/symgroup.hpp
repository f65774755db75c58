#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxkit/coxeter.hpp"

// Symmetric-group backend: one-line permutations, permutation/dominance
// matrices, block partitions cut out by generator subsets, and the
// double-coset count matrices M^{I,J} with their prefix sums D^{I,J}.
//
// Composition reads left to right, matching the generic engine: (u * v)
// applies u first, so left multiplication by s_i swaps the entries at
// positions i, i+1 and right multiplication swaps the values i, i+1.
// Generators are named s_1 .. s_{n-1}; GenSubset bit i-1 stands for s_i.

namespace cox::sn {

class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int n);
  /// one_line[k] is the image of position k+1; must be a bijection on 1..n.
  static Permutation from_one_line(std::vector<int> one_line);
  /// Digit string for n <= 9 ("3471526"), comma-separated integers above.
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(line_.size()); }
  int operator()(int position) const { return line_[position - 1]; }
  const std::vector<int>& one_line() const { return line_; }
  std::string to_string() const;

  Permutation operator*(const Permutation& rhs) const;  // applies *this first
  Permutation inverse() const;

  int inversions() const;  // Coxeter length
  /// s_i is a left descent iff entries at positions i, i+1 descend.
  bool has_left_descent(int s) const;
  /// s_i is a right descent iff value i sits after value i+1.
  bool has_right_descent(int s) const;
  GenSubset left_descents() const;
  GenSubset right_descents() const;

  Permutation left_mul_gen(int s) const;   // swap positions s, s+1
  Permutation right_mul_gen(int s) const;  // swap values s, s+1

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> line_;
};

/// Dense integer matrix; doubles as CountMatrix and DominanceMatrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> data;

  static IntMatrix zero(int r, int c) { return {r, c, std::vector<int>(static_cast<std::size_t>(r) * c, 0)}; }
  int& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  int at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  /// this >= o in every entry.
  bool dominates(const IntMatrix& o) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

using CountMatrix = IntMatrix;
using DominanceMatrix = IntMatrix;

/// Consecutive interval blocks of {1..n} glued by the generators in H:
/// s_i in H joins i ~ i+1. `ends` lists the last position of each block
/// (the complement of {i | s_i in H}, always containing n).
struct BlockPartition {
  int n = 0;
  std::vector<std::pair<int, int>> blocks;  // 1-based inclusive intervals
  std::vector<int> ends;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_of(int value) const;  // 0-based block index containing `value`
  std::string to_string() const;  // "123|45|67"
};

BlockPartition blocks_from_subset(int n, GenSubset H);

/// Permutation matrix: 1 at (i, w_i).
CountMatrix perm_matrix(const Permutation& w);
/// 2-D prefix sums of perm_matrix; d[i][j] = #{k <= i : w_k <= j}.
DominanceMatrix dominance(const Permutation& w);

/// Block count matrix: entry (i, j) counts positions in the i-th I-block
/// whose value lands in the j-th J-block. Constant on W_I w W_J.
CountMatrix coset_matrix(const Permutation& w, GenSubset I, GenSubset J);
/// 2-D prefix sums of coset_matrix; equals the (ends_I, ends_J) submatrix
/// of dominance(w).
DominanceMatrix coset_dominance(const Permutation& w, GenSubset I, GenSubset J);

/// Bruhat comparison via dominance: u <= v iff D(u) >= D(v) entrywise.
bool dominance_leq(const Permutation& u, const Permutation& v);

/// Bruhat comparison of minimal double-coset representatives via the block
/// dominance matrices. Requires u, v in X_IJ (NotMinimalRep otherwise).
bool coset_dominance_leq(const Permutation& u, const Permutation& v, GenSubset I, GenSubset J);

/// True iff u and v generate the same (W_I, W_J) double coset, i.e. their
/// coset matrices agree.
bool same_double_coset(const Permutation& u, const Permutation& v, GenSubset I, GenSubset J);

bool in_double_coset_min_reps(const Permutation& w, GenSubset I, GenSubset J);

/// Bridge to the generic engine: s_i maps to generator i-1 of a type-A
/// system of rank n-1. Words, lengths and both descent sides correspond.
Element to_generic(const CoxeterSystem& sys, const Permutation& w);
Permutation from_generic(const CoxeterSystem& sys, const Element& x);

}  // namespace cox::sn
