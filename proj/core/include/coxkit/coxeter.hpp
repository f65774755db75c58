#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxkit/errors.hpp"

// Finite Coxeter systems with exact element arithmetic.
//
// A system is built once from a Coxeter matrix (or a named type) by closing
// the simple roots under the simple reflections; after construction all
// element operations run on exact integer permutation tables of the root
// index set. Products read left to right: (x * y) applies x first, then y.
// Generator indices are 0-based everywhere in this API; user-facing 1-based
// naming is a concern of the CLI layer.

namespace cox {

namespace detail {
struct SystemTables;
struct ElementAccess;
}  // namespace detail

/// Subset of the simple generators, as a bitmask over 0..rank-1.
class GenSubset {
public:
  constexpr GenSubset() = default;

  static constexpr GenSubset none() { return GenSubset(); }
  static GenSubset all(int rank);
  static GenSubset of(std::initializer_list<int> gens);
  static constexpr GenSubset from_bits(std::uint64_t bits) { return GenSubset(bits); }

  constexpr bool contains(int i) const { return i >= 0 && i < 64 && (bits_ >> i & 1u); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  GenSubset with(int i) const;
  GenSubset without(int i) const;
  constexpr bool subset_of(GenSubset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr GenSubset operator&(GenSubset o) const { return GenSubset(bits_ & o.bits_); }
  constexpr GenSubset operator|(GenSubset o) const { return GenSubset(bits_ | o.bits_); }

  /// Set bits as an ascending vector of generator indices.
  std::vector<int> to_vector() const;

  friend constexpr bool operator==(GenSubset a, GenSubset b) = default;

  class iterator {
  public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

  private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

private:
  constexpr explicit GenSubset(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Symmetric integer matrix with m_ii = 1 and m_ij >= 2. Entry 0 marks an
/// infinite bond and is rejected when a spec is made from the matrix.
class CoxeterMatrix {
public:
  CoxeterMatrix() = default;
  CoxeterMatrix(int rank, std::vector<int> row_major);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * rank_ + j]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
  int rank_ = 0;
  std::vector<int> entries_;
};

/// Validated build recipe: either a named type or an explicit matrix.
class CoxeterSpec {
public:
  /// Named types: "A4", "B3", "D4", "E6", "F4", "G2", "H3", "H4", "I2(7)".
  static CoxeterSpec named(std::string_view name);
  static CoxeterSpec from_matrix(CoxeterMatrix m);
  /// File format: line 1 holds the rank n, lines 2..n+1 hold n integers
  /// each; entry 0 is the infinity marker and is rejected.
  static CoxeterSpec from_matrix_file(const std::filesystem::path& path);

  const CoxeterMatrix& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }

private:
  CoxeterSpec(CoxeterMatrix m, std::string name);
  CoxeterMatrix matrix_;
  std::string name_;
};

struct BuildLimits {
  /// Maximum number of distinct roots enumerated during closure.
  std::size_t max_roots = 10'000;
  /// Maximum number of group elements enumerated.
  std::size_t max_elements = 1'000'000;
};

/// Group element, represented by its signed-root permutation: entry k holds
/// the index of the image of root k. Positive roots occupy indices 0..N-1
/// and the negative of root k sits at k+N, so the table commutes with the
/// index shift by N. Immutable value; stays valid while its system lives.
class Element {
public:
  Element() = default;

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0 && sys_ != nullptr; }

  /// Group product, left to right: result applies *this first, then rhs.
  Element operator*(const Element& rhs) const;
  Element inverse() const;

  /// Product with a single generator; cheaper than operator* and adjusts
  /// the cached length by +-1.
  Element left_mul(int gen) const;
  Element right_mul(int gen) const;

  bool has_right_descent(int gen) const;
  bool has_left_descent(int gen) const;
  GenSubset right_descents() const;
  GenSubset left_descents() const;
  /// Smallest-index left descent, or -1 for the identity.
  int min_left_descent() const;

  /// Lexicographically least reduced word (0-based generator indices),
  /// obtained by repeatedly stripping the smallest left descent.
  std::vector<int> canonical_word() const;

  std::span<const std::int32_t> root_perm() const { return perm_; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.sys_ == b.sys_ && a.perm_ == b.perm_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
  friend struct detail::ElementAccess;
  const detail::SystemTables* sys_ = nullptr;
  std::vector<std::int32_t> perm_;
  int length_ = 0;
};

/// Immutable finite Coxeter system. Cheap to copy (shared tables); all
/// lazily computed caches are initialized exactly once and are safe to
/// touch from concurrent readers.
class CoxeterSystem {
public:
  static CoxeterSystem build(const CoxeterSpec& spec, const BuildLimits& limits = {});

  int rank() const;
  const CoxeterMatrix& matrix() const;
  const std::string& name() const;

  /// Number N of positive roots; the full root table has 2N entries.
  int positive_roots() const;
  /// Coordinates of root `index` in the simple-root basis.
  std::span<const double> root(int index) const;

  Element identity() const;
  Element generator(int i) const;
  Element from_word(std::span<const int> word) const;
  Element from_word(std::initializer_list<int> word) const;

  /// Longest element of the standard parabolic subgroup W_I (w_0 for I = S).
  Element longest_element(GenSubset I) const;
  Element longest_element() const;

  /// All |W| elements, ordered by (length, canonical word); cached after the
  /// first call. Throws InfiniteOrTooLarge past the element cap.
  const std::vector<Element>& elements() const;
  std::size_t order() const { return elements().size(); }

  GenSubset full_subset() const { return GenSubset::all(rank()); }
  bool owns(const Element& e) const;

private:
  explicit CoxeterSystem(std::shared_ptr<const detail::SystemTables> t);
  std::shared_ptr<const detail::SystemTables> t_;
};

/// True when the system carries the standard A_{rank} diagram (a path with
/// all bonds equal to 3), i.e. models a symmetric group of degree rank+1.
bool is_type_a(const CoxeterSystem& sys);

}  // namespace cox

template <>
struct std::hash<cox::Element> {
  std::size_t operator()(const cox::Element& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int32_t x : e.root_perm()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
