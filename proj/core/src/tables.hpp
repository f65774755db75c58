#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "coxkit/coxeter.hpp"

namespace cox::detail {

struct VecHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int32_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct SystemTables {
  CoxeterMatrix matrix;
  std::string name;
  BuildLimits limits;
  int rank = 0;
  int n_pos = 0;  // N; roots are indexed 0..2N-1 with -root[k] at k+N

  std::vector<std::vector<double>> roots;
  std::vector<double> bilinear;  // rank x rank, row major
  std::vector<std::vector<std::int32_t>> gen_action;

  // lazy caches
  mutable std::once_flag elements_once;
  mutable std::vector<Element> elements_cache;

  mutable std::once_flag reflections_once;
  mutable std::vector<std::vector<std::int32_t>> reflection_tables;  // one per positive root

  mutable std::mutex memo_mutex;
  mutable std::unordered_map<std::vector<std::int32_t>, std::uint32_t, VecHash> elem_ids;
  mutable std::unordered_map<std::uint64_t, bool> bruhat_memo;

  int negate(int k) const { return k < n_pos ? k + n_pos : k - n_pos; }
  double form(std::span<const double> a, std::span<const double> b) const;
  void build_elements() const;
  void build_reflections() const;
};

struct ElementAccess {
  static const SystemTables* tables(const Element& e);
  static Element make(const SystemTables* t, std::vector<std::int32_t> perm);
  static Element make(const SystemTables* t, std::vector<std::int32_t> perm, int length);
  static const std::vector<std::int32_t>& perm(const Element& e);
};

// Throws SystemMismatch when the elements disagree (or either is detached).
const SystemTables& require_same(const Element& a, const Element& b);
const SystemTables& require_tables(const Element& e);

int length_of(const SystemTables& t, const std::vector<std::int32_t>& perm);
Element identity_of(const SystemTables& t);
Element longest_in(const SystemTables& t, GenSubset I);

}  // namespace cox::detail
