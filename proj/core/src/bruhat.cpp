#include "coxkit/bruhat.hpp"

#include <algorithm>
#include <unordered_set>

#include "tables.hpp"

namespace cox {

namespace {

constexpr int kOracleMaxLength = 20;

std::uint32_t intern_id(const detail::SystemTables& t, const Element& e) {
  const auto& perm = detail::ElementAccess::perm(e);
  std::vector<std::int32_t> half(perm.begin(), perm.begin() + t.n_pos);
  const auto next = static_cast<std::uint32_t>(t.elem_ids.size());
  return t.elem_ids.emplace(std::move(half), next).first->second;
}

bool leq_impl(const detail::SystemTables& t, const Element& u, const Element& v) {
  if (u.length() > v.length()) return false;
  if (u.length() == 0) return true;
  if (u == v) return true;
  if (u.length() == v.length()) return false;

  std::uint64_t key;
  {
    std::lock_guard<std::mutex> lock(t.memo_mutex);
    key = (static_cast<std::uint64_t>(intern_id(t, u)) << 32) | intern_id(t, v);
    auto it = t.bruhat_memo.find(key);
    if (it != t.bruhat_memo.end()) return it->second;
  }

  // Lifting property: with s a left descent of v,
  //   su < u:  u <= v  iff  su <= sv,
  //   u < su:  u <= v  iff  u <= sv.
  const int s = v.min_left_descent();
  const Element sv = v.left_mul(s);
  const bool res =
      u.has_left_descent(s) ? leq_impl(t, u.left_mul(s), sv) : leq_impl(t, u, sv);

  std::lock_guard<std::mutex> lock(t.memo_mutex);
  t.bruhat_memo.emplace(key, res);
  return res;
}

}  // namespace

bool bruhat_leq(const Element& u, const Element& v) {
  const auto& t = detail::require_same(u, v);
  return leq_impl(t, u, v);
}

bool bruhat_leq_oracle(const Element& u, const Element& v) {
  const auto& t = detail::require_same(u, v);
  if (v.length() > kOracleMaxLength)
    throw OracleTooLarge("subword oracle limited to words of length <= " +
                         std::to_string(kOracleMaxLength));
  const std::vector<int> word = v.canonical_word();

  // Products of all subwords of the fixed reduced word, deduplicated.
  std::unordered_set<std::vector<std::int32_t>, detail::VecHash> seen;
  std::vector<std::vector<std::int32_t>> frontier;
  std::vector<std::int32_t> id(t.roots.size());
  for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<std::int32_t>(k);
  seen.insert(id);
  frontier.push_back(std::move(id));
  for (int a : word) {
    const auto& g = t.gen_action[a];
    const std::size_t existing = frontier.size();
    for (std::size_t i = 0; i < existing; ++i) {
      std::vector<std::int32_t> next(frontier[i].size());
      for (std::size_t k = 0; k < next.size(); ++k) next[k] = frontier[i][g[k]];
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen.count(detail::ElementAccess::perm(u)) != 0;
}

CoverList covers(const Element& v) {
  const auto& t = detail::require_tables(v);
  t.build_reflections();
  CoverList out;
  out.element = v;
  const auto& vp = detail::ElementAccess::perm(v);
  for (int r = 0; r < t.n_pos; ++r) {
    const auto& refl = t.reflection_tables[r];
    std::vector<std::int32_t> prod(vp.size());
    for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = vp[refl[k]];
    const int len = detail::length_of(t, prod);
    if (len == v.length() - 1)
      out.covered.push_back(detail::ElementAccess::make(&t, std::move(prod), len));
  }
  std::sort(out.covered.begin(), out.covered.end(), [](const Element& a, const Element& b) {
    return a.canonical_word() < b.canonical_word();
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> induced_subposet(
    std::span<const Element> elems) {
  const std::size_t n = elems.size();
  if (n == 0) return {};
  for (std::size_t i = 1; i < n; ++i) detail::require_same(elems[0], elems[i]);
  {
    std::unordered_set<Element> dedup(elems.begin(), elems.end());
    if (dedup.size() != n) throw DuplicateElements("induced_subposet: repeated element");
  }

  std::vector<std::vector<bool>> strict(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) strict[i][j] = bruhat_leq(elems[i], elems[j]);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!strict[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (strict[i][k] && strict[k][j]) direct = false;
      if (direct) pairs.emplace_back(i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace cox
