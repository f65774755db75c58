#include "coxkit/coxeter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include "tables.hpp"

namespace cox {

namespace {

constexpr double kTol = 1e-8;  // dedup/sign tolerance for root coordinates

// Lexicographic comparison with a tolerance band. Valid as a map comparator
// here because distinct roots are separated by far more than kTol in some
// coordinate.
struct FuzzyLexLess {
  bool operator()(const std::vector<double>& a, const std::vector<double>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i] - kTol) return true;
      if (a[i] > b[i] + kTol) return false;
    }
    return false;
  }
};

using RootIndexMap = std::map<std::vector<double>, int, FuzzyLexLess>;

std::vector<double> reflect(const detail::SystemTables& t, int gen, const std::vector<double>& v) {
  double c = 0.0;
  for (int j = 0; j < t.rank; ++j) c += t.bilinear[static_cast<std::size_t>(gen) * t.rank + j] * v[j];
  std::vector<double> out = v;
  out[gen] -= 2.0 * c;
  return out;
}

bool is_positive_root(const std::vector<double>& v) {
  bool any = false;
  for (double x : v) {
    if (x < -kTol) return false;
    if (x > kTol) any = true;
  }
  return any;
}

bool is_negative_root(const std::vector<double>& v) {
  bool any = false;
  for (double x : v) {
    if (x > kTol) return false;
    if (x < -kTol) any = true;
  }
  return any;
}

std::vector<double> negated(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::vector<std::int32_t> compose_tables(const std::vector<std::int32_t>& first_applied,
                                         const std::vector<std::int32_t>& then) {
  std::vector<std::int32_t> out(first_applied.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = then[first_applied[k]];
  return out;
}

bool is_identity_table(const std::vector<std::int32_t>& t) {
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t[k] != static_cast<std::int32_t>(k)) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// GenSubset

GenSubset GenSubset::all(int rank) {
  if (rank < 0 || rank > 63) throw IndexOutOfRange("GenSubset::all: rank out of range");
  return GenSubset(rank == 0 ? 0 : ((std::uint64_t{1} << rank) - 1));
}

GenSubset GenSubset::of(std::initializer_list<int> gens) {
  GenSubset s;
  for (int g : gens) s = s.with(g);
  return s;
}

GenSubset GenSubset::with(int i) const {
  if (i < 0 || i >= 64) throw IndexOutOfRange("GenSubset::with: index out of range");
  return GenSubset(bits_ | (std::uint64_t{1} << i));
}

GenSubset GenSubset::without(int i) const {
  if (i < 0 || i >= 64) throw IndexOutOfRange("GenSubset::without: index out of range");
  return GenSubset(bits_ & ~(std::uint64_t{1} << i));
}

std::vector<int> GenSubset::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int g : *this) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// CoxeterMatrix / CoxeterSpec

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> row_major)
    : rank_(rank), entries_(std::move(row_major)) {
  if (rank_ < 1) throw InvalidMatrix("Coxeter matrix needs rank >= 1");
  if (entries_.size() != static_cast<std::size_t>(rank_) * rank_)
    throw InvalidMatrix("Coxeter matrix entry count does not match rank");
}

CoxeterSpec::CoxeterSpec(CoxeterMatrix m, std::string name)
    : matrix_(std::move(m)), name_(std::move(name)) {}

CoxeterSpec CoxeterSpec::from_matrix(CoxeterMatrix m) {
  const int n = m.rank();
  if (n > 63) throw InvalidMatrix("rank larger than 63 is not supported");
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != 1) throw InvalidMatrix("diagonal entries must equal 1");
    for (int j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw InvalidMatrix("Coxeter matrix must be symmetric");
      if (m(i, j) == 0)
        throw InfiniteOrTooLarge("entry 0 marks an infinite bond; infinite systems are rejected");
      if (m(i, j) < 2) throw InvalidMatrix("off-diagonal entries must be >= 2");
    }
  }
  std::ostringstream name;
  name << "matrix(" << n << ")";
  return CoxeterSpec(std::move(m), name.str());
}

namespace {

CoxeterMatrix matrix_from_bonds(int rank, const std::vector<std::array<int, 3>>& bonds) {
  std::vector<int> e(static_cast<std::size_t>(rank) * rank, 2);
  for (int i = 0; i < rank; ++i) e[static_cast<std::size_t>(i) * rank + i] = 1;
  for (const auto& [a, b, m] : bonds) {
    e[static_cast<std::size_t>(a) * rank + b] = m;
    e[static_cast<std::size_t>(b) * rank + a] = m;
  }
  return CoxeterMatrix(rank, std::move(e));
}

}  // namespace

CoxeterSpec CoxeterSpec::named(std::string_view name) {
  std::string s(name);
  auto fail = [&]() -> CoxeterSpec {
    throw ParseFailure("unrecognized Coxeter type name: \"" + s + "\"");
  };
  if (s.empty()) return fail();

  // Dihedral: I2(m), and G2 as the m = 6 alias.
  if (s == "G2") return CoxeterSpec(matrix_from_bonds(2, {{0, 1, 6}}), "I2(6)");
  if (s.rfind("I2(", 0) == 0 && s.back() == ')') {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(s.substr(3), &used);
      if (used + 4 != s.size()) return fail();
    } catch (const std::exception&) {
      return fail();
    }
    if (m == 0) throw InfiniteOrTooLarge("I2(0) marks the infinite dihedral group");
    if (m < 2) return fail();
    return CoxeterSpec(matrix_from_bonds(2, {{0, 1, m}}), "I2(" + std::to_string(m) + ")");
  }

  char family = s[0];
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(1), &used);
    if (used + 1 != s.size()) return fail();
  } catch (const std::exception&) {
    return fail();
  }

  std::vector<std::array<int, 3>> bonds;
  switch (family) {
    case 'A':
      if (n < 1) return fail();
      for (int i = 0; i + 1 < n; ++i) bonds.push_back({i, i + 1, 3});
      break;
    case 'B':
      if (n < 2) return fail();
      for (int i = 0; i + 2 < n; ++i) bonds.push_back({i, i + 1, 3});
      bonds.push_back({n - 2, n - 1, 4});
      break;
    case 'D':
      if (n < 3) return fail();
      for (int i = 0; i + 2 < n; ++i) bonds.push_back({i, i + 1, 3});
      bonds.push_back({n - 3, n - 1, 3});
      break;
    case 'E':
      // Bourbaki numbering: node 2 hangs off node 4 of the path 1-3-4-5-6.
      if (n != 6) return fail();
      bonds = {{0, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {1, 3, 3}};
      break;
    case 'F':
      if (n != 4) return fail();
      bonds = {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}};
      break;
    case 'H':
      if (n != 3 && n != 4) return fail();
      bonds.push_back({0, 1, 5});
      for (int i = 1; i + 1 < n; ++i) bonds.push_back({i, i + 1, 3});
      break;
    default:
      return fail();
  }
  return CoxeterSpec(matrix_from_bonds(n, bonds), std::string(1, family) + std::to_string(n));
}

CoxeterSpec CoxeterSpec::from_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseFailure("cannot open matrix file: " + path.string());
  int n = 0;
  if (!(in >> n)) throw ParseFailure("matrix file: missing rank on line 1");
  if (n < 1 || n > 63) throw InvalidMatrix("matrix file: rank out of range");
  std::vector<int> e(static_cast<std::size_t>(n) * n);
  for (auto& x : e) {
    if (!(in >> x)) throw ParseFailure("matrix file: too few entries");
  }
  return from_matrix(CoxeterMatrix(n, std::move(e)));
}

// ---------------------------------------------------------------------------
// detail helpers

namespace detail {

const SystemTables* ElementAccess::tables(const Element& e) { return e.sys_; }

Element ElementAccess::make(const SystemTables* t, std::vector<std::int32_t> perm) {
  return make(t, std::move(perm), -1);
}

Element ElementAccess::make(const SystemTables* t, std::vector<std::int32_t> perm, int length) {
  Element e;
  e.sys_ = t;
  e.length_ = length >= 0 ? length : length_of(*t, perm);
  e.perm_ = std::move(perm);
  return e;
}

const std::vector<std::int32_t>& ElementAccess::perm(const Element& e) { return e.perm_; }

const SystemTables& require_tables(const Element& e) {
  const SystemTables* t = ElementAccess::tables(e);
  if (t == nullptr) throw SystemMismatch("operation on a detached (default-constructed) element");
  return *t;
}

const SystemTables& require_same(const Element& a, const Element& b) {
  const SystemTables& t = require_tables(a);
  if (&t != ElementAccess::tables(b))
    throw SystemMismatch("elements belong to different Coxeter systems");
  return t;
}

int length_of(const SystemTables& t, const std::vector<std::int32_t>& perm) {
  int len = 0;
  for (int k = 0; k < t.n_pos; ++k)
    if (perm[k] >= t.n_pos) ++len;
  return len;
}

Element identity_of(const SystemTables& t) {
  std::vector<std::int32_t> id(t.roots.size());
  for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<std::int32_t>(k);
  return ElementAccess::make(&t, std::move(id), 0);
}

Element longest_in(const SystemTables& t, GenSubset I) {
  if (I.bits() >> t.rank) throw IndexOutOfRange("generator subset exceeds rank");
  Element cur = identity_of(t);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : I) {
      if (!cur.has_right_descent(i)) {
        cur = cur.right_mul(i);
        grew = true;
        break;
      }
    }
  }
  return cur;
}

double SystemTables::form(std::span<const double> a, std::span<const double> b) const {
  double acc = 0.0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0.0) continue;
    double row = 0.0;
    for (int j = 0; j < rank; ++j) row += bilinear[static_cast<std::size_t>(i) * rank + j] * b[j];
    acc += a[i] * row;
  }
  return acc;
}

void SystemTables::build_reflections() const {
  std::call_once(reflections_once, [this] {
    RootIndexMap index;
    for (std::size_t k = 0; k < roots.size(); ++k) index.emplace(roots[k], static_cast<int>(k));
    std::vector<std::vector<std::int32_t>> tabs;
    tabs.reserve(static_cast<std::size_t>(n_pos));
    const std::size_t total = roots.size();
    for (int r = 0; r < n_pos; ++r) {
      const auto& beta = roots[r];
      const double norm = form(beta, beta);
      std::vector<std::int32_t> tab(total);
      for (std::size_t k = 0; k < total; ++k) {
        const double c = 2.0 * form(beta, roots[k]) / norm;
        std::vector<double> img = roots[k];
        for (int i = 0; i < rank; ++i) img[i] -= c * beta[i];
        auto it = index.find(img);
        if (it == index.end())
          throw InternalInconsistency("reflection image is not a root; tables are corrupt");
        tab[k] = it->second;
      }
      tabs.push_back(std::move(tab));
    }
    reflection_tables = std::move(tabs);
  });
}

void SystemTables::build_elements() const {
  std::call_once(elements_once, [this] {
    const std::size_t total = roots.size();
    std::vector<std::int32_t> id(total);
    for (std::size_t k = 0; k < total; ++k) id[k] = static_cast<std::int32_t>(k);

    auto half = [this](const std::vector<std::int32_t>& p) {
      return std::vector<std::int32_t>(p.begin(), p.begin() + n_pos);
    };

    std::unordered_set<std::vector<std::int32_t>, VecHash> seen;
    std::deque<std::vector<std::int32_t>> queue;
    std::vector<std::vector<std::int32_t>> found;
    seen.insert(half(id));
    queue.push_back(std::move(id));
    while (!queue.empty()) {
      std::vector<std::int32_t> cur = std::move(queue.front());
      queue.pop_front();
      for (int i = 0; i < rank; ++i) {
        std::vector<std::int32_t> next = compose_tables(gen_action[i], cur);
        if (seen.insert(half(next)).second) {
          if (seen.size() > limits.max_elements)
            throw InfiniteOrTooLarge("element enumeration exceeded the cap of " +
                                     std::to_string(limits.max_elements));
          queue.push_back(std::move(next));
        }
      }
      found.push_back(std::move(cur));
    }

    std::vector<Element> elems;
    elems.reserve(found.size());
    for (auto& p : found) elems.push_back(ElementAccess::make(this, std::move(p)));
    std::vector<std::vector<int>> words(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) words[i] = elems[i].canonical_word();
    std::vector<std::size_t> idx(elems.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (elems[a].length() != elems[b].length()) return elems[a].length() < elems[b].length();
      return words[a] < words[b];
    });
    std::vector<Element> sorted;
    sorted.reserve(elems.size());
    for (std::size_t i : idx) sorted.push_back(std::move(elems[i]));
    elements_cache = std::move(sorted);
  });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Element

Element Element::operator*(const Element& rhs) const {
  detail::require_same(*this, rhs);
  // (x*y) applies x first: table composes as T_x followed by T_y... the
  // composite table evaluates T_x at T_y's preimage, i.e. out[k] = T_x[T_y[k]].
  std::vector<std::int32_t> out(perm_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = perm_[rhs.perm_[k]];
  return detail::ElementAccess::make(sys_, std::move(out));
}

Element Element::inverse() const {
  const auto& t = detail::require_tables(*this);
  std::vector<std::int32_t> out(perm_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[perm_[k]] = static_cast<std::int32_t>(k);
  return detail::ElementAccess::make(&t, std::move(out), length_);
}

Element Element::left_mul(int gen) const {
  const auto& t = detail::require_tables(*this);
  if (gen < 0 || gen >= t.rank) throw IndexOutOfRange("generator index out of range");
  const auto& g = t.gen_action[gen];
  std::vector<std::int32_t> out(perm_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = g[perm_[k]];
  return detail::ElementAccess::make(&t, std::move(out),
                                     length_ + (has_left_descent(gen) ? -1 : 1));
}

Element Element::right_mul(int gen) const {
  const auto& t = detail::require_tables(*this);
  if (gen < 0 || gen >= t.rank) throw IndexOutOfRange("generator index out of range");
  const auto& g = t.gen_action[gen];
  std::vector<std::int32_t> out(perm_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = perm_[g[k]];
  return detail::ElementAccess::make(&t, std::move(out),
                                     length_ + (has_right_descent(gen) ? -1 : 1));
}

bool Element::has_right_descent(int gen) const {
  const auto& t = detail::require_tables(*this);
  if (gen < 0 || gen >= t.rank) throw IndexOutOfRange("generator index out of range");
  return perm_[gen] >= t.n_pos;
}

bool Element::has_left_descent(int gen) const {
  const auto& t = detail::require_tables(*this);
  if (gen < 0 || gen >= t.rank) throw IndexOutOfRange("generator index out of range");
  const std::int32_t target = static_cast<std::int32_t>(gen + t.n_pos);
  for (int k = 0; k < t.n_pos; ++k)
    if (perm_[k] == target) return true;
  return false;
}

GenSubset Element::right_descents() const {
  const auto& t = detail::require_tables(*this);
  GenSubset out;
  for (int i = 0; i < t.rank; ++i)
    if (perm_[i] >= t.n_pos) out = out.with(i);
  return out;
}

GenSubset Element::left_descents() const {
  const auto& t = detail::require_tables(*this);
  GenSubset out;
  // Positive root k maps to -alpha_i exactly when i is a left descent.
  for (int k = 0; k < t.n_pos; ++k) {
    const std::int32_t img = perm_[k];
    if (img >= t.n_pos && img < t.n_pos + t.rank) out = out.with(img - t.n_pos);
  }
  return out;
}

int Element::min_left_descent() const {
  const auto& t = detail::require_tables(*this);
  int best = -1;
  for (int k = 0; k < t.n_pos; ++k) {
    const std::int32_t img = perm_[k];
    if (img >= t.n_pos && img < t.n_pos + t.rank) {
      const int i = img - t.n_pos;
      if (best < 0 || i < best) best = i;
    }
  }
  return best;
}

std::vector<int> Element::canonical_word() const {
  detail::require_tables(*this);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(length_));
  Element cur = *this;
  while (cur.length() > 0) {
    const int s = cur.min_left_descent();
    word.push_back(s);
    cur = cur.left_mul(s);
  }
  return word;
}

// ---------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem::CoxeterSystem(std::shared_ptr<const detail::SystemTables> t) : t_(std::move(t)) {}

CoxeterSystem CoxeterSystem::build(const CoxeterSpec& spec, const BuildLimits& limits) {
  auto tables = std::make_shared<detail::SystemTables>();
  detail::SystemTables& t = *tables;
  t.matrix = spec.matrix();
  t.name = spec.name();
  t.limits = limits;
  t.rank = t.matrix.rank();

  t.bilinear.assign(static_cast<std::size_t>(t.rank) * t.rank, 0.0);
  for (int i = 0; i < t.rank; ++i)
    for (int j = 0; j < t.rank; ++j)
      t.bilinear[static_cast<std::size_t>(i) * t.rank + j] =
          -std::cos(std::numbers::pi / t.matrix(i, j));

  // Close the simple roots under the simple reflections.
  RootIndexMap index;
  std::vector<std::vector<double>> all;
  std::deque<int> queue;
  for (int i = 0; i < t.rank; ++i) {
    std::vector<double> e(static_cast<std::size_t>(t.rank), 0.0);
    e[i] = 1.0;
    index.emplace(e, static_cast<int>(all.size()));
    all.push_back(std::move(e));
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const int k = queue.front();
    queue.pop_front();
    for (int i = 0; i < t.rank; ++i) {
      std::vector<double> img = reflect(t, i, all[k]);
      if (index.find(img) == index.end()) {
        if (all.size() >= limits.max_roots)
          throw InfiniteOrTooLarge("root closure exceeded the cap of " +
                                   std::to_string(limits.max_roots) + " roots");
        index.emplace(img, static_cast<int>(all.size()));
        all.push_back(std::move(img));
        queue.push_back(static_cast<int>(all.size()) - 1);
      }
    }
  }

  // Reindex: positives in discovery order (simple roots first), negatives
  // shifted by N.
  std::vector<int> positives;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (is_positive_root(all[k])) {
      positives.push_back(static_cast<int>(k));
    } else if (!is_negative_root(all[k])) {
      throw InternalInconsistency("root with mixed signs found during closure");
    }
  }
  const int n_pos = static_cast<int>(positives.size());
  if (all.size() != static_cast<std::size_t>(2 * n_pos))
    throw InternalInconsistency("root count is not twice the positive count");
  t.n_pos = n_pos;
  t.roots.resize(all.size());
  RootIndexMap final_index;
  for (int k = 0; k < n_pos; ++k) {
    t.roots[k] = all[positives[k]];
    t.roots[k + n_pos] = negated(t.roots[k]);
    final_index.emplace(t.roots[k], k);
    final_index.emplace(t.roots[k + n_pos], k + n_pos);
  }

  t.gen_action.assign(static_cast<std::size_t>(t.rank),
                      std::vector<std::int32_t>(all.size(), 0));
  for (int i = 0; i < t.rank; ++i) {
    auto& act = t.gen_action[i];
    for (int k = 0; k < n_pos; ++k) {
      std::vector<double> img = reflect(t, i, t.roots[k]);
      auto it = final_index.find(img);
      if (it == final_index.end())
        throw InternalInconsistency("generator image of a root is not a root");
      act[k] = it->second;
      act[k + n_pos] = static_cast<std::int32_t>(t.negate(it->second));
    }
  }

  // Build-time gate: involutions, the single sign flip per generator, and
  // the braid relations must all hold on the finished tables.
  for (int i = 0; i < t.rank; ++i) {
    const auto& a = t.gen_action[i];
    int flips = 0;
    for (int k = 0; k < n_pos; ++k) {
      if (a[a[k]] != k || a[a[k + n_pos]] != k + n_pos)
        throw InternalInconsistency("generator action is not an involution");
      if (a[k] >= n_pos) ++flips;
    }
    if (flips != 1 || a[i] != t.negate(i))
      throw InternalInconsistency("generator must send exactly its own simple root negative");
  }
  for (int i = 0; i < t.rank; ++i) {
    for (int j = i + 1; j < t.rank; ++j) {
      const auto pair = compose_tables(t.gen_action[j], t.gen_action[i]);
      std::vector<std::int32_t> acc(pair.size());
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = static_cast<std::int32_t>(k);
      for (int rep = 0; rep < t.matrix(i, j); ++rep) acc = compose_tables(acc, pair);
      if (!is_identity_table(acc))
        throw InternalInconsistency("braid relation fails on the action tables");
    }
  }

  return CoxeterSystem(std::move(tables));
}

int CoxeterSystem::rank() const { return t_->rank; }
const CoxeterMatrix& CoxeterSystem::matrix() const { return t_->matrix; }
const std::string& CoxeterSystem::name() const { return t_->name; }
int CoxeterSystem::positive_roots() const { return t_->n_pos; }

std::span<const double> CoxeterSystem::root(int index) const {
  if (index < 0 || index >= 2 * t_->n_pos) throw IndexOutOfRange("root index out of range");
  return t_->roots[static_cast<std::size_t>(index)];
}

Element CoxeterSystem::identity() const { return detail::identity_of(*t_); }

Element CoxeterSystem::generator(int i) const {
  if (i < 0 || i >= t_->rank) throw IndexOutOfRange("generator index out of range");
  return detail::ElementAccess::make(t_.get(), t_->gen_action[i], 1);
}

Element CoxeterSystem::from_word(std::span<const int> word) const {
  Element cur = identity();
  for (int a : word) cur = cur.right_mul(a);
  return cur;
}

Element CoxeterSystem::from_word(std::initializer_list<int> word) const {
  return from_word(std::span<const int>(word.begin(), word.size()));
}

Element CoxeterSystem::longest_element(GenSubset I) const { return detail::longest_in(*t_, I); }

Element CoxeterSystem::longest_element() const { return longest_element(full_subset()); }

const std::vector<Element>& CoxeterSystem::elements() const {
  t_->build_elements();
  return t_->elements_cache;
}

bool CoxeterSystem::owns(const Element& e) const {
  return detail::ElementAccess::tables(e) == t_.get();
}

bool is_type_a(const CoxeterSystem& sys) {
  const auto& m = sys.matrix();
  const int n = m.rank();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int expect = (j == i + 1) ? 3 : 2;
      if (m(i, j) != expect) return false;
    }
  }
  return true;
}

}  // namespace cox
