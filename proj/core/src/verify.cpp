#include "coxkit/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "coxkit/bruhat.hpp"
#include "coxkit/parabolic.hpp"
#include "coxkit/symgroup.hpp"

namespace cox::verify {

namespace {

// ---------------------------------------------------------------------------
// Plumbing

std::uint64_t fnv64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::mt19937_64 rng_for(const Options& opts, std::string_view prop, std::string_view system) {
  return std::mt19937_64(opts.seed ^ fnv64(prop) ^ (fnv64(system) << 1));
}

std::string word_str(const Element& e) {
  const auto word = e.canonical_word();
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << '.';
    out << word[i] + 1;
  }
  return out.str();
}

std::string subset_str(GenSubset s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int g : s) {
    if (!first) out << ',';
    out << g + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

struct Tally {
  PropertyResult res;

  Tally(std::string prop, std::string system) {
    res.property = std::move(prop);
    res.system = std::move(system);
  }

  template <typename NoteFn>
  void expect(bool cond, NoteFn&& note) {
    ++res.checked;
    if (!cond) {
      if (res.failures == 0) res.note = note();
      ++res.failures;
    }
  }

  void expect(bool cond, const char* note) {
    expect(cond, [note] { return std::string(note); });
  }
};

std::vector<GenSubset> all_subsets(int rank) {
  std::vector<GenSubset> out;
  out.reserve(std::size_t{1} << rank);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << rank); ++m)
    out.push_back(GenSubset::from_bits(m));
  return out;
}

std::vector<std::pair<GenSubset, GenSubset>> ij_plan(int rank, const Options& opts,
                                                     std::mt19937_64& rng) {
  const std::uint64_t n = std::uint64_t{1} << rank;
  std::vector<std::pair<GenSubset, GenSubset>> out;
  if (!opts.sampled || n * n <= static_cast<std::uint64_t>(opts.ij_samples)) {
    out.reserve(n * n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        out.emplace_back(GenSubset::from_bits(a), GenSubset::from_bits(b));
  } else {
    out.reserve(static_cast<std::size_t>(opts.ij_samples));
    for (int k = 0; k < opts.ij_samples; ++k)
      out.emplace_back(GenSubset::from_bits(rng() % n), GenSubset::from_bits(rng() % n));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pair_plan(std::size_t n, const Options& opts,
                                                           std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (!opts.sampled || n * n <= static_cast<std::size_t>(opts.pair_samples)) {
    out.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out.emplace_back(a, b);
  } else {
    out.reserve(static_cast<std::size_t>(opts.pair_samples));
    for (int k = 0; k < opts.pair_samples; ++k) out.emplace_back(rng() % n, rng() % n);
  }
  return out;
}

bool word_within(const Element& w, GenSubset I) {
  for (int a : w.canonical_word())
    if (!I.contains(a)) return false;
  return true;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

struct KnownCounts {
  std::uint64_t order;
  int pos_roots;
};

std::optional<KnownCounts> known_counts(const std::string& name) {
  if (name.rfind("I2(", 0) == 0) {
    const int m = std::stoi(name.substr(3));
    return KnownCounts{2ull * m, m};
  }
  if (name.size() < 2) return std::nullopt;
  const char family = name[0];
  int n = 0;
  try {
    n = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  switch (family) {
    case 'A':
      return KnownCounts{factorial(n + 1), n * (n + 1) / 2};
    case 'B':
      return KnownCounts{(std::uint64_t{1} << n) * factorial(n), n * n};
    case 'D':
      return KnownCounts{(std::uint64_t{1} << (n - 1)) * factorial(n), n * (n - 1)};
    case 'E':
      if (n == 6) return KnownCounts{51840, 36};
      return std::nullopt;
    case 'F':
      if (n == 4) return KnownCounts{1152, 24};
      return std::nullopt;
    case 'H':
      if (n == 3) return KnownCounts{120, 15};
      if (n == 4) return KnownCounts{14400, 60};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Core suites

PropertyResult check_length_word(const CoxeterSystem& sys) {
  Tally t("core/length-canonical-word", sys.name());
  for (const Element& x : sys.elements()) {
    const auto word = x.canonical_word();
    bool ok = static_cast<int>(word.size()) == x.length();
    ok = ok && sys.from_word(word) == x;
    t.expect(ok, [&] { return "word/length mismatch at " + word_str(x); });
  }
  return t.res;
}

PropertyResult check_length_product_laws(const CoxeterSystem& sys, const Options& opts) {
  Tally t("core/length-product-laws", sys.name());
  auto rng = rng_for(opts, t.res.property, sys.name());
  const auto& elems = sys.elements();
  for (auto [a, b] : pair_plan(elems.size(), opts, rng)) {
    const Element& x = elems[a];
    const Element& y = elems[b];
    const Element z = x * y;
    const bool ok = z.length() <= x.length() + y.length() &&
                    (z.length() & 1) == ((x.length() + y.length()) & 1);
    t.expect(ok, [&] { return "length law fails at " + word_str(x) + " * " + word_str(y); });
  }
  return t.res;
}

PropertyResult check_descent_length(const CoxeterSystem& sys) {
  Tally t("core/descent-length-agreement", sys.name());
  for (const Element& x : sys.elements()) {
    for (int i = 0; i < sys.rank(); ++i) {
      const bool right_ok = x.has_right_descent(i) == (x.right_mul(i).length() < x.length());
      const bool left_ok = x.has_left_descent(i) == (x.left_mul(i).length() < x.length());
      t.expect(right_ok && left_ok,
               [&] { return "descent test disagrees with length at " + word_str(x); });
    }
  }
  return t.res;
}

PropertyResult check_structure_counts(const CoxeterSystem& sys) {
  Tally t("core/structure-counts", sys.name());
  const Element w0 = sys.longest_element();
  t.expect(w0.length() == sys.positive_roots(), "l(w0) != number of positive roots");
  t.expect(w0.left_descents() == sys.full_subset() && w0.right_descents() == sys.full_subset(),
           "w0 must descend on every side");
  if (const auto known = known_counts(sys.name())) {
    t.expect(sys.order() == known->order, [&] {
      return "order " + std::to_string(sys.order()) + " != expected " +
             std::to_string(known->order);
    });
    t.expect(sys.positive_roots() == known->pos_roots, "positive root count differs from type");
  }
  // Table-level gate, repeated here so a verify run re-certifies the build.
  for (int i = 0; i < sys.rank(); ++i) {
    const Element g = sys.generator(i);
    t.expect(g * g == sys.identity(), "generator is not an involution");
    for (int j = i + 1; j < sys.rank(); ++j) {
      Element braid = sys.identity();
      for (int rep = 0; rep < sys.matrix()(i, j); ++rep)
        braid = braid * sys.generator(i) * sys.generator(j);
      t.expect(braid == sys.identity(), "braid relation fails");
    }
  }
  return t.res;
}

// ---------------------------------------------------------------------------
// Bruhat suites

PropertyResult check_oracle_agreement(const CoxeterSystem& sys) {
  Tally t("bruhat/oracle-agreement", sys.name());
  const auto& elems = sys.elements();
  for (const Element& u : elems) {
    for (const Element& v : elems) {
      t.expect(bruhat_leq(u, v) == bruhat_leq_oracle(u, v),
               [&] { return "oracle disagrees at (" + word_str(u) + ", " + word_str(v) + ")"; });
    }
  }
  return t.res;
}

PropertyResult check_order_laws(const CoxeterSystem& sys, const Options& opts) {
  Tally t("bruhat/order-laws", sys.name());
  const auto& elems = sys.elements();
  for (const Element& x : elems) t.expect(bruhat_leq(x, x), "reflexivity fails");
  auto rng = rng_for(opts, t.res.property, sys.name());
  for (auto [a, b] : pair_plan(elems.size(), opts, rng)) {
    if (a == b) continue;
    t.expect(!(bruhat_leq(elems[a], elems[b]) && bruhat_leq(elems[b], elems[a])),
             [&] { return "antisymmetry fails at (" + word_str(elems[a]) + ", " +
                          word_str(elems[b]) + ")"; });
  }
  const std::size_t n = elems.size();
  if (!opts.sampled && n * n * n <= 200'000) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          if (bruhat_leq(elems[a], elems[b]) && bruhat_leq(elems[b], elems[c]))
            t.expect(bruhat_leq(elems[a], elems[c]), "transitivity fails");
        }
  } else {
    for (int k = 0; k < opts.triple_samples; ++k) {
      const Element& x = elems[rng() % n];
      const Element& y = elems[rng() % n];
      const Element& z = elems[rng() % n];
      if (bruhat_leq(x, y) && bruhat_leq(y, z)) t.expect(bruhat_leq(x, z), "transitivity fails");
    }
  }
  return t.res;
}

PropertyResult check_inverse_automorphism(const CoxeterSystem& sys, const Options& opts) {
  Tally t("bruhat/inverse-automorphism", sys.name());
  const auto& elems = sys.elements();
  std::vector<Element> inv;
  inv.reserve(elems.size());
  for (const Element& x : elems) inv.push_back(x.inverse());
  auto rng = rng_for(opts, t.res.property, sys.name());
  for (auto [a, b] : pair_plan(elems.size(), opts, rng)) {
    t.expect(bruhat_leq(elems[a], elems[b]) == bruhat_leq(inv[a], inv[b]),
             [&] { return "inverse map not order-preserving at (" + word_str(elems[a]) + ", " +
                          word_str(elems[b]) + ")"; });
  }
  return t.res;
}

PropertyResult check_length_monotone(const CoxeterSystem& sys, const Options& opts) {
  Tally t("bruhat/length-monotone", sys.name());
  const auto& elems = sys.elements();
  auto rng = rng_for(opts, t.res.property, sys.name());
  for (auto [a, b] : pair_plan(elems.size(), opts, rng)) {
    if (!bruhat_leq(elems[a], elems[b])) continue;
    t.expect(elems[a].length() <= elems[b].length(), "length not monotone");
  }
  return t.res;
}

PropertyResult check_extrema(const CoxeterSystem& sys) {
  Tally t("bruhat/extrema", sys.name());
  const Element e = sys.identity();
  const Element w0 = sys.longest_element();
  for (const Element& x : sys.elements())
    t.expect(bruhat_leq(e, x) && bruhat_leq(x, w0),
             [&] { return "extrema fail at " + word_str(x); });
  return t.res;
}

PropertyResult check_translation(const CoxeterSystem& sys) {
  Tally t("bruhat/right-translation", sys.name());
  const auto& elems = sys.elements();
  for (const Element& w : elems) {
    for (const Element& g : elems) {
      for (const Element& x : elems) {
        const Element wx = w * x;
        const Element gx = g * x;
        if (wx.length() != w.length() + x.length()) continue;
        if (gx.length() != g.length() + x.length()) continue;
        t.expect(bruhat_leq(w, g) == bruhat_leq(wx, gx), [&] {
          return "translation fails at (" + word_str(w) + ", " + word_str(g) + ", " +
                 word_str(x) + ")";
        });
      }
    }
  }
  return t.res;
}

PropertyResult check_projection_monotone(const CoxeterSystem& sys) {
  Tally t("bruhat/projection-monotone", sys.name());
  const auto& elems = sys.elements();
  for (GenSubset I : all_subsets(sys.rank())) {
    std::vector<Element> proj;
    proj.reserve(elems.size());
    for (const Element& w : elems) proj.push_back(parabolic_components_right(w, I).minimal);
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = 0; b < elems.size(); ++b) {
        if (!bruhat_leq(elems[a], elems[b])) continue;
        t.expect(bruhat_leq(proj[a], proj[b]), [&] {
          return "projection not monotone for I=" + subset_str(I) + " at (" +
                 word_str(elems[a]) + ", " + word_str(elems[b]) + ")";
        });
      }
    }
  }
  return t.res;
}

// ---------------------------------------------------------------------------
// Parabolic suites

PropertyResult check_components(const CoxeterSystem& sys) {
  Tally t("parabolic/components", sys.name());
  for (GenSubset I : all_subsets(sys.rank())) {
    for (const Element& w : sys.elements()) {
      const auto [minimal, sub] = parabolic_components_right(w, I);
      bool ok = minimal * sub == w;
      ok = ok && minimal.length() + sub.length() == w.length();
      ok = ok && in_min_coset_reps(minimal, I);
      ok = ok && word_within(sub, I);
      t.expect(ok, [&, &m = minimal] {
        return "components fail for I=" + subset_str(I) + " at " + word_str(w) + " (got " +
               word_str(m) + ")";
      });
    }
  }
  return t.res;
}

PropertyResult check_coset_partition(const CoxeterSystem& sys, const Options& opts) {
  Tally t("parabolic/coset-partition", sys.name());
  const std::size_t order = sys.order();
  for (GenSubset I : all_subsets(sys.rank())) {
    const std::size_t reps = min_coset_reps(sys, I).size();
    const std::size_t sub = parabolic_elements(sys, I).size();
    t.expect(reps * sub == order,
             [&] { return "|W^I| * |W_I| != |W| for I=" + subset_str(I); });
  }
  auto rng = rng_for(opts, t.res.property, sys.name());
  for (auto [I, J] : ij_plan(sys.rank(), opts, rng)) {
    const auto wi = parabolic_elements(sys, I);
    const auto minimal_j = min_coset_reps(sys, J);
    const std::unordered_set<Element> wj_set(minimal_j.begin(), minimal_j.end());
    std::unordered_set<Element> seen;
    bool ok = true;
    for (const Element& b : double_coset_min_reps(sys, I, J)) {
      const GenSubset cross = cross_section(b, I, J);
      for (const Element& a : wi) {
        if (!(a.right_descents() & cross).empty()) continue;
        const Element p = a * b;
        if (!wj_set.count(p) || !seen.insert(p).second) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    ok = ok && seen.size() == wj_set.size();
    t.expect(ok, [&] {
      return "fibered partition of W^J fails for I=" + subset_str(I) + " J=" + subset_str(J);
    });
  }
  return t.res;
}

PropertyResult check_decompose(const CoxeterSystem& sys, const Options& opts) {
  Tally t("parabolic/decompose-audit", sys.name());
  auto rng = rng_for(opts, t.res.property, sys.name());
  for (auto [I, J] : ij_plan(sys.rank(), opts, rng)) {
    std::unordered_set<std::string> keys;
    bool ok = true;
    std::string note;
    for (const Element& w : sys.elements()) {
      try {
        const CosetTriple triple = decompose_double(w, I, J);
        std::ostringstream key;
        for (std::int32_t v : triple.a.root_perm()) key << v << ',';
        key << '|';
        for (std::int32_t v : triple.b.root_perm()) key << v << ',';
        key << '|';
        for (std::int32_t v : triple.wj.root_perm()) key << v << ',';
        if (!keys.insert(key.str()).second) {
          ok = false;
          note = "triple repeats at " + word_str(w);
          break;
        }
        if (!(triple.a * triple.b * triple.wj == w)) {
          ok = false;
          note = "triple does not reconstruct " + word_str(w);
          break;
        }
      } catch (const Error& err) {
        ok = false;
        note = std::string("decompose threw: ") + err.what();
        break;
      }
    }
    t.expect(ok, [&] {
      return note + " (I=" + subset_str(I) + " J=" + subset_str(J) + ")";
    });
  }
  return t.res;
}

PropertyResult check_coset_extremes(const CoxeterSystem& sys, const Options& opts) {
  Tally t("parabolic/coset-extremes", sys.name());
  auto rng = rng_for(opts, t.res.property, sys.name());
  for (auto [I, J] : ij_plan(sys.rank(), opts, rng)) {
    const int len_w0i = sys.longest_element(I).length();
    const int len_w0j = sys.longest_element(J).length();
    for (const Element& b : double_coset_min_reps(sys, I, J)) {
      const auto coset = double_coset_elements(b, I, J);
      Element m = max_rep(b, I, J);
      if (opts.fault == Fault::corrupt_max_rep && coset.size() > 1) m = b;
      const int len_w0k = sys.longest_element(cross_section(b, I, J)).length();
      t.expect(m.length() == len_w0i - len_w0k + b.length() + len_w0j, [&] {
        return "max-rep length formula fails at b=" + word_str(b) + " I=" + subset_str(I) +
               " J=" + subset_str(J);
      });
      bool unique_max = true;
      bool unique_min = true;
      bool dominance_ok = true;
      for (const Element& w : coset) {
        if (w.length() >= m.length() && w != m) unique_max = false;
        if (w.length() <= b.length() && w != b) unique_min = false;
        if (!bruhat_leq(b, w) || !bruhat_leq(w, m)) dominance_ok = false;
      }
      t.expect(unique_max && unique_min && dominance_ok, [&] {
        return "coset extremes fail at b=" + word_str(b) + " I=" + subset_str(I) +
               " J=" + subset_str(J);
      });
    }
  }
  return t.res;
}

PropertyResult check_relative_longest(const CoxeterSystem& sys) {
  Tally t("parabolic/relative-longest", sys.name());
  for (GenSubset I : all_subsets(sys.rank())) {
    const auto wi = parabolic_elements(sys, I);
    // submask enumeration over K within I
    const std::uint64_t top = I.bits();
    std::uint64_t sub = top;
    for (;;) {
      const GenSubset K = GenSubset::from_bits(sub);
      const Element rl = relative_longest(sys, I, K);
      bool ok = word_within(rl, I) && (rl.right_descents() & K).empty();
      for (const Element& x : wi) {
        if (!(x.right_descents() & K).empty()) continue;
        if (x.length() > rl.length() || (x.length() == rl.length() && x != rl)) {
          ok = false;
          break;
        }
      }
      t.expect(ok, [&] {
        return "relative longest fails for I=" + subset_str(I) + " K=" + subset_str(K);
      });
      if (sub == 0) break;
      sub = (sub - 1) & top;
    }
  }
  return t.res;
}

PropertyResult check_fiber_bound(const CoxeterSystem& sys, const Options& opts) {
  Tally t("parabolic/fiber-bound", sys.name());
  auto rng = rng_for(opts, t.res.property, sys.name());
  for (auto [I, J] : ij_plan(sys.rank(), opts, rng)) {
    const auto reps = double_coset_min_reps(sys, I, J);
    const auto wi = parabolic_elements(sys, I);
    std::vector<GenSubset> cross(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) cross[i] = cross_section(reps[i], I, J);
    for (std::size_t ui = 0; ui < reps.size(); ++ui) {
      std::vector<const Element*> fiber;
      for (const Element& a : wi)
        if ((a.right_descents() & cross[ui]).empty()) fiber.push_back(&a);
      for (std::size_t vi = 0; vi < reps.size(); ++vi) {
        if (!bruhat_leq(reps[ui], reps[vi])) continue;
        const Element target = relative_longest(sys, I, cross[vi]) * reps[vi];
        for (const Element* a : fiber) {
          t.expect(bruhat_leq(*a * reps[ui], target), [&] {
            return "fiber bound fails: a=" + word_str(*a) + " u=" + word_str(reps[ui]) +
                   " v=" + word_str(reps[vi]) + " I=" + subset_str(I) + " J=" + subset_str(J);
          });
        }
      }
    }
  }
  return t.res;
}

PropertyResult check_minmax_agreement(const CoxeterSystem& sys, const Options& opts) {
  Tally t("parabolic/minmax-agreement", sys.name());
  auto rng = rng_for(opts, t.res.property, sys.name());
  for (auto [I, J] : ij_plan(sys.rank(), opts, rng)) {
    const auto reps = double_coset_min_reps(sys, I, J);
    std::vector<Element> maxes(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) maxes[i] = max_rep(reps[i], I, J);
    for (std::size_t a = 0; a < reps.size(); ++a) {
      for (std::size_t b = 0; b < reps.size(); ++b) {
        t.expect(bruhat_leq(reps[a], reps[b]) == bruhat_leq(maxes[a], maxes[b]), [&] {
          return "min/max comparisons disagree at u=" + word_str(reps[a]) +
                 " v=" + word_str(reps[b]) + " I=" + subset_str(I) + " J=" + subset_str(J);
        });
      }
    }
  }
  return t.res;
}

PropertyResult check_maxrep_roundtrip(const CoxeterSystem& sys, const Options& opts) {
  Tally t("parabolic/maxrep-component-roundtrip", sys.name());
  auto rng = rng_for(opts, t.res.property, sys.name());
  for (auto [I, J] : ij_plan(sys.rank(), opts, rng)) {
    for (const Element& b : double_coset_min_reps(sys, I, J)) {
      const Element m = max_rep(b, I, J);
      const Element mj = parabolic_components_right(m, J).minimal;
      const Element back = parabolic_components_right(mj.inverse(), I).minimal;
      t.expect(back == b.inverse(), [&] {
        return "component roundtrip fails at b=" + word_str(b) + " I=" + subset_str(I) +
               " J=" + subset_str(J);
      });
    }
  }
  return t.res;
}

PropertyResult check_descent_dichotomy(const CoxeterSystem& sys) {
  Tally t("parabolic/descent-dichotomy", sys.name());
  for (GenSubset K : all_subsets(sys.rank())) {
    for (const Element& x : min_coset_reps(sys, K)) {
      for (int s = 0; s < sys.rank(); ++s) {
        const Element sx = x.left_mul(s);
        bool ok;
        if (sx.length() < x.length()) {
          ok = in_min_coset_reps(sx, K);
        } else {
          ok = in_min_coset_reps(sx, K);
          if (!ok) {
            for (int r : K) {
              if (sx == x.right_mul(r)) {
                ok = true;
                break;
              }
            }
          }
        }
        t.expect(ok, [&] {
          return "descent dichotomy fails for K=" + subset_str(K) + " x=" + word_str(x) +
                 " s=" + std::to_string(s + 1);
        });
      }
    }
  }
  return t.res;
}

// ---------------------------------------------------------------------------
// Symmetric-group suites

std::vector<sn::Permutation> all_permutations(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::vector<sn::Permutation> out;
  do {
    out.push_back(sn::Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

PropertyResult check_sn_dominance_vs_generic(int n, const CoxeterSystem& sys) {
  Tally t("symgroup/dominance-vs-generic", "S" + std::to_string(n));
  const auto perms = all_permutations(n);
  std::vector<Element> generic;
  generic.reserve(perms.size());
  for (const auto& p : perms) generic.push_back(sn::to_generic(sys, p));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b)
      t.expect(sn::dominance_leq(perms[a], perms[b]) == bruhat_leq(generic[a], generic[b]),
               [&] {
                 return "dominance disagrees with Bruhat at (" + perms[a].to_string() + ", " +
                        perms[b].to_string() + ")";
               });
  return t.res;
}

PropertyResult check_sn_coset_dominance(int n, const CoxeterSystem& sys) {
  Tally t("symgroup/coset-dominance-agreement", "S" + std::to_string(n));
  const auto perms = all_permutations(n);
  for (GenSubset I : all_subsets(n - 1)) {
    for (GenSubset J : all_subsets(n - 1)) {
      std::vector<const sn::Permutation*> reps;
      for (const auto& p : perms)
        if (sn::in_double_coset_min_reps(p, I, J)) reps.push_back(&p);
      std::vector<Element> generic(reps.size());
      std::vector<Element> maxes(reps.size());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        generic[i] = sn::to_generic(sys, *reps[i]);
        maxes[i] = max_rep(generic[i], I, J);
      }
      for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = 0; b < reps.size(); ++b) {
          const bool dom = sn::coset_dominance_leq(*reps[a], *reps[b], I, J);
          const bool leq = bruhat_leq(generic[a], generic[b]);
          const bool leq_max = bruhat_leq(maxes[a], maxes[b]);
          t.expect(dom == leq && leq == leq_max, [&] {
            return "coset dominance disagreement at (" + reps[a]->to_string() + ", " +
                   reps[b]->to_string() + ") I=" + subset_str(I) + " J=" + subset_str(J);
          });
        }
      }
    }
  }
  return t.res;
}

PropertyResult check_sn_submatrix(int n) {
  Tally t("symgroup/submatrix-identity", "S" + std::to_string(n));
  const auto perms = all_permutations(n);
  const auto subsets = all_subsets(n - 1);
  for (const auto& w : perms) {
    const sn::DominanceMatrix full = sn::dominance(w);
    for (GenSubset I : subsets) {
      const auto rows = sn::blocks_from_subset(n, I);
      for (GenSubset J : subsets) {
        const auto cols = sn::blocks_from_subset(n, J);
        const sn::DominanceMatrix block = sn::coset_dominance(w, I, J);
        bool ok = block.rows == rows.block_count() && block.cols == cols.block_count();
        for (int i = 0; ok && i < block.rows; ++i)
          for (int j = 0; ok && j < block.cols; ++j)
            if (block.at(i, j) != full.at(rows.ends[i] - 1, cols.ends[j] - 1)) ok = false;
        t.expect(ok, [&] {
          return "block dominance is not the boundary submatrix at w=" + w.to_string() +
                 " I=" + subset_str(I) + " J=" + subset_str(J);
        });
      }
    }
  }
  return t.res;
}

PropertyResult check_sn_descent_convention(int n, const CoxeterSystem& sys) {
  Tally t("symgroup/descent-convention", "S" + std::to_string(n));
  for (const auto& w : all_permutations(n)) {
    const Element x = sn::to_generic(sys, w);
    bool ok = w.left_descents() == x.left_descents();
    ok = ok && w.right_descents() == x.right_descents();
    ok = ok && w.inversions() == x.length();
    ok = ok && sn::from_generic(sys, x) == w;
    t.expect(ok, [&] { return "bridge convention fails at " + w.to_string(); });
  }
  return t.res;
}

PropertyResult check_sn_minrep_characterization(int n) {
  Tally t("symgroup/minrep-characterization", "S" + std::to_string(n));
  const auto perms = all_permutations(n);
  const auto subsets = all_subsets(n - 1);
  for (const auto& w : perms) {
    const auto inv = w.inverse();
    for (GenSubset I : subsets) {
      const auto rows = sn::blocks_from_subset(n, I);
      for (GenSubset J : subsets) {
        const auto cols = sn::blocks_from_subset(n, J);
        bool increasing = true;
        for (const auto& [lo, hi] : rows.blocks)
          for (int k = lo; k < hi && increasing; ++k)
            if (w(k) > w(k + 1)) increasing = false;
        for (const auto& [lo, hi] : cols.blocks)
          for (int v = lo; v < hi && increasing; ++v)
            if (inv(v) > inv(v + 1)) increasing = false;
        t.expect(increasing == sn::in_double_coset_min_reps(w, I, J), [&] {
          return "one-line minimality test disagrees at w=" + w.to_string() +
                 " I=" + subset_str(I) + " J=" + subset_str(J);
        });
      }
    }
  }
  return t.res;
}

PropertyResult check_sn_coset_invariance(int n, const CoxeterSystem& sys) {
  Tally t("symgroup/coset-matrix-invariance", "S" + std::to_string(n));
  const auto perms = all_permutations(n);
  std::vector<Element> generic;
  generic.reserve(perms.size());
  for (const auto& p : perms) generic.push_back(sn::to_generic(sys, p));
  for (GenSubset I : all_subsets(n - 1)) {
    for (GenSubset J : all_subsets(n - 1)) {
      std::vector<Element> mins(perms.size());
      for (std::size_t i = 0; i < perms.size(); ++i)
        mins[i] = decompose_double(generic[i], I, J).b;
      for (std::size_t a = 0; a < perms.size(); ++a) {
        for (std::size_t b = 0; b < perms.size(); ++b) {
          t.expect(sn::same_double_coset(perms[a], perms[b], I, J) == (mins[a] == mins[b]),
                   [&] {
                     return "coset matrix invariance fails at (" + perms[a].to_string() + ", " +
                            perms[b].to_string() + ") I=" + subset_str(I) +
                            " J=" + subset_str(J);
                   });
        }
      }
    }
  }
  return t.res;
}

PropertyResult check_sn_matrix_structure(int n) {
  Tally t("symgroup/matrix-structure", "S" + std::to_string(n));
  const auto perms = all_permutations(n);
  const auto subsets = all_subsets(n - 1);
  for (const auto& w : perms) {
    const sn::DominanceMatrix d = sn::dominance(w);
    bool ok = d.at(n - 1, n - 1) == n;
    for (int i = 0; ok && i < n; ++i) {
      for (int j = 0; ok && j < n; ++j) {
        const int left = j > 0 ? d.at(i, j - 1) : 0;
        const int up = i > 0 ? d.at(i - 1, j) : 0;
        if (d.at(i, j) < left || d.at(i, j) - left > 1) ok = false;
        if (d.at(i, j) < up || d.at(i, j) - up > 1) ok = false;
      }
    }
    t.expect(ok, [&] { return "dominance matrix structure fails at " + w.to_string(); });
  }
  for (const auto& w : perms) {
    for (GenSubset I : subsets) {
      const auto rows = sn::blocks_from_subset(n, I);
      for (GenSubset J : subsets) {
        const auto cols = sn::blocks_from_subset(n, J);
        const sn::CountMatrix m = sn::coset_matrix(w, I, J);
        bool ok = true;
        for (int i = 0; ok && i < m.rows; ++i) {
          int sum = 0;
          for (int j = 0; j < m.cols; ++j) sum += m.at(i, j);
          if (sum != rows.blocks[i].second - rows.blocks[i].first + 1) ok = false;
        }
        for (int j = 0; ok && j < m.cols; ++j) {
          int sum = 0;
          for (int i = 0; i < m.rows; ++i) sum += m.at(i, j);
          if (sum != cols.blocks[j].second - cols.blocks[j].first + 1) ok = false;
        }
        t.expect(ok, [&] {
          return "count matrix margins fail at w=" + w.to_string() + " I=" + subset_str(I) +
                 " J=" + subset_str(J);
        });
      }
    }
  }
  return t.res;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<PropertyResult> check_system(const CoxeterSystem& sys, const Options& opts) {
  std::vector<PropertyResult> out;
  const std::size_t order = sys.order();

  out.push_back(check_length_word(sys));
  out.push_back(check_length_product_laws(sys, opts));
  out.push_back(check_descent_length(sys));
  out.push_back(check_structure_counts(sys));

  if (order <= 48) out.push_back(check_oracle_agreement(sys));
  out.push_back(check_order_laws(sys, opts));
  out.push_back(check_inverse_automorphism(sys, opts));
  out.push_back(check_length_monotone(sys, opts));
  out.push_back(check_extrema(sys));
  if (order <= 48) out.push_back(check_translation(sys));
  if (order <= 48) out.push_back(check_projection_monotone(sys));

  out.push_back(check_components(sys));
  out.push_back(check_coset_partition(sys, opts));
  out.push_back(check_decompose(sys, opts));
  out.push_back(check_coset_extremes(sys, opts));
  out.push_back(check_relative_longest(sys));
  if (order <= 48) out.push_back(check_fiber_bound(sys, opts));
  out.push_back(check_minmax_agreement(sys, opts));
  out.push_back(check_maxrep_roundtrip(sys, opts));
  if (order <= 48) out.push_back(check_descent_dichotomy(sys));

  return out;
}

std::vector<PropertyResult> check_symmetric_groups(const Options& opts) {
  (void)opts;
  std::vector<PropertyResult> out;
  std::unordered_map<int, CoxeterSystem> systems;
  auto sys_for = [&](int n) -> const CoxeterSystem& {
    auto it = systems.find(n);
    if (it == systems.end())
      it = systems.emplace(n, CoxeterSystem::build(CoxeterSpec::named("A" + std::to_string(n - 1))))
               .first;
    return it->second;
  };

  for (int n = 4; n <= 5; ++n) out.push_back(check_sn_dominance_vs_generic(n, sys_for(n)));
  for (int n = 2; n <= 5; ++n) out.push_back(check_sn_coset_dominance(n, sys_for(n)));
  for (int n = 2; n <= 6; ++n) out.push_back(check_sn_submatrix(n));
  out.push_back(check_sn_descent_convention(5, sys_for(5)));
  for (int n = 2; n <= 5; ++n) out.push_back(check_sn_minrep_characterization(n));
  out.push_back(check_sn_coset_invariance(4, sys_for(4)));
  for (int n = 2; n <= 5; ++n) out.push_back(check_sn_matrix_structure(n));
  return out;
}

ScopeReport run_scope(const std::vector<CoxeterSystem>& systems, bool include_symgroup,
                      const Options& opts) {
  ScopeReport report;
  for (const CoxeterSystem& sys : systems) {
    auto results = check_system(sys, opts);
    report.results.insert(report.results.end(), results.begin(), results.end());
  }
  if (include_symgroup) {
    auto results = check_symmetric_groups(opts);
    report.results.insert(report.results.end(), results.begin(), results.end());
  }
  for (const PropertyResult& r : report.results) {
    report.total_checked += r.checked;
    report.total_failures += r.failures;
  }
  return report;
}

const std::vector<std::string>& default_scope_names() {
  static const std::vector<std::string> names = {"A2", "A3", "B3", "I2(5)", "I2(7)", "A4", "H3"};
  return names;
}

}  // namespace cox::verify
