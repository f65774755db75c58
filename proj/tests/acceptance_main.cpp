// Acceptance gate: one criterion per function, one PASS/FAIL line each.
// Every sweep below works through the public library surface and enforces
// the stated exactness and time budget.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "coxkit/bruhat.hpp"
#include "coxkit/coxeter.hpp"
#include "coxkit/parabolic.hpp"
#include "coxkit/symgroup.hpp"

using namespace cox;

namespace {

struct Outcome {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string note;

  void expect(bool ok, const std::string& msg) {
    ++checks;
    if (!ok) {
      if (failures == 0) note = msg;
      ++failures;
    }
  }
};

CoxeterSystem make(const std::string& name) {
  return CoxeterSystem::build(CoxeterSpec::named(name));
}

std::vector<GenSubset> subsets(int rank) {
  std::vector<GenSubset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << rank); ++m)
    out.push_back(GenSubset::from_bits(m));
  return out;
}

std::vector<sn::Permutation> all_perms(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::vector<sn::Permutation> out;
  do {
    out.push_back(sn::Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::string word_of(const Element& e) {
  std::ostringstream out;
  for (int a : e.canonical_word()) out << a + 1;
  return out.str().empty() ? "e" : out.str();
}

// --------------------------------------------------------------------------

Outcome criterion1_worked_example() {
  Outcome o;
  const GenSubset I = GenSubset::of({0, 1, 3, 5});
  const GenSubset J = GenSubset::of({0, 2, 3, 4});
  const sn::Permutation u = sn::Permutation::parse("1342567");
  const sn::Permutation v = sn::Permutation::parse("3471526");

  o.expect(sn::blocks_from_subset(7, I).to_string() == "123|45|67", "I blocks differ");
  o.expect(sn::blocks_from_subset(7, J).to_string() == "12|3456|7", "J blocks differ");

  const sn::IntMatrix mu{3, 3, {1, 2, 0, 1, 1, 0, 0, 1, 1}};
  const sn::IntMatrix mv{3, 3, {0, 2, 1, 1, 1, 0, 1, 1, 0}};
  const sn::IntMatrix du{3, 3, {1, 3, 3, 2, 5, 5, 2, 6, 7}};
  const sn::IntMatrix dv{3, 3, {0, 2, 3, 1, 4, 5, 2, 6, 7}};
  o.expect(sn::coset_matrix(u, I, J) == mu, "M^{I,J}(u) differs");
  o.expect(sn::coset_matrix(v, I, J) == mv, "M^{I,J}(v) differs");
  o.expect(sn::coset_dominance(u, I, J) == du, "D^{I,J}(u) differs");
  o.expect(sn::coset_dominance(v, I, J) == dv, "D^{I,J}(v) differs");

  o.expect(sn::coset_dominance_leq(u, v, I, J), "dominance verdict for u <= v");
  const CoxeterSystem a6 = make("A6");
  const Element gu = sn::to_generic(a6, u);
  const Element gv = sn::to_generic(a6, v);
  o.expect(bruhat_leq(gu, gv), "u <= v fails in the generic engine");
  o.expect(bruhat_leq(max_rep(gu, I, J), max_rep(gv, I, J)), "u_max <= v_max fails");
  return o;
}

Outcome criterion2_minmax_equivalence() {
  Outcome o;
  for (const char* name : {"A2", "A3", "B3", "I2(5)", "I2(7)", "A4", "H3"}) {
    const CoxeterSystem sys = make(name);
    for (GenSubset I : subsets(sys.rank())) {
      for (GenSubset J : subsets(sys.rank())) {
        const auto reps = double_coset_min_reps(sys, I, J);
        std::vector<Element> maxes(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) maxes[i] = max_rep(reps[i], I, J);
        for (std::size_t a = 0; a < reps.size(); ++a)
          for (std::size_t b = 0; b < reps.size(); ++b)
            o.expect(bruhat_leq(reps[a], reps[b]) == bruhat_leq(maxes[a], maxes[b]),
                     std::string(name) + ": disagreement at (" + word_of(reps[a]) + ", " +
                         word_of(reps[b]) + ")");
      }
    }
  }
  return o;
}

Outcome criterion3_extreme_representatives() {
  Outcome o;
  for (const char* name : {"A2", "A3", "B3", "I2(5)", "I2(6)", "I2(7)", "A4", "H3"}) {
    const CoxeterSystem sys = make(name);
    for (GenSubset I : subsets(sys.rank())) {
      const int len_i = sys.longest_element(I).length();
      for (GenSubset J : subsets(sys.rank())) {
        const int len_j = sys.longest_element(J).length();
        for (const Element& b : double_coset_min_reps(sys, I, J)) {
          const Element m = max_rep(b, I, J);
          const int len_k = sys.longest_element(cross_section(b, I, J)).length();
          o.expect(m.length() == len_i - len_k + b.length() + len_j,
                   std::string(name) + ": length formula at b=" + word_of(b));
          bool extremes = true;
          bool dominated = true;
          for (const Element& w : double_coset_elements(b, I, J)) {
            if (w.length() >= m.length() && w != m) extremes = false;
            if (w.length() <= b.length() && w != b) extremes = false;
            if (!bruhat_leq(b, w) || !bruhat_leq(w, m)) dominated = false;
          }
          o.expect(extremes && dominated,
                   std::string(name) + ": extremes fail at b=" + word_of(b));
        }
      }
    }
  }
  return o;
}

Outcome criterion4_oracle_equivalence() {
  Outcome o;
  for (const char* name : {"A3", "B3"}) {
    const CoxeterSystem sys = make(name);
    for (const Element& u : sys.elements())
      for (const Element& v : sys.elements())
        o.expect(bruhat_leq(u, v) == bruhat_leq_oracle(u, v),
                 std::string(name) + ": oracle splits at (" + word_of(u) + ", " + word_of(v) +
                     ")");
  }
  return o;
}

Outcome criterion5_dominance_criterion() {
  Outcome o;
  for (int n : {4, 5}) {
    const CoxeterSystem sys = make("A" + std::to_string(n - 1));
    const auto perms = all_perms(n);
    std::vector<Element> gen(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) gen[i] = sn::to_generic(sys, perms[i]);
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = 0; b < perms.size(); ++b)
        o.expect(sn::dominance_leq(perms[a], perms[b]) == bruhat_leq(gen[a], gen[b]),
                 "S" + std::to_string(n) + ": dominance splits at (" + perms[a].to_string() +
                     ", " + perms[b].to_string() + ")");
  }
  return o;
}

Outcome criterion6_coset_dominance() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    const CoxeterSystem sys = make("A" + std::to_string(n - 1));
    const auto perms = all_perms(n);
    for (GenSubset I : subsets(n - 1)) {
      for (GenSubset J : subsets(n - 1)) {
        std::vector<const sn::Permutation*> reps;
        for (const auto& p : perms)
          if (sn::in_double_coset_min_reps(p, I, J)) reps.push_back(&p);
        std::vector<Element> gen(reps.size());
        std::vector<Element> maxes(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) {
          gen[i] = sn::to_generic(sys, *reps[i]);
          maxes[i] = max_rep(gen[i], I, J);
        }
        for (std::size_t a = 0; a < reps.size(); ++a) {
          for (std::size_t b = 0; b < reps.size(); ++b) {
            const bool dom = sn::coset_dominance_leq(*reps[a], *reps[b], I, J);
            const bool leq = bruhat_leq(gen[a], gen[b]);
            const bool leq_max = bruhat_leq(maxes[a], maxes[b]);
            o.expect(dom == leq && leq == leq_max,
                     "S" + std::to_string(n) + ": criterion splits at (" +
                         reps[a]->to_string() + ", " + reps[b]->to_string() + ")");
          }
        }
      }
    }
  }
  return o;
}

Outcome criterion7_triple_decomposition() {
  Outcome o;
  for (const char* name : {"A3", "B3"}) {
    const CoxeterSystem sys = make(name);
    for (GenSubset I : subsets(sys.rank())) {
      for (GenSubset J : subsets(sys.rank())) {
        std::set<std::vector<std::vector<int>>> triples;
        for (const Element& w : sys.elements()) {
          try {
            const CosetTriple t = decompose_double(w, I, J);
            bool ok = t.a * t.b * t.wj == w;
            ok = ok && t.a.length() + t.b.length() + t.wj.length() == w.length();
            ok = ok && in_double_coset_min_reps(t.b, I, J);
            const GenSubset K = cross_section(t.b, I, J);
            ok = ok && (t.a.right_descents() & K).empty();
            o.expect(ok, std::string(name) + ": triple invalid at w=" + word_of(w));
            triples.insert(
                {t.a.canonical_word(), t.b.canonical_word(), t.wj.canonical_word()});
          } catch (const Error& e) {
            o.expect(false, std::string(name) + ": decompose threw: " + e.what());
          }
        }
        o.expect(triples.size() == sys.order(),
                 std::string(name) + ": decomposition not injective");
      }
    }
  }
  return o;
}

Outcome criterion8_fiber_bound() {
  Outcome o;
  for (const char* name : {"A3", "B3", "I2(6)"}) {
    const CoxeterSystem sys = make(name);
    for (GenSubset I : subsets(sys.rank())) {
      const auto wi = parabolic_elements(sys, I);
      for (GenSubset J : subsets(sys.rank())) {
        const auto reps = double_coset_min_reps(sys, I, J);
        std::vector<GenSubset> cross(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) cross[i] = cross_section(reps[i], I, J);
        for (std::size_t ui = 0; ui < reps.size(); ++ui) {
          std::vector<const Element*> fiber;
          for (const Element& a : wi)
            if ((a.right_descents() & cross[ui]).empty()) fiber.push_back(&a);
          for (std::size_t vi = 0; vi < reps.size(); ++vi) {
            if (!bruhat_leq(reps[ui], reps[vi])) continue;
            const Element target = relative_longest(sys, I, cross[vi]) * reps[vi];
            for (const Element* a : fiber)
              o.expect(bruhat_leq(*a * reps[ui], target),
                       std::string(name) + ": bound fails at a=" + word_of(*a) +
                           " u=" + word_of(reps[ui]) + " v=" + word_of(reps[vi]));
          }
        }
      }
    }
  }
  return o;
}

Outcome criterion9_descent_dichotomy() {
  Outcome o;
  for (const char* name : {"A3", "B3"}) {
    const CoxeterSystem sys = make(name);
    for (GenSubset K : subsets(sys.rank())) {
      for (const Element& x : min_coset_reps(sys, K)) {
        for (int s = 0; s < sys.rank(); ++s) {
          const Element sx = x.left_mul(s);
          bool ok;
          if (sx.length() < x.length()) {
            ok = in_min_coset_reps(sx, K);
          } else {
            ok = in_min_coset_reps(sx, K);
            if (!ok)
              for (int r : K)
                if (sx == x.right_mul(r)) {
                  ok = true;
                  break;
                }
          }
          o.expect(ok, std::string(name) + ": dichotomy fails at x=" + word_of(x) +
                           " s=" + std::to_string(s + 1));
        }
      }
    }
  }
  return o;
}

Outcome criterion10_component_roundtrip() {
  Outcome o;
  for (const char* name : {"A3", "B3"}) {
    const CoxeterSystem sys = make(name);
    for (GenSubset I : subsets(sys.rank())) {
      for (GenSubset J : subsets(sys.rank())) {
        for (const Element& b : double_coset_min_reps(sys, I, J)) {
          const Element m = max_rep(b, I, J);
          const Element mj = parabolic_components_right(m, J).minimal;
          const Element back = parabolic_components_right(mj.inverse(), I).minimal;
          o.expect(back == b.inverse(),
                   std::string(name) + ": roundtrip fails at b=" + word_of(b));
        }
      }
    }
  }
  return o;
}

Outcome criterion11_structural_counts() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const CoxeterSystem sys = make("A" + std::to_string(n));
    std::uint64_t fact = 1;
    for (int k = 2; k <= n + 1; ++k) fact *= static_cast<std::uint64_t>(k);
    o.expect(sys.positive_roots() == n * (n + 1) / 2, "A root count");
    o.expect(sys.order() == fact, "A order");
    o.expect(sys.longest_element().length() == sys.positive_roots(), "A longest");
  }
  {
    const CoxeterSystem b3 = make("B3");
    o.expect(b3.positive_roots() == 9 && b3.order() == 48, "B3 counts");
    o.expect(b3.longest_element().length() == 9, "B3 longest");
  }
  {
    const CoxeterSystem h3 = make("H3");
    o.expect(h3.positive_roots() == 15 && h3.order() == 120, "H3 counts");
    o.expect(h3.longest_element().length() == 15, "H3 longest");
  }
  for (int m : {5, 6, 7}) {
    const CoxeterSystem i2 = make("I2(" + std::to_string(m) + ")");
    o.expect(i2.positive_roots() == m, "I2 root count");
    o.expect(i2.order() == 2ull * m, "I2 order");
    o.expect(i2.longest_element().length() == m, "I2 longest");
  }
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "S7 worked example reproduces exactly", 1.0, criterion1_worked_example},
      {2, "min/max representative comparisons agree on all seven systems", 300.0,
       criterion2_minmax_equivalence},
      {3, "double-coset extremes: uniqueness, dominance, length formula", 120.0,
       criterion3_extreme_representatives},
      {4, "fast Bruhat comparison equals the subword oracle (A3, B3)", 60.0,
       criterion4_oracle_equivalence},
      {5, "dominance matrices decide Bruhat order on S4 and S5", 120.0,
       criterion5_dominance_criterion},
      {6, "block dominance decides minimal-representative order for n <= 5", 180.0,
       criterion6_coset_dominance},
      {7, "triple decomposition: membership, additivity, injectivity (A3, B3)", 60.0,
       criterion7_triple_decomposition},
      {8, "fiber elements stay below the relative-longest translate", 120.0,
       criterion8_fiber_bound},
      {9, "coset-representative descent dichotomy (A3, B3)", 60.0,
       criterion9_descent_dichotomy},
      {10, "max-rep component roundtrip returns the inverse representative", 60.0,
       criterion10_component_roundtrip},
      {11, "positive-root counts and group orders match the classification", 60.0,
       criterion11_structural_counts},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.failures += 1;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_seconds;
    const bool pass = o.failures == 0 && in_budget;
    if (!pass) ++failed;
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title
         << " (checks=" << o.checks << ", " << std::fixed;
    line.precision(2);
    line << secs << "s)";
    if (o.failures > 0) line << " — " << o.failures << " violating case(s); first: " << o.note;
    if (!in_budget) line << " — over time budget of " << c.budget_seconds << "s";
    std::cout << line.str() << "\n";
  }
  if (failed == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria hold\n";
    return 0;
  }
  std::cout << "acceptance: " << failed << " criteria FAILED\n";
  return 1;
}
