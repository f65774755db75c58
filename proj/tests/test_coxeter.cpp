#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include "coxkit/coxeter.hpp"

using namespace cox;

namespace {

CoxeterSystem make(const std::string& name) {
  return CoxeterSystem::build(CoxeterSpec::named(name));
}

}  // namespace

TEST_CASE("named types produce the expected root counts and orders") {
  struct Row {
    const char* name;
    int pos_roots;
    std::size_t order;
  };
  const Row rows[] = {
      {"A1", 1, 2},    {"A2", 3, 6},     {"A3", 6, 24},    {"A4", 10, 120},
      {"B2", 4, 8},    {"B3", 9, 48},    {"D4", 12, 192},  {"I2(5)", 5, 10},
      {"I2(6)", 6, 12}, {"I2(7)", 7, 14}, {"G2", 6, 12},    {"H3", 15, 120},
      {"F4", 24, 1152},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    const CoxeterSystem sys = make(r.name);
    CHECK(sys.positive_roots() == r.pos_roots);
    CHECK(sys.order() == r.order);
    CHECK(sys.longest_element().length() == r.pos_roots);
  }
}

TEST_CASE("H4 and E6 report the right structure without full sweeps") {
  const CoxeterSystem h4 = make("H4");
  CHECK(h4.positive_roots() == 60);
  CHECK(h4.longest_element().length() == 60);
  const CoxeterSystem e6 = make("E6");
  CHECK(e6.positive_roots() == 36);
  CHECK(e6.longest_element().length() == 36);
}

TEST_CASE("bad names and bad matrices are rejected") {
  CHECK_THROWS_AS(CoxeterSpec::named("Q9"), ParseFailure);
  CHECK_THROWS_AS(CoxeterSpec::named("A0"), ParseFailure);
  CHECK_THROWS_AS(CoxeterSpec::named("E7"), ParseFailure);
  CHECK_THROWS_AS(CoxeterSpec::named("I2(1)"), ParseFailure);
  CHECK_THROWS_AS(CoxeterSpec::named("I2(0)"), InfiniteOrTooLarge);

  // asymmetric
  CHECK_THROWS_AS(CoxeterSpec::from_matrix(CoxeterMatrix(2, {1, 3, 4, 1})), InvalidMatrix);
  // diagonal must be 1
  CHECK_THROWS_AS(CoxeterSpec::from_matrix(CoxeterMatrix(2, {2, 3, 3, 1})), InvalidMatrix);
  // off-diagonal below 2
  CHECK_THROWS_AS(CoxeterSpec::from_matrix(CoxeterMatrix(2, {1, 1, 1, 1})), InvalidMatrix);
  // 0 is the infinity marker
  CHECK_THROWS_AS(CoxeterSpec::from_matrix(CoxeterMatrix(2, {1, 0, 0, 1})), InfiniteOrTooLarge);
}

TEST_CASE("affine input runs into the root cap") {
  // The triangle of 3-bonds has an unbounded root closure.
  const CoxeterMatrix affine(3, {1, 3, 3, 3, 1, 3, 3, 3, 1});
  BuildLimits caps;
  caps.max_roots = 200;
  CHECK_THROWS_AS(CoxeterSystem::build(CoxeterSpec::from_matrix(affine), caps),
                  InfiniteOrTooLarge);
}

TEST_CASE("element cap aborts enumeration") {
  BuildLimits caps;
  caps.max_elements = 100;
  const CoxeterSystem sys = CoxeterSystem::build(CoxeterSpec::named("A4"), caps);
  CHECK_THROWS_AS(sys.elements(), InfiniteOrTooLarge);
}

TEST_CASE("matrix files parse, reject infinity, and match named systems") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();

  const fs::path good = dir / "coxkit_test_b3.mat";
  {
    std::ofstream out(good);
    out << "3\n1 3 2\n3 1 4\n2 4 1\n";
  }
  const CoxeterSystem sys = CoxeterSystem::build(CoxeterSpec::from_matrix_file(good));
  CHECK(sys.positive_roots() == 9);
  CHECK(sys.order() == 48);
  fs::remove(good);

  const fs::path inf = dir / "coxkit_test_inf.mat";
  {
    std::ofstream out(inf);
    out << "2\n1 0\n0 1\n";
  }
  CHECK_THROWS_AS(CoxeterSpec::from_matrix_file(inf), InfiniteOrTooLarge);
  fs::remove(inf);

  const fs::path junk = dir / "coxkit_test_junk.mat";
  {
    std::ofstream out(junk);
    out << "3\n1 3\n";
  }
  CHECK_THROWS_AS(CoxeterSpec::from_matrix_file(junk), ParseFailure);
  fs::remove(junk);

  CHECK_THROWS_AS(CoxeterSpec::from_matrix_file(dir / "coxkit_no_such_file.mat"), ParseFailure);
}

TEST_CASE("identity and generators behave") {
  const CoxeterSystem a2 = make("A2");
  CHECK(a2.identity().length() == 0);
  CHECK(a2.identity().is_identity());
  const Element s0 = a2.generator(0);
  CHECK(s0.length() == 1);
  CHECK(s0.root_perm()[0] == 3);  // simple root 0 goes negative
  CHECK(s0 * s0 == a2.identity());
  CHECK_THROWS_AS(a2.generator(2), IndexOutOfRange);
  CHECK_THROWS_AS(a2.generator(-1), IndexOutOfRange);
}

TEST_CASE("multiplication satisfies the group laws and the braid relation") {
  const CoxeterSystem a2 = make("A2");
  const Element x = a2.from_word({0, 1});
  CHECK(x.length() == 2);
  CHECK(x * x.inverse() == a2.identity());
  CHECK(a2.from_word({0, 1, 0}) == a2.from_word({1, 0, 1}));
  for (const Element& a : a2.elements())
    for (const Element& b : a2.elements())
      for (const Element& c : a2.elements()) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("elements of different systems refuse to combine") {
  const CoxeterSystem a2 = make("A2");
  const CoxeterSystem b2 = make("B2");
  CHECK_THROWS_AS(a2.identity() * b2.identity(), SystemMismatch);
  CHECK(a2.identity() != b2.identity());
}

TEST_CASE("inverse preserves length and reverses words") {
  const CoxeterSystem a2 = make("A2");
  CHECK(a2.identity().inverse() == a2.identity());
  CHECK(a2.generator(0).inverse() == a2.generator(0));
  CHECK(a2.from_word({0, 1}).inverse() == a2.from_word({1, 0}));
  for (const Element& x : make("B3").elements()) CHECK(x.inverse().length() == x.length());
}

TEST_CASE("descent sets match the length definition") {
  const CoxeterSystem a2 = make("A2");
  CHECK(a2.identity().left_descents().empty());
  CHECK(a2.identity().right_descents().empty());
  const Element w0 = a2.longest_element();
  CHECK(w0.left_descents() == GenSubset::all(2));
  CHECK(w0.right_descents() == GenSubset::all(2));
  CHECK(a2.from_word({0, 1}).right_descents() == GenSubset::of({1}));
  CHECK(a2.from_word({0, 1}).left_descents() == GenSubset::of({0}));

  for (const Element& x : make("A3").elements()) {
    for (int i = 0; i < 3; ++i) {
      CHECK(x.has_right_descent(i) == (x.right_mul(i).length() < x.length()));
      CHECK(x.has_left_descent(i) == (x.left_mul(i).length() < x.length()));
    }
  }
}

TEST_CASE("canonical words are reduced, reproducing, and lexicographically least") {
  const CoxeterSystem a2 = make("A2");
  CHECK(a2.identity().canonical_word().empty());
  CHECK(a2.longest_element().canonical_word() == std::vector<int>{0, 1, 0});

  const CoxeterSystem b3 = make("B3");
  for (const Element& x : b3.elements()) {
    const auto word = x.canonical_word();
    CHECK(static_cast<int>(word.size()) == x.length());
    CHECK(b3.from_word(word) == x);
  }
}

TEST_CASE("element_from_word accepts unreduced words") {
  const CoxeterSystem a2 = make("A2");
  CHECK(a2.from_word({}) == a2.identity());
  CHECK(a2.from_word({0, 0}) == a2.identity());
  CHECK(a2.from_word({0, 1, 0}).length() == 3);
  CHECK_THROWS_AS(a2.from_word({5}), IndexOutOfRange);
}

TEST_CASE("longest elements of parabolic subgroups") {
  const CoxeterSystem a2 = make("A2");
  CHECK(a2.longest_element(GenSubset::none()) == a2.identity());
  CHECK(a2.longest_element().length() == 3);
  const CoxeterSystem a3 = make("A3");
  CHECK(a3.longest_element(GenSubset::of({0, 1})).length() == 3);
  const CoxeterSystem h3 = make("H3");
  CHECK(h3.longest_element().length() == 15);
}

TEST_CASE("enumeration is sorted, complete, and distinct") {
  const CoxeterSystem a2 = make("A2");
  const auto& elems = a2.elements();
  REQUIRE(elems.size() == 6);
  std::vector<int> lengths;
  for (const Element& x : elems) lengths.push_back(x.length());
  CHECK(lengths == std::vector<int>{0, 1, 1, 2, 2, 3});

  // A3 length distribution: the q-factorial [4]!_q coefficients.
  std::map<int, int> by_length;
  for (const Element& x : make("A3").elements()) ++by_length[x.length()];
  CHECK(by_length == std::map<int, int>{{0, 1}, {1, 3}, {2, 5}, {3, 6}, {4, 5}, {5, 3}, {6, 1}});

  for (std::size_t i = 1; i < elems.size(); ++i) {
    const bool ordered =
        elems[i - 1].length() < elems[i].length() ||
        (elems[i - 1].length() == elems[i].length() &&
         elems[i - 1].canonical_word() < elems[i].canonical_word());
    CHECK(ordered);
  }
}

TEST_CASE("concurrent first enumeration settles on one cache") {
  const CoxeterSystem sys = make("A4");
  std::vector<std::thread> workers;
  std::vector<std::size_t> orders(8, 0);
  for (int k = 0; k < 8; ++k)
    workers.emplace_back([&sys, &orders, k] { orders[static_cast<std::size_t>(k)] = sys.order(); });
  for (auto& w : workers) w.join();
  for (std::size_t o : orders) CHECK(o == 120);
  CHECK(&sys.elements() == &sys.elements());
}

TEST_CASE("root table layout pairs every positive root with its negative") {
  const CoxeterSystem b3 = make("B3");
  const int n = b3.positive_roots();
  for (int k = 0; k < n; ++k) {
    const auto pos = b3.root(k);
    const auto neg = b3.root(k + n);
    for (int c = 0; c < b3.rank(); ++c) CHECK(pos[c] == doctest::Approx(-neg[c]));
  }
  CHECK_THROWS_AS(b3.root(2 * n), IndexOutOfRange);
}

TEST_CASE("root permutations commute with negation") {
  const CoxeterSystem a3 = make("A3");
  const int n = a3.positive_roots();
  for (const Element& x : a3.elements()) {
    const auto perm = x.root_perm();
    for (int k = 0; k < n; ++k) {
      const int img = perm[k];
      const int expected = img < n ? img + n : img - n;
      CHECK(perm[k + n] == expected);
    }
  }
}
