#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coxkit/bruhat.hpp"
#include "coxkit/coxeter.hpp"
#include "coxkit/parabolic.hpp"
#include "coxkit/symgroup.hpp"

using namespace cox;
using sn::Permutation;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

const GenSubset kPaperI = GenSubset::of({0, 1, 3, 5});  // {s1, s2, s4, s6}
const GenSubset kPaperJ = GenSubset::of({0, 2, 3, 4});  // {s1, s3, s4, s5}

}  // namespace

TEST_CASE("parsing and formatting one-line notation") {
  const Permutation u = Permutation::parse("3471526");
  CHECK(u.degree() == 7);
  CHECK(u(1) == 3);
  CHECK(u.to_string() == "3471526");

  const Permutation big = Permutation::parse("10,3,1,2,4,5,6,7,8,9");
  CHECK(big.degree() == 10);
  CHECK(big(1) == 10);
  CHECK(big.to_string() == "10,3,1,2,4,5,6,7,8,9");

  CHECK_THROWS_AS(Permutation::parse("1325"), ParseFailure);   // 4 missing
  CHECK_THROWS_AS(Permutation::parse("1135"), ParseFailure);   // repeat
  CHECK_THROWS_AS(Permutation::parse(""), ParseFailure);
  CHECK_THROWS_AS(Permutation::parse("1,x,3"), ParseFailure);
}

TEST_CASE("composition reads left to right") {
  // (u*v) applies u first; left mult by s_i swaps positions, right mult
  // swaps values.
  const Permutation w = Permutation::parse("231");
  CHECK(w.left_mul_gen(1).to_string() == "321");   // swap entries 1,2
  CHECK(w.right_mul_gen(1).to_string() == "132");  // swap values 1,2
  CHECK((w * w.inverse()).to_string() == "123");
  const Permutation s1 = Permutation::parse("213");
  const Permutation s2 = Permutation::parse("132");
  CHECK((s1 * s2).to_string() == "312");
  CHECK((s1 * s2) * s1 == s2 * (s1 * s2));  // braid
}

TEST_CASE("descents in one-line terms") {
  const Permutation u = Permutation::parse("1342567");
  CHECK(u.left_descents() == GenSubset::of({2}));             // 4 > 2 at positions 3,4
  CHECK(u.right_descents() == GenSubset::of({1}));            // value 2 after value 3
  const Permutation v = Permutation::parse("3471526");
  CHECK(v.left_descents() == GenSubset::of({2, 4}));
  CHECK(v.right_descents() == GenSubset::of({1, 5}));
  CHECK(Permutation::identity(5).left_descents().empty());
}

TEST_CASE("permutation matrix puts the one at (i, w_i)") {
  CHECK(sn::perm_matrix(Permutation::identity(3)) ==
        sn::IntMatrix{3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}});
  CHECK(sn::perm_matrix(Permutation::parse("21")) == sn::IntMatrix{2, 2, {0, 1, 1, 0}});
  const auto m = sn::perm_matrix(Permutation::parse("1342567"));
  CHECK(m.at(1, 2) == 1);  // row 2 has its one in column 3
}

TEST_CASE("dominance matrices of the identity and the reversal") {
  CHECK(sn::dominance(Permutation::identity(3)) ==
        sn::IntMatrix{3, 3, {1, 1, 1, 1, 2, 2, 1, 2, 3}});
  // The reversal is Bruhat-maximal, so its dominance matrix is entrywise
  // minimal.
  const auto bottom = sn::dominance(Permutation::parse("4321"));
  for (const Permutation& w : all_perms(4)) CHECK(sn::dominance(w).dominates(bottom));
}

TEST_CASE("block partitions from generator subsets") {
  const auto bi = sn::blocks_from_subset(7, kPaperI);
  CHECK(bi.to_string() == "123|45|67");
  CHECK(bi.ends == std::vector<int>{3, 5, 7});
  const auto bj = sn::blocks_from_subset(7, kPaperJ);
  CHECK(bj.to_string() == "12|3456|7");
  CHECK(bj.ends == std::vector<int>{2, 6, 7});
  const auto singletons = sn::blocks_from_subset(4, GenSubset::none());
  CHECK(singletons.block_count() == 4);
  const auto whole = sn::blocks_from_subset(4, GenSubset::all(3));
  CHECK(whole.block_count() == 1);
}

TEST_CASE("worked S7 block matrices") {
  const Permutation u = Permutation::parse("1342567");
  const Permutation v = Permutation::parse("3471526");

  CHECK(sn::coset_matrix(u, kPaperI, kPaperJ) ==
        sn::IntMatrix{3, 3, {1, 2, 0, 1, 1, 0, 0, 1, 1}});
  CHECK(sn::coset_matrix(v, kPaperI, kPaperJ) ==
        sn::IntMatrix{3, 3, {0, 2, 1, 1, 1, 0, 1, 1, 0}});
  CHECK(sn::coset_dominance(u, kPaperI, kPaperJ) ==
        sn::IntMatrix{3, 3, {1, 3, 3, 2, 5, 5, 2, 6, 7}});
  CHECK(sn::coset_dominance(v, kPaperI, kPaperJ) ==
        sn::IntMatrix{3, 3, {0, 2, 3, 1, 4, 5, 2, 6, 7}});

  // Empty subsets recover the plain permutation matrices.
  CHECK(sn::coset_matrix(u, GenSubset::none(), GenSubset::none()) == sn::perm_matrix(u));
  CHECK(sn::coset_dominance(u, GenSubset::none(), GenSubset::none()) == sn::dominance(u));
}

TEST_CASE("dominance comparisons") {
  const Permutation id5 = Permutation::identity(5);
  for (const Permutation& w : all_perms(4)) {
    CHECK(sn::dominance_leq(Permutation::identity(4), w));
    CHECK(sn::dominance_leq(w, w));
  }
  CHECK_THROWS_AS(sn::dominance_leq(id5, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("dominance equals Bruhat order via the bridge on S4") {
  const CoxeterSystem a3 = CoxeterSystem::build(CoxeterSpec::named("A3"));
  const auto perms = all_perms(4);
  std::vector<Element> gen;
  gen.reserve(perms.size());
  for (const auto& p : perms) gen.push_back(sn::to_generic(a3, p));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b)
      CHECK(sn::dominance_leq(perms[a], perms[b]) == bruhat_leq(gen[a], gen[b]));
}

TEST_CASE("worked S7 comparison verdicts") {
  const Permutation u = Permutation::parse("1342567");
  const Permutation v = Permutation::parse("3471526");
  REQUIRE(sn::in_double_coset_min_reps(u, kPaperI, kPaperJ));
  REQUIRE(sn::in_double_coset_min_reps(v, kPaperI, kPaperJ));
  CHECK(sn::coset_dominance_leq(u, v, kPaperI, kPaperJ));
  // Reversed, the comparison already fails at entry (1,1): 0 < 1.
  CHECK_FALSE(sn::coset_dominance_leq(v, u, kPaperI, kPaperJ));
  CHECK(sn::coset_dominance_leq(u, u, kPaperI, kPaperJ));
  CHECK_THROWS_AS(
      sn::coset_dominance_leq(Permutation::parse("2134567"), v, kPaperI, kPaperJ),
      NotMinimalRep);
}

TEST_CASE("same_double_coset matches matrix equality and the paper pair differs") {
  const Permutation u = Permutation::parse("1342567");
  const Permutation v = Permutation::parse("3471526");
  CHECK(sn::same_double_coset(u, u, kPaperI, kPaperJ));
  CHECK_FALSE(sn::same_double_coset(u, v, kPaperI, kPaperJ));
}

TEST_CASE("same_double_coset agrees with generic coset membership on S3") {
  const CoxeterSystem a2 = CoxeterSystem::build(CoxeterSpec::named("A2"));
  const auto perms = all_perms(3);
  for (std::uint64_t im = 0; im < 4; ++im) {
    for (std::uint64_t jm = 0; jm < 4; ++jm) {
      const GenSubset I = GenSubset::from_bits(im);
      const GenSubset J = GenSubset::from_bits(jm);
      for (const auto& p : perms) {
        for (const auto& q : perms) {
          const Element gp = sn::to_generic(a2, p);
          const Element gq = sn::to_generic(a2, q);
          const bool generic_same =
              decompose_double(gp, I, J).b == decompose_double(gq, I, J).b;
          CHECK(sn::same_double_coset(p, q, I, J) == generic_same);
        }
      }
    }
  }
}

TEST_CASE("bridge round-trips all of S5 and matches lengths and descents") {
  const CoxeterSystem a4 = CoxeterSystem::build(CoxeterSpec::named("A4"));
  CHECK(sn::to_generic(a4, Permutation::identity(5)) == a4.identity());
  CHECK(sn::to_generic(a4, Permutation::parse("21345")) == a4.generator(0));
  int count = 0;
  for (const Permutation& w : all_perms(5)) {
    const Element x = sn::to_generic(a4, w);
    CHECK(sn::from_generic(a4, x) == w);
    CHECK(x.length() == w.inversions());
    CHECK(x.left_descents() == w.left_descents());
    CHECK(x.right_descents() == w.right_descents());
    ++count;
  }
  CHECK(count == 120);
}

TEST_CASE("bridge rejects non type-A systems and degree mismatches") {
  const CoxeterSystem b3 = CoxeterSystem::build(CoxeterSpec::named("B3"));
  CHECK_THROWS_AS(sn::to_generic(b3, Permutation::identity(4)), SystemMismatch);
  const CoxeterSystem a3 = CoxeterSystem::build(CoxeterSpec::named("A3"));
  CHECK_THROWS_AS(sn::to_generic(a3, Permutation::identity(5)), SystemMismatch);
}
