#include <doctest.h>

#include "fourierknot/diagram.hpp"
#include "fourierknot/error.hpp"
#include "support.hpp"

using namespace fk;
using fktest::poly;

TEST_CASE("LaurentPoly arithmetic") {
  const LaurentPoly a = poly({{2, 1}, {-1, 3}});
  const LaurentPoly b = poly({{1, -1}, {0, 2}});
  CHECK(a + b == poly({{2, 1}, {1, -1}, {0, 2}, {-1, 3}}));
  CHECK(a - a == LaurentPoly());
  CHECK(a * b == poly({{3, -1}, {2, 2}, {0, -3}, {-1, 6}}));
  CHECK((a * b).divided_by(b) == a);
  CHECK_THROWS_AS(a.divided_by(poly({{1, 2}, {0, 1}})), Error);
  CHECK(a.mirrored() == poly({{-2, 1}, {1, 3}}));
  CHECK(a.scaled(3, -2) == poly({{5, -2}, {2, -6}}));
  CHECK(poly({{8, 1}, {-4, 2}}).exponents_divided(-4) == poly({{-2, 1}, {1, 2}}));
  CHECK_THROWS_AS(poly({{3, 1}}).exponents_divided(2), Error);
  CHECK(poly({{5, -1}, {-3, -1}, {-7, 1}}).to_string() == "-A^5 - A^-3 + A^-7");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(poly({{1, 2}, {0, -1}}).to_string("t") == "2*t - 1");
}

TEST_CASE("closure invariants of small knots and links") {
  const PDCode trefoil = pd_from_closure(parse_braid("1 1 1"));
  CHECK(trefoil.size() == 3);
  CHECK(component_count(trefoil) == 1);
  CHECK(writhe(trefoil) == 3);
  CHECK(determinant(trefoil) == 3);
  CHECK(jones(trefoil) == poly({{-4, 1}, {-12, 1}, {-16, -1}}));
  CHECK(jones_in_t(trefoil) == poly({{1, 1}, {3, 1}, {4, -1}}));

  const PDCode fig8 = pd_from_closure(parse_braid("1 -2 1 -2"));
  CHECK(writhe(fig8) == 0);
  CHECK(determinant(fig8) == 5);
  CHECK(jones_in_t(fig8) == poly({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}));

  // Torus knot T(2,5) and the twist knot 5_2 = closure of 1 1 1 2 -1 2.
  CHECK(jones_in_t(pd_from_closure(parse_braid("1 1 1 1 1"))) == poly({{2, 1}, {4, 1}, {5, -1}, {6, 1}, {7, -1}}));
  CHECK(determinant(pd_from_closure(parse_braid("1 1 1 1 1"))) == 5);
  CHECK(determinant(pd_from_closure(parse_braid("1 1 1 2 -1 2"))) == 7);

  const PDCode hopf = pd_from_closure(parse_braid("1 1"));
  CHECK(component_count(hopf) == 2);
  CHECK(jones(hopf) == poly({{-2, -1}, {-10, -1}}));
  CHECK_THROWS_AS(determinant(hopf), Error);

  const PDCode unlink = pd_from_closure(BraidWord(2));
  CHECK(unlink.loops == 2);
  CHECK(component_count(unlink) == 2);
  CHECK(jones(unlink) == poly({{2, -1}, {-2, -1}}));

  const PDCode unknot = pd_from_closure(parse_braid("1"));
  CHECK(jones(unknot) == LaurentPoly::constant(1));
  CHECK(determinant(unknot) == 1);
  CHECK(component_count(PDCode{}) == 1);
}

TEST_CASE("PD code conventions") {
  const PDCode pd = pd_from_closure(parse_braid("1 1 1"));
  validate(pd);
  for (int s : crossing_signs(pd)) CHECK(s == 1);
  CHECK(crossing_signs(pd_from_closure(parse_braid("-1 -1 -1"))) == std::vector<int>{-1, -1, -1});

  PDCode bad = pd;
  bad.crossings[0][0] = 99;
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("state sum and contraction agree on random closures and plats") {
  std::mt19937 rng(fktest::suite_seed() + 30);
  for (int trial = 0; trial < 150; ++trial) {
    const int width = fktest::uniform(rng, 2, 5);
    const BraidWord w = fktest::random_word(rng, width, fktest::uniform(rng, 0, 12));
    const PDCode pd = pd_from_closure(w);
    CHECK(kauffman_bracket(pd) == kauffman_bracket_contracted(pd));
    CHECK(component_count(pd) == cycle_count(permutation_of(w)));
    int exponent_sum = 0;
    for (const auto& l : w.letters()) exponent_sum += l.sign;
    CHECK(writhe(pd) == exponent_sum);
  }
  for (int trial = 0; trial < 60; ++trial) {
    const int b = fktest::uniform(rng, 1, 3);
    const PDCode pd = pd_from_plat(Plat(fktest::random_word(rng, 2 * b, fktest::uniform(rng, 0, 12))));
    validate(pd);
    CHECK(kauffman_bracket(pd) == kauffman_bracket_contracted(pd));
  }
  CHECK_THROWS_AS(kauffman_bracket(pd_from_closure(parse_braid("1 1 1 1 1 1")), 5), Error);
}

TEST_CASE("Jones polynomial is invariant under braid relations, conjugation and stabilisation") {
  std::mt19937 rng(fktest::suite_seed() + 31);
  for (int trial = 0; trial < 120; ++trial) {
    const int width = fktest::uniform(rng, 2, 4);
    const BraidWord w = fktest::random_word(rng, width, fktest::uniform(rng, 1, 8));
    const LaurentPoly v = jones(pd_from_closure(w));

    const BraidWord c = fktest::random_word(rng, width, fktest::uniform(rng, 1, 3));
    CHECK(jones(pd_from_closure(c * w * c.inverse())) == v);

    std::vector<int> letters = w.to_signed();
    if (width >= 3) {
      const int i = fktest::uniform(rng, 1, width - 2);
      const auto at = static_cast<long>(fktest::uniform(rng, 0, static_cast<int>(letters.size())));
      std::vector<int> l1 = letters, l2 = letters;
      const std::vector<int> lhs{i, i + 1, i}, rhs{i + 1, i, i + 1};
      l1.insert(l1.begin() + at, lhs.begin(), lhs.end());
      l2.insert(l2.begin() + at, rhs.begin(), rhs.end());
      CHECK(jones(pd_from_closure(BraidWord::from_signed(width, l1))) ==
            jones(pd_from_closure(BraidWord::from_signed(width, l2))));
    }

    std::vector<int> stabilised = letters;
    stabilised.push_back(fktest::uniform(rng, 0, 1) ? width : -width);
    CHECK(jones(pd_from_closure(BraidWord::from_signed(width + 1, stabilised))) == v);

    std::vector<int> mirrored = letters;
    for (int& l : mirrored) l = -l;
    CHECK(jones(pd_from_closure(BraidWord::from_signed(width, mirrored))) == v.mirrored());
  }
}

TEST_CASE("knot determinants are odd and match |V(-1)|") {
  std::mt19937 rng(fktest::suite_seed() + 32);
  for (int trial = 0; trial < 120; ++trial) {
    const BraidWord w = fktest::random_knot_word(rng, 5, 12);
    const PDCode pd = pd_from_closure(w);
    const auto det = determinant(pd);
    CHECK(det % 2 == 1);
    CHECK(det == fktest::determinant_from_jones(pd));
  }
}

TEST_CASE("contraction handles diagrams beyond the state-sum bound") {
  // T(2,41): V(t) = t^20 (1 + t^2 - t^3 + t^4 - ... - t^41).
  std::string text;
  for (int k = 0; k < 41; ++k) text += "1 ";
  const PDCode pd = pd_from_closure(parse_braid(text));
  CHECK_THROWS_AS(kauffman_bracket(pd), Error);
  const LaurentPoly v = jones_in_t(pd);
  CHECK(determinant(pd) == 41);
  CHECK(fktest::determinant_from_jones(pd) == 41);
  CHECK(v.coefficient(20) == 1);
  CHECK(v.coefficient(22) == 1);
  CHECK(v.terms().rbegin()->first == 61);
}
