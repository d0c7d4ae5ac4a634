#include <doctest.h>

#include "fourierknot/braid.hpp"
#include "fourierknot/error.hpp"
#include "support.hpp"

using namespace fk;

TEST_CASE("parse_braid accepts both interchange syntaxes") {
  const BraidWord a = parse_braid("1 1 1");
  CHECK(a.width() == 2);
  CHECK(a.to_signed() == std::vector<int>{1, 1, 1});

  const BraidWord b = parse_braid("aBaB");
  CHECK(b.width() == 3);
  CHECK(b.to_signed() == std::vector<int>{1, -2, 1, -2});
  CHECK(format_braid(b) == "1 -2 1 -2");
  CHECK(format_braid_letters(b) == "aBaB");

  CHECK(parse_braid("2", 5).width() == 5);
  CHECK(parse_braid("").empty());
}

TEST_CASE("parse_braid rejects malformed input") {
  for (const char* bad : {"0", "1 x", "-0", "1 2a", "3 -"}) {
    INFO(bad);
    try {
      parse_braid(bad);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(parse_braid("3", 3), Error);
}

TEST_CASE("permutation_of examples") {
  CHECK(cycle_count(permutation_of(parse_braid("1 2"))) == 1);
  CHECK(permutation_of(parse_braid("1 1")).is_identity());
  CHECK(cycle_count(permutation_of(parse_braid("1 -2 1 -2"))) == 1);
  CHECK(cycle_count(Permutation::identity(4)) == 4);
  CHECK(permutation_of(parse_braid("1 2")).cycle_string() == "(1 2 3)");
}

TEST_CASE("permutation_of agrees with strand tracking and is a homomorphism") {
  std::mt19937 rng(fktest::suite_seed());
  for (int trial = 0; trial < 300; ++trial) {
    const int width = fktest::uniform(rng, 2, 8);
    const BraidWord a = fktest::random_word(rng, width, fktest::uniform(rng, 0, 12));
    const BraidWord b = fktest::random_word(rng, width, fktest::uniform(rng, 0, 12));
    CHECK(permutation_of(a).images() == fktest::tracked_permutation(a));
    CHECK(permutation_of(a * b) == permutation_of(a) * permutation_of(b));
    CHECK(permutation_of(a.inverse()) == permutation_of(a).inverse());
  }
}

TEST_CASE("braids_equal recognises the braid relations") {
  CHECK(braids_equal(parse_braid("1 2 1"), parse_braid("2 1 2")));
  CHECK(braids_equal(parse_braid("1 3", 4), parse_braid("3 1", 4)));
  CHECK_FALSE(braids_equal(parse_braid("1 2"), parse_braid("2 1")));
  CHECK(braids_equal(parse_braid("1 -1 2", 3), parse_braid("2", 3)));
  CHECK_FALSE(braids_equal(parse_braid("1", 3), parse_braid("-1", 3)));
}

TEST_CASE("braids_equal agrees with the Burau representation on random rewrites") {
  std::mt19937 rng(fktest::suite_seed() + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int width = fktest::uniform(rng, 3, 6);
    const BraidWord w = fktest::random_word(rng, width, fktest::uniform(rng, 0, 10));
    // Insert a braid relation, a commutation or a free cancellation at a random place.
    std::vector<int> letters = w.to_signed();
    const std::size_t at = static_cast<std::size_t>(fktest::uniform(rng, 0, static_cast<int>(letters.size())));
    const int i = fktest::uniform(rng, 1, width - 2);
    std::vector<int> lhs, rhs;
    switch (fktest::uniform(rng, 0, 2)) {
      case 0: lhs = {i, i + 1, i}; rhs = {i + 1, i, i + 1}; break;
      case 1: lhs = {i, -i}; rhs = {}; break;
      default:
        if (width >= 4) { lhs = {1, width - 1}; rhs = {width - 1, 1}; }
        else { lhs = {-i, i}; rhs = {}; }
    }
    std::vector<int> left = letters, right = letters;
    left.insert(left.begin() + static_cast<long>(at), lhs.begin(), lhs.end());
    right.insert(right.begin() + static_cast<long>(at), rhs.begin(), rhs.end());
    const BraidWord a = BraidWord::from_signed(width, left);
    const BraidWord b = BraidWord::from_signed(width, right);
    CHECK(braids_equal(a, b));
    CHECK(fktest::burau_equal(a, b));

    // Appending one extra generator changes the element.
    const BraidWord c = a * BraidWord::from_signed(width, std::vector<int>{i});
    CHECK_FALSE(braids_equal(c, b));
    CHECK_FALSE(fktest::burau_equal(c, b));
  }
}

TEST_CASE("braids_equal implies equal Burau matrices for random pairs") {
  std::mt19937 rng(fktest::suite_seed() + 2);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord a = fktest::random_word(rng, 3, fktest::uniform(rng, 0, 5));
    const BraidWord b = fktest::random_word(rng, 3, fktest::uniform(rng, 0, 5));
    CHECK(braids_equal(a, b) == fktest::burau_equal(a, b));
  }
}

TEST_CASE("artin_action of sigma_1") {
  const auto images = artin_action(parse_braid("1", 2));
  REQUIRE(images.size() == 2);
  CHECK(images[0].letters() == std::vector<int>{1, 2, -1});
  CHECK(images[1].letters() == std::vector<int>{1});
  CHECK(FreeGroupWord({1, 2, -2, 3}).letters() == std::vector<int>{1, 3});
}

TEST_CASE("pure generators and linking matrices") {
  CHECK(braids_equal(pure_generator_word(3, 1, 3), parse_braid("2 1 1 -2")));
  CHECK(braids_equal(pure_generator_word(2, 1, 2), parse_braid("1 1")));
  const LinkingMatrix m = linking_matrix(pure_generator_word(4, 2, 4), true);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const bool band = (r == 1 && c == 3) || (r == 3 && c == 1);
      CHECK(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == (band ? 2 : 0));
    }
  CHECK_THROWS_AS(linking_matrix(parse_braid("1"), true), Error);
}

TEST_CASE("linking matrix is symmetric and additive on pure braids") {
  std::mt19937 rng(fktest::suite_seed() + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int width = fktest::uniform(rng, 2, 6);
    const BraidWord a = fktest::random_pure_word(rng, width, fktest::uniform(rng, 0, 10));
    const BraidWord b = fktest::random_pure_word(rng, width, fktest::uniform(rng, 0, 10));
    REQUIRE(is_pure(a));
    const auto la = linking_matrix(a, true), lb = linking_matrix(b, true), lab = linking_matrix(a * b, true);
    for (int r = 0; r < width; ++r)
      for (int c = 0; c < width; ++c) {
        const auto R = static_cast<std::size_t>(r), C = static_cast<std::size_t>(c);
        CHECK(la[R][C] == la[C][R]);
        CHECK(lab[R][C] == la[R][C] + lb[R][C]);
      }
  }
}

TEST_CASE("comb rewrites pure braids as band generators") {
  CHECK(comb(parse_braid("2 2 2 2", 4)) == std::vector<CombFactor>{{2, 3, 1}, {2, 3, 1}});
  CHECK(comb(BraidWord(3)).empty());
  CHECK_THROWS_AS(comb(parse_braid("1 2")), Error);

  std::mt19937 rng(fktest::suite_seed() + 4);
  for (int trial = 0; trial < 150; ++trial) {
    const int width = fktest::uniform(rng, 2, 6);
    const BraidWord p = fktest::random_pure_word(rng, width, fktest::uniform(rng, 0, 12));
    const auto factors = comb(p);
    for (const auto& f : factors) {
      CHECK(f.i < f.j);
      CHECK((f.sign == 1 || f.sign == -1));
    }
    const BraidWord back = factors_word(width, factors);
    CHECK(braids_equal(back, p));
    CHECK(fktest::burau_equal(back, p));
  }
}

TEST_CASE("positive_lift realises every permutation with each pair crossing at most once") {
  std::mt19937 rng(fktest::suite_seed() + 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int width = fktest::uniform(rng, 1, 7);
    std::vector<int> images(static_cast<std::size_t>(width));
    for (int p = 0; p < width; ++p) images[static_cast<std::size_t>(p)] = p + 1;
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation perm(images);
    const BraidWord lift = positive_lift(perm);
    CHECK(permutation_of(lift) == perm);
    for (const auto& l : lift.letters()) CHECK(l.sign == 1);
    int inversions = 0;
    for (int a = 0; a < width; ++a)
      for (int b = a + 1; b < width; ++b)
        if (images[static_cast<std::size_t>(a)] > images[static_cast<std::size_t>(b)]) ++inversions;
    CHECK(static_cast<int>(lift.size()) == inversions);
  }
}

TEST_CASE("destabilize removes trailing single occurrences") {
  const BraidWord d = destabilize(parse_braid("1 1 1 2"));
  CHECK(d.width() == 2);
  CHECK(d.to_signed() == std::vector<int>{1, 1, 1});
  CHECK(destabilize(parse_braid("1")).width() == 1);
  CHECK(destabilize(parse_braid("1 -2 1 -2")).width() == 3);
}
