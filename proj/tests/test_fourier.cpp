#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fourierknot/commands.hpp"
#include "fourierknot/error.hpp"
#include "fourierknot/fourier.hpp"
#include "support.hpp"

using namespace fk;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double random_phase(std::mt19937& rng) { return std::uniform_real_distribution<double>(0.0, kTwoPi)(rng); }

FourierSeries random_series(std::mt19937& rng, int length, int max_frequency) {
  std::vector<FourierTerm> terms;
  std::vector<int> freqs(static_cast<std::size_t>(max_frequency));
  std::iota(freqs.begin(), freqs.end(), 1);
  std::shuffle(freqs.begin(), freqs.end(), rng);
  for (int k = 0; k < length; ++k)
    terms.push_back({std::uniform_real_distribution<double>(0.2, 2.0)(rng), freqs[static_cast<std::size_t>(k)],
                     random_phase(rng)});
  return FourierSeries(terms);
}

// Coprime frequency pair (a, c) with a < c.
std::pair<int, int> random_coprime(std::mt19937& rng, int max) {
  for (;;) {
    const int a = fktest::uniform(rng, 1, max - 1), c = fktest::uniform(rng, a + 1, max);
    if (std::gcd(a, c) == 1) return {a, c};
  }
}

FourierSeries reversed(const FourierSeries& f) {
  std::vector<FourierTerm> terms = f.terms();
  for (auto& t : terms) t.phase = -t.phase;
  return FourierSeries(terms);
}

}  // namespace

TEST_CASE("series evaluation, merging and validation") {
  const FourierSeries f({{1.0, 2, 0.3}, {0.5, 1, 0.0}, {2.0, 2, -0.3}});
  CHECK(f.length() == 2);
  CHECK(f.terms().front().frequency == 1);
  const double t = 0.137;
  const double direct = 0.5 * std::cos(kTwoPi * t) + std::cos(kTwoPi * 2 * t + 0.3) + 2.0 * std::cos(kTwoPi * 2 * t - 0.3);
  CHECK(evaluate(f, t) == doctest::Approx(direct).epsilon(1e-13));
  CHECK_THROWS_AS(FourierSeries({}), Error);
  CHECK_THROWS_AS(FourierSeries({{1.0, 0, 0.0}}), Error);
  CHECK_THROWS_AS(FourierKnot(FourierSeries({{1, 1, 0}, {1, 2, 0}}), FourierSeries({{1, 3, 0}}), FourierSeries({{1, 4, 0}})), Error);
}

TEST_CASE("evaluate is 1-periodic and its derivative matches finite differences") {
  std::mt19937 rng(fktest::suite_seed() + 40);
  for (int trial = 0; trial < 500; ++trial) {
    const FourierSeries f = random_series(rng, fktest::uniform(rng, 1, 6), 40);
    const double t = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    CHECK(std::abs(evaluate(f, t) - evaluate(f, t + 1.0)) < 1e-12);
    const double h = 1e-6;
    const double fd = (evaluate(f, t + h) - evaluate(f, t - h)) / (2 * h);
    CHECK(evaluate_derivative(f, t) == doctest::Approx(fd).epsilon(1e-5).scale(40.0));
  }
}

TEST_CASE("angular conversion") {
  const FourierSeries single = convert_angular_series({{1.0, 2.0, 6.0}});
  REQUIRE(single.length() == 1);
  CHECK(single.terms()[0].frequency == 1);
  CHECK(evaluate(single, 0.25) == doctest::Approx(std::cos(2.0 * (0.25 * kTwoPi / 2.0) + 6.0)));

  const FourierKnot knot = reference_trefoil();
  CHECK(knot.type() == std::array<int, 3>{1, 1, 2});
  CHECK(knot.x1().terms()[0].frequency == 2);
  CHECK(knot.x2().terms()[0].frequency == 3);
  for (double u : {0.0, 0.7, 2.1, 5.5}) {
    const auto p = knot.point(u / kTwoPi);
    CHECK(p[0] == doctest::Approx(std::cos(2 * u + 6)));
    CHECK(p[1] == doctest::Approx(std::cos(3 * u + 0.15)));
    CHECK(p[2] == doctest::Approx(std::cos(4 * u + 1) + std::cos(5 * u)));
  }
  CHECK_THROWS_AS(convert_angular_series({{1.0, 2.5, 0.0}}), Error);
}

TEST_CASE("Lissajous shadows have 2ac - a - c double points") {
  std::mt19937 rng(fktest::suite_seed() + 41);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [a, c] = random_coprime(rng, 7);
    const FourierSeries x1({{1.0, a, random_phase(rng)}});
    const FourierSeries x2({{1.0, c, random_phase(rng)}});
    try {
      const auto found = find_shadow_crossings(x1, x2, {});
      CHECK(static_cast<int>(found.size()) == 2 * a * c - a - c);
      for (const auto& x : found) {
        CHECK(std::abs(evaluate(x1, x.s) - evaluate(x1, x.t)) < 1e-9);
        CHECK(std::abs(evaluate(x2, x.s) - evaluate(x2, x.t)) < 1e-9);
        CHECK(x.s < x.t);
      }
    } catch (const Error& e) {
      // A random phase can land on a degenerate shadow; that must be reported, never miscounted.
      CHECK(std::string(e.what()).find("non-generic") != std::string::npos);
    }
  }
}

TEST_CASE("crossings are symmetric under reversing the parametrization") {
  std::mt19937 rng(fktest::suite_seed() + 42);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const auto [a, c] = random_coprime(rng, 6);
    const FourierKnot knot(FourierSeries({{1.0, a, random_phase(rng)}}), FourierSeries({{1.0, c, random_phase(rng)}}),
                           random_series(rng, 3, 9));
    std::vector<CrossingRecord> forward, backward;
    try {
      forward = find_crossings(knot);
      backward = find_crossings(FourierKnot(reversed(knot.x1()), reversed(knot.x2()), reversed(knot.x3())));
    } catch (const Error&) {
      continue;
    }
    ++checked;
    REQUIRE(forward.size() == backward.size());
    for (const auto& f : forward) {
      const auto match = std::find_if(backward.begin(), backward.end(), [&](const CrossingRecord& b) {
        return std::hypot(b.x - f.x, b.y - f.y) < 1e-9;
      });
      REQUIRE(match != backward.end());
      // t -> -t swaps travel direction on both strands, so the crossing sign is kept.
      CHECK(match->sign == f.sign);
      CHECK(match->height_gap == doctest::Approx(f.height_gap).epsilon(1e-9));
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("reference parametrizations resolve to the trefoil and figure-eight") {
  for (const auto& [knot, det, word] : {std::tuple{reference_trefoil(), 3, "1 1 1"},
                                        std::tuple{reference_figure_eight(), 5, "1 -2 1 -2"}}) {
    for (int grid : {1024, 2048, 4096}) {
      CrossingConfig cc;
      cc.grid = grid;
      CHECK(find_crossings(knot, cc).size() == 7);
    }
    // The given height series separates every crossing by a clear margin.
    double zmax = 0.0;
    for (int k = 0; k < 4096; ++k) zmax = std::max(zmax, std::abs(evaluate(knot.x3(), k / 4096.0)));
    for (const auto& c : find_crossings(knot)) CHECK(c.height_gap > 0.05 * zmax);

    const PDCode pd = diagram_of(knot);
    validate(pd);
    CHECK(component_count(pd) == 1);
    CHECK(determinant(pd) == det);
    CHECK(fktest::determinant_from_jones(pd) == det);
    const LaurentPoly oracle = jones(pd_from_closure(parse_braid(word)));
    const LaurentPoly value = jones(pd);
    CHECK((value == oracle || value == oracle.mirrored()));
  }
}

TEST_CASE("classify_shadow on Lissajous shadows") {
  std::mt19937 rng(fktest::suite_seed() + 43);
  int classified = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto [a, c] = random_coprime(rng, 6);
    const FourierSeries x1({{1.0, a, random_phase(rng)}}), x2({{1.0, c, random_phase(rng)}});
    ShadowReport r;
    try {
      r = classify_shadow(x1, x2);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
      continue;
    }
    ++classified;
    CHECK(r.columns == 2 * c - 1);
    CHECK(r.levels == 2 * a - 1);
    CHECK(r.plat_half_width == a);
    CHECK(r.checkerboard_rows == c - 1);
    CHECK(static_cast<int>(r.crossings.size()) == 2 * a * c - a - c);
    for (const auto& g : r.crossings) CHECK((g.column + g.level) % 2 == 1);
  }
  CHECK(classified > 0);
  CHECK_THROWS_AS(classify_shadow(FourierSeries({{1, 2, 0.3}}), FourierSeries({{1, 4, 0.1}})), Error);
}

TEST_CASE("synthesized heights reproduce the requested over/under assignment") {
  std::mt19937 rng(fktest::suite_seed() + 44);
  int done = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const auto [a, c] = random_coprime(rng, 5);
    const FourierSeries x1({{1.0, a, random_phase(rng)}}), x2({{1.0, c, random_phase(rng)}});
    std::vector<ShadowCrossing> shadow;
    try {
      shadow = find_shadow_crossings(x1, x2, {});
    } catch (const Error&) {
      continue;
    }
    std::vector<HeightRequest> requests;
    for (const auto& x : shadow) requests.push_back(fktest::uniform(rng, 0, 1) ? HeightRequest{x.s, x.t} : HeightRequest{x.t, x.s});
    const HeightOptions options;
    const FourierSeries x3 = synthesize_height(requests, options);
    double zmax = 0.0;
    for (int k = 0; k < 4096; ++k) zmax = std::max(zmax, std::abs(evaluate(x3, k / 4096.0)));
    for (const auto& r : requests) CHECK(evaluate(x3, r.over) - evaluate(x3, r.under) >= options.margin * zmax * 0.999);

    const auto records = find_crossings(FourierKnot(x1, x2, x3));
    REQUIRE(records.size() == requests.size());
    for (const auto& r : requests) {
      const double lo = std::min(r.over, r.under);
      const auto match = std::find_if(records.begin(), records.end(),
                                      [&](const CrossingRecord& rec) { return std::abs(rec.s - lo) < 1e-6; });
      REQUIRE(match != records.end());
      CHECK(match->over_is_s == (r.over == lo));
    }
    ++done;
  }
  CHECK(done > 0);
  CHECK_THROWS_AS(synthesize_height({{0.1, 0.1}}), Error);
}

TEST_CASE("fourierize closes the loop for the unknot and the trefoil") {
  const FourierizeResult unknot = fourier_index_upper_bound(parse_braid("1"));
  CHECK(unknot.knot.type() == std::array<int, 3>{1, 1, 1});
  CHECK(unknot.verification.pass);

  const FourierizeResult trefoil = fourier_index_upper_bound(parse_braid("1 1 1"));
  CHECK(trefoil.knot.type()[0] == 1);
  CHECK(trefoil.knot.type()[1] == 1);
  CHECK(trefoil.index_bound == trefoil.knot.type()[2]);
  CHECK(trefoil.verification.pass);
  CHECK(trefoil.verification.output_determinant == 3);
  CHECK(trefoil.verification.assignment_reproduced);
  const PDCode pd = diagram_of(trefoil.knot);
  CHECK(determinant(pd) == 3);
  CHECK(jones(pd) == jones(pd_from_closure(parse_braid("1 1 1"))));

  CHECK_THROWS_AS(fourier_index_upper_bound(parse_braid("1 1")), Error);
}
