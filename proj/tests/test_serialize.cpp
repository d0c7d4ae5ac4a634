#include <doctest.h>

#include "fourierknot/commands.hpp"
#include "fourierknot/config.hpp"
#include "fourierknot/error.hpp"
#include "fourierknot/serialize.hpp"
#include "support.hpp"

using namespace fk;

TEST_CASE("JSON round trips") {
  std::mt19937 rng(fktest::suite_seed() + 50);
  for (int trial = 0; trial < 50; ++trial) {
    const int s = fktest::uniform(rng, 2, 6);
    const RosetteBraid r = fktest::random_rosette(rng, s, fktest::uniform(rng, 0, 5));
    CHECK(rosette_from_json(parse_json_text(to_json(r).dump(), "test")) == r);

    const Plat p(fktest::random_word(rng, 2 * fktest::uniform(rng, 1, 3), fktest::uniform(rng, 0, 8)));
    CHECK(plat_from_json(to_json(p)) == p);

    const PDCode pd = pd_from_closure(fktest::random_word(rng, s, fktest::uniform(rng, 0, 8)));
    CHECK(pd_from_json(to_json(pd)) == pd);
  }

  const FourierKnot knot = reference_figure_eight();
  CHECK(fourier_knot_from_json(parse_json_text(to_json(knot).dump(), "test")) == knot);

  const ConjugationCertificate cert = conjugate_to_rosette(parse_braid("1 -2 1 -2"));
  const ConjugationCertificate back = certificate_from_json(to_json(cert));
  CHECK(back.alpha == cert.alpha);
  CHECK(back.beta == cert.beta);
  CHECK(back.rosette == cert.rosette);
  CHECK(back.verify());

  const CheckerboardDiagram d = checkerboard_from_plat(Plat(parse_braid("2 2 2", 4)));
  const CheckerboardDiagram d2 = checkerboard_from_json(to_json(d));
  CHECK(d2.epsilons == d.epsilons);
  CHECK(d2.rosette == d.rosette);
}

TEST_CASE("documented field layouts") {
  CHECK(to_json(Plat(parse_braid("2 -2", 4))).dump() == R"({"b":2,"word":"2 -2"})");
  CHECK(to_json(HildenMove{HildenKind::TopCapSwap, 1, 1}).dump() == R"({"kind":"top_cap_swap","position":1})");
  CHECK(to_json(HildenMove{HildenKind::BottomTwist, 2, -1}).dump() ==
        R"({"kind":"bottom_twist","position":2,"sign":-1})");
  CHECK(to_json(FourierSeries({{1.0, 2, 0.5}})).dump() == "[[1.0,2,0.5]]");
  const Json j = to_json(LaurentPoly::monomial(-4, 1) + LaurentPoly::monomial(2, -3));
  CHECK(j["terms"].dump() == "[[2,-3],[-4,1]]");
  CHECK(j["text"] == "-3*A^2 + A^-4");
}

TEST_CASE("malformed documents raise parse errors") {
  for (const char* text : {"{", "[1,", "{\"b\": }"}) {
    try {
      parse_json_text(text, "load");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      CHECK(e.stage() == "load");
    }
  }
  CHECK_THROWS_AS(plat_from_json(Json::parse(R"({"b":2})")), Error);
  CHECK_THROWS_AS(plat_from_json(Json::parse(R"({"b":2,"word":"5"})")), Error);
  CHECK_THROWS_AS(pd_from_json(Json::parse(R"({"crossings":[[1,2,3]]})")), Error);
  CHECK_THROWS_AS(fourier_knot_from_json(Json::parse(R"({"x1":[[1,1,0]],"x2":[]})")), Error);
  CHECK_THROWS_AS(rosette_from_json(Json::parse(R"({"s":3,"n":1,"signs":[[1,2]]})")), Error);
}

TEST_CASE("run configuration validation") {
  RunConfig ok;
  CHECK_NOTHROW(ok.validate());
  RunConfig c = ok;
  c.crossing.newton_tolerance = 0.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = ok;
  c.height.margin = -1.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = ok;
  c.phase_attempts = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = ok;
  c.crossing.grid = 0;
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("command reports are deterministic") {
  const RunConfig config;
  CHECK(run_perm(parse_braid("1 2"))["cycles"] == 1);
  CHECK(run_conjugate_rosette(parse_braid("1 -2 1 -2"), config).dump() ==
        run_conjugate_rosette(parse_braid("1 -2 1 -2"), config).dump());
  const Json a = run_fourierize(parse_braid("1 1 1"), config);
  CHECK(a.dump() == run_fourierize(parse_braid("1 1 1"), config).dump());
  CHECK(a["verification"]["pass"] == true);
  CHECK(a["type"][0] == 1);
  CHECK(a["type"][1] == 1);
  const Json ref = run_reference_examples(config);
  CHECK(ref["pass"] == true);
  CHECK(ref["examples"][0]["determinant"] == 3);
  CHECK(ref["examples"][1]["determinant"] == 5);
}
