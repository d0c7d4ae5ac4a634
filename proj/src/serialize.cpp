#include "fourierknot/serialize.hpp"

#include "fourierknot/error.hpp"

namespace fk {

namespace {

template <typename T>
T field(const Json& j, const char* key, const std::string& stage) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Parse, stage, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, stage, std::string("field \"") + key + "\": " + e.what());
  }
}

std::vector<FourierTerm> terms_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(ErrorKind::Parse, "fourier_knot_json", std::string("\"") + key + "\" must be an array of terms");
  std::vector<FourierTerm> terms;
  for (const auto& t : j.at(key)) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number() || !t[1].is_number_integer() || !t[2].is_number())
      throw Error(ErrorKind::Parse, "fourier_knot_json",
                  std::string("terms of \"") + key + "\" must be [amplitude, integer frequency, phase]");
    terms.push_back({t[0].get<double>(), t[1].get<int>(), t[2].get<double>()});
  }
  return terms;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& stage) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, stage, e.what());
  }
}

Json to_json(const Permutation& perm) {
  return Json{{"images", perm.images()}, {"cycles", perm.cycle_string()}, {"cycle_count", cycle_count(perm)}};
}

Json to_json(const RosetteBraid& rosette) {
  return Json{{"s", rosette.width()}, {"n", rosette.rows()}, {"signs", rosette.signs()}};
}

RosetteBraid rosette_from_json(const Json& j) {
  const int s = field<int>(j, "s", "rosette_json");
  const int n = field<int>(j, "n", "rosette_json");
  auto signs = field<std::vector<std::vector<int>>>(j, "signs", "rosette_json");
  if (static_cast<int>(signs.size()) != n) throw Error(ErrorKind::Parse, "rosette_json", "row count differs from n");
  return RosetteBraid(s, std::move(signs));
}

Json to_json(const ConjugationCertificate& cert) {
  return Json{{"width", cert.alpha.width()},
              {"alpha", format_braid(cert.alpha)},
              {"beta", format_braid(cert.beta)},
              {"rosette", to_json(cert.rosette)}};
}

ConjugationCertificate certificate_from_json(const Json& j) {
  const int width = field<int>(j, "width", "certificate_json");
  return ConjugationCertificate{parse_braid(field<std::string>(j, "alpha", "certificate_json"), width),
                                parse_braid(field<std::string>(j, "beta", "certificate_json"), width),
                                rosette_from_json(field<Json>(j, "rosette", "certificate_json"))};
}

Json to_json(const Plat& plat) { return Json{{"b", plat.half_width()}, {"word", format_braid(plat.braid())}}; }

Plat plat_from_json(const Json& j) {
  const int b = field<int>(j, "b", "plat_json");
  if (b < 1) throw Error(ErrorKind::Parse, "plat_json", "b must be positive");
  return Plat(parse_braid(field<std::string>(j, "word", "plat_json"), 2 * b));
}

Json to_json(const HildenMove& move) {
  Json j{{"kind", to_string(move.kind)}, {"position", move.position}};
  if (move.kind == HildenKind::TopTwist || move.kind == HildenKind::BottomTwist) j["sign"] = move.sign;
  return j;
}

Json to_json(const CheckerboardDiagram& diagram) {
  return Json{{"b", diagram.half_width}, {"epsilons", diagram.epsilons}, {"rosette", to_json(diagram.rosette)}};
}

CheckerboardDiagram checkerboard_from_json(const Json& j) {
  CheckerboardDiagram d;
  d.half_width = field<int>(j, "b", "checkerboard_json");
  d.epsilons = field<std::vector<int>>(j, "epsilons", "checkerboard_json");
  d.rosette = rosette_from_json(field<Json>(j, "rosette", "checkerboard_json"));
  d.validate();
  return d;
}

Json to_json(const PDCode& pd) {
  Json j{{"crossings", pd.crossings}};
  if (pd.loops != 0) j["loops"] = pd.loops;
  return j;
}

PDCode pd_from_json(const Json& j) {
  PDCode pd;
  pd.crossings = field<std::vector<std::array<int, 4>>>(j, "crossings", "pd_json");
  if (j.contains("loops")) pd.loops = field<int>(j, "loops", "pd_json");
  validate(pd);
  return pd;
}

Json to_json(const LaurentPoly& poly, const std::string& var) {
  Json terms = Json::array();
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) terms.push_back({it->first, it->second});
  return Json{{"terms", terms}, {"text", poly.to_string(var)}};
}

Json to_json(const FourierSeries& series) {
  Json out = Json::array();
  for (const auto& t : series.terms()) out.push_back({t.amplitude, t.frequency, t.phase});
  return out;
}

FourierSeries series_from_json(const Json& j) {
  Json wrapper{{"x", j}};
  return FourierSeries(terms_from_json(wrapper, "x"));
}

Json to_json(const FourierKnot& knot) {
  return Json{{"x1", to_json(knot.x1())}, {"x2", to_json(knot.x2())}, {"x3", to_json(knot.x3())}};
}

FourierKnot fourier_knot_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "fourier_knot_json", "expected an object with x1, x2, x3");
  return FourierKnot(FourierSeries(terms_from_json(j, "x1")), FourierSeries(terms_from_json(j, "x2")),
                     FourierSeries(terms_from_json(j, "x3")));
}

Json to_json(const CrossingRecord& c) {
  return Json{{"s", c.s},          {"t", c.t},          {"x", c.x},
              {"y", c.y},          {"sign", c.sign},    {"over", c.over_is_s ? "s" : "t"},
              {"height_gap", c.height_gap}};
}

Json to_json(const ShadowReport& shadow) {
  Json crossings = Json::array();
  for (const auto& g : shadow.crossings)
    crossings.push_back(Json{{"s", g.s}, {"t", g.t}, {"x", g.x}, {"y", g.y}, {"column", g.column}, {"level", g.level}});
  return Json{{"frequencies", {shadow.frequency_x, shadow.frequency_y}},
              {"phases", {shadow.phase_x, shadow.phase_y}},
              {"columns", shadow.columns},
              {"levels", shadow.levels},
              {"checkerboard_type", {2 * shadow.plat_half_width, shadow.checkerboard_rows}},
              {"crossings", crossings}};
}

}  // namespace fk
