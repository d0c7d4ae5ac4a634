#include "fourierknot/commands.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "fourierknot/error.hpp"

namespace fk {

RosetteCache& cache_for(const RunConfig& config) {
  if (config.cache_dir.empty()) return RosetteCache::process_default();
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<RosetteCache>> caches;
  std::lock_guard lock(mutex);
  auto& slot = caches[config.cache_dir];
  if (!slot) slot = std::make_unique<RosetteCache>(config.cache_dir);
  return *slot;
}

namespace {

Json invariant_summary(const PDCode& pd) {
  Json j{{"crossings", pd.size()}, {"components", component_count(pd)}, {"writhe", writhe(pd)}};
  if (component_count(pd) == 1) j["determinant"] = determinant(pd);
  j["jones"] = to_json(jones(pd));
  return j;
}

std::string relation(const LaurentPoly& value, const LaurentPoly& oracle) {
  if (value == oracle) return "equal";
  if (value == oracle.mirrored()) return "mirror";
  return "different";
}

}  // namespace

Json run_perm(const BraidWord& word) {
  const Permutation perm = permutation_of(word);
  return Json{{"word", format_braid(word)},
              {"width", word.width()},
              {"permutation", perm.images()},
              {"cycle_notation", perm.cycle_string()},
              {"cycles", cycle_count(perm)},
              {"pure", perm.is_identity()}};
}

Json run_rosette_gen(int width, int i, int j, int sign, const RunConfig& config) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "rosette_gen", "sign must be +1 or -1");
  const RosetteBraid r = rosette_for_generator(width, i, j, sign, &cache_for(config), config.rosette);
  BraidWord target = pure_generator_word(width, i, j);
  if (sign < 0) target = target.inverse();
  return Json{{"s", width},
              {"i", i},
              {"j", j},
              {"sign", sign},
              {"rosette", to_json(r)},
              {"word", format_braid(rosette_word(r))},
              {"verified", braids_equal(rosette_word(r), target)}};
}

Json run_conjugate_rosette(const BraidWord& word, const RunConfig& config) {
  const ConjugationCertificate cert = conjugate_to_rosette(word, &cache_for(config), config.rosette);
  const PDCode in = pd_from_closure(word);
  const PDCode out = pd_from_closure(rosette_word(cert.rosette));
  const bool det_ok = determinant(in) == determinant(out);
  const bool jones_ok = jones(in) == jones(out);
  const int s = cert.rosette.width();
  return Json{{"certificate", to_json(cert)},
              {"type", {s, cert.rosette.rows()}},
              {"n", (cert.rosette.rows() - 1) / s},
              {"verified", cert.verify()},
              {"input_invariants", invariant_summary(in)},
              {"rosette_invariants", invariant_summary(out)},
              {"pass", cert.verify() && det_ok && jones_ok}};
}

Json run_plat_normalize(const Plat& plat) {
  const NormalizedPlat n = normalize_plat(plat);
  Json moves = Json::array();
  for (const auto& m : n.moves) moves.push_back(to_json(m));
  return Json{{"input", to_json(plat)},
              {"moves", moves},
              {"normalized", to_json(n.plat)},
              {"permutation", permutation_of(n.plat.braid()).images()},
              {"input_determinant", determinant(pd_from_plat(plat))},
              {"normalized_determinant", determinant(pd_from_plat(n.plat))}};
}

Json run_checkerboard(const Plat& plat, const RunConfig& config) {
  const Plat normalized =
      permutation_of(plat.braid()) == pi0(plat.half_width()) ? plat : normalize_plat(plat).plat;
  const CheckerboardDiagram d = checkerboard_from_plat(normalized, &cache_for(config), config.rosette);
  const bool equal = braids_equal(checkerboard_word(d), normalized.braid());
  const auto det_in = determinant(pd_from_plat(plat));
  const auto det_out = determinant(pd_from_plat(Plat(checkerboard_word(d))));
  return Json{{"plat", to_json(plat)},
              {"normalized", to_json(normalized)},
              {"checkerboard", to_json(d)},
              {"type", {2 * d.half_width, d.rosette.rows()}},
              {"word_equal", equal},
              {"plat_determinant", det_in},
              {"checkerboard_determinant", det_out},
              {"pass", equal && det_in == det_out}};
}

Json run_invariants(const PDCode& pd, const RunConfig& config) {
  Json j = invariant_summary(pd);
  if (component_count(pd) == 1) j["jones_t"] = to_json(jones_in_t(pd), "t");
  if (static_cast<int>(pd.size()) <= config.bracket_bound) {
    const bool agree = kauffman_bracket(pd, config.bracket_bound) == kauffman_bracket_contracted(pd);
    if (!agree) throw Error(ErrorKind::Internal, "invariants", "state sum and contraction disagree");
    j["state_sum_checked"] = true;
  } else {
    j["state_sum_checked"] = false;
  }
  j["pd"] = to_json(pd);
  return j;
}

std::string run_fourier_sample(const FourierKnot& knot, int count) {
  const auto points = sample(knot, count);
  std::ostringstream os;
  os << std::setprecision(17);
  os << "t,x,y,z\n";
  for (int j = 0; j < count; ++j) {
    const auto& p = points[static_cast<std::size_t>(j)];
    os << static_cast<double>(j) / count << ',' << p[0] << ',' << p[1] << ',' << p[2] << '\n';
  }
  return os.str();
}

Json run_fourier_diagram(const FourierKnot& knot, const RunConfig& config) {
  const auto crossings = find_crossings(knot, config.crossing);
  Json list = Json::array();
  for (const auto& c : crossings) list.push_back(to_json(c));
  const PDCode pd = diagram_from_crossings(knot, crossings);
  const auto t = knot.type();
  return Json{{"type", {t[0], t[1], t[2]}},
              {"crossings", list},
              {"pd", to_json(pd)},
              {"invariants", invariant_summary(pd)}};
}

Json run_fourierize(const BraidWord& word, const RunConfig& config) {
  const FourierizeResult r = fourier_index_upper_bound(word, config.fourierize_options(), &cache_for(config));
  const auto t = r.knot.type();
  const auto& v = r.verification;
  return Json{{"input", format_braid(word)},
              {"destabilized", format_braid(r.destabilized)},
              {"type", {t[0], t[1], t[2]}},
              {"n", r.index_bound},
              {"checkerboard_type", {2 * r.plat_half_width, r.checkerboard_rows}},
              {"phase_attempts", r.phase_attempts_used},
              {"crossings", r.crossing_count},
              {"knot", to_json(r.knot)},
              {"verification",
               {{"input_determinant", v.input_determinant},
                {"output_determinant", v.output_determinant},
                {"input_jones", to_json(v.input_jones)},
                {"output_jones", to_json(v.output_jones)},
                {"assignment_reproduced", v.assignment_reproduced},
                {"pass", v.pass}}}};
}

FourierKnot reference_trefoil() {
  return convert_angular_parametrization({{1.0, 2.0, 6.0}}, {{1.0, 3.0, 0.15}}, {{1.0, 4.0, 1.0}, {1.0, 5.0, 0.0}});
}

FourierKnot reference_figure_eight() {
  return convert_angular_parametrization({{1.0, 2.0, 0.8}}, {{1.0, 3.0, 0.15}}, {{1.0, 4.0, 1.0}, {1.0, 5.0, 0.0}});
}

Json run_reference_examples(const RunConfig& config) {
  struct Case {
    const char* name;
    FourierKnot knot;
    const char* oracle_word;
    std::int64_t expected_determinant;
  };
  const Case cases[] = {{"trefoil", reference_trefoil(), "1 1 1", 3},
                        {"figure-eight", reference_figure_eight(), "1 -2 1 -2", 5}};
  Json examples = Json::array();
  bool all = true;
  for (const auto& c : cases) {
    Json counts = Json::object();
    std::set<std::size_t> distinct;
    for (int grid : {1024, 2048, 4096}) {
      CrossingConfig cc = config.crossing;
      cc.grid = grid;
      const std::size_t n = find_crossings(c.knot, cc).size();
      counts[std::to_string(grid)] = n;
      distinct.insert(n);
    }
    const auto crossings = find_crossings(c.knot, config.crossing);
    double min_gap = crossings.empty() ? 0.0 : crossings.front().height_gap;
    for (const auto& r : crossings) min_gap = std::min(min_gap, r.height_gap);
    const PDCode pd = diagram_from_crossings(c.knot, crossings);
    const int components = component_count(pd);
    const std::int64_t det = components == 1 ? determinant(pd) : -1;
    const LaurentPoly value = jones(pd);
    const LaurentPoly oracle = jones(pd_from_closure(parse_braid(c.oracle_word)));
    const std::string rel = relation(value, oracle);
    const bool pass = components == 1 && det == c.expected_determinant && distinct.size() == 1 && rel != "different";
    all = all && pass;
    const auto t = c.knot.type();
    examples.push_back(Json{{"name", c.name},
                            {"knot", to_json(c.knot)},
                            {"type", {t[0], t[1], t[2]}},
                            {"crossings_by_grid", counts},
                            {"grid_stable", distinct.size() == 1},
                            {"min_height_gap", min_gap},
                            {"components", components},
                            {"determinant", det},
                            {"expected_determinant", c.expected_determinant},
                            {"jones", to_json(value)},
                            {"oracle_word", c.oracle_word},
                            {"oracle_jones", to_json(oracle)},
                            {"jones_relation", rel},
                            {"pass", pass}});
  }
  return Json{{"examples", examples}, {"pass", all}};
}

}  // namespace fk
