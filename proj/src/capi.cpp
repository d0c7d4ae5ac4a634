#include "fourierknot/fourierknot.h"

#include <cstring>
#include <new>
#include <string>

#include "fourierknot/commands.hpp"
#include "fourierknot/error.hpp"

struct fk_config {
  fk::RunConfig config;
};
struct fk_braid {
  fk::BraidWord word;
};
struct fk_plat {
  fk::Plat plat;
};
struct fk_pd {
  fk::PDCode pd;
};
struct fk_fourier_knot {
  fk::FourierKnot knot;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_stage;

fk_status status_of(fk::ErrorKind kind) {
  switch (kind) {
    case fk::ErrorKind::Parse: return FK_ERR_PARSE;
    case fk::ErrorKind::InvalidArgument: return FK_ERR_INVALID_ARGUMENT;
    case fk::ErrorKind::Precondition: return FK_ERR_PRECONDITION;
    case fk::ErrorKind::NotFound: return FK_ERR_NOT_FOUND;
    case fk::ErrorKind::Numeric: return FK_ERR_NUMERIC;
    case fk::ErrorKind::Budget: return FK_ERR_BUDGET;
    case fk::ErrorKind::Internal: return FK_ERR_INTERNAL;
  }
  return FK_ERR_INTERNAL;
}

template <typename F>
fk_status guarded(F&& body) {
  last_error.clear();
  last_stage.clear();
  try {
    body();
    return FK_OK;
  } catch (const fk::Error& e) {
    last_error = e.what();
    last_stage = e.stage();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FK_ERR_INTERNAL;
  }
}

template <typename... Ts>
bool any_null(const Ts*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

fk_status null_argument() {
  last_error = "null argument";
  last_stage.clear();
  return FK_ERR_NULL_ARGUMENT;
}

char* duplicate(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

const fk::RunConfig& config_or_default(const fk_config* config) {
  static const fk::RunConfig defaults;
  return config ? config->config : defaults;
}

template <typename Setter>
fk_status set_config(fk_config* config, Setter&& setter) {
  if (any_null(config)) return null_argument();
  return guarded([&] {
    fk::RunConfig updated = config->config;
    setter(updated);
    updated.validate();
    config->config = updated;
  });
}

void json_out(char** out, const fk::Json& j) { *out = duplicate(j.dump(2)); }

}  // namespace

extern "C" {

const char* fk_last_error(void) { return last_error.c_str(); }
const char* fk_last_error_stage(void) { return last_stage.c_str(); }

const char* fk_status_name(fk_status status) {
  switch (status) {
    case FK_OK: return "ok";
    case FK_ERR_PARSE: return "parse";
    case FK_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case FK_ERR_PRECONDITION: return "precondition";
    case FK_ERR_NOT_FOUND: return "not_found";
    case FK_ERR_NUMERIC: return "numeric";
    case FK_ERR_BUDGET: return "budget";
    case FK_ERR_INTERNAL: return "internal";
    case FK_ERR_NULL_ARGUMENT: return "null_argument";
  }
  return "unknown";
}

void fk_string_free(char* text) { delete[] text; }

fk_status fk_config_new(fk_config** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = new fk_config{}; });
}

void fk_config_free(fk_config* config) { delete config; }

fk_status fk_config_set_grid(fk_config* config, int grid) {
  return set_config(config, [&](fk::RunConfig& c) { c.crossing.grid = grid; });
}
fk_status fk_config_set_tolerance(fk_config* config, double newton_tolerance) {
  return set_config(config, [&](fk::RunConfig& c) { c.crossing.newton_tolerance = newton_tolerance; });
}
fk_status fk_config_set_dedup_radius(fk_config* config, double radius) {
  return set_config(config, [&](fk::RunConfig& c) { c.crossing.dedup_radius = radius; });
}
fk_status fk_config_set_height_separation(fk_config* config, double separation) {
  return set_config(config, [&](fk::RunConfig& c) { c.crossing.height_separation = separation; });
}
fk_status fk_config_set_margin(fk_config* config, double margin) {
  return set_config(config, [&](fk::RunConfig& c) { c.height.margin = margin; });
}
fk_status fk_config_set_max_frequency(fk_config* config, int max_frequency) {
  return set_config(config, [&](fk::RunConfig& c) { c.height.max_frequency = max_frequency; });
}
fk_status fk_config_set_phase_attempts(fk_config* config, uint64_t attempts) {
  return set_config(config, [&](fk::RunConfig& c) { c.phase_attempts = attempts; });
}
fk_status fk_config_set_bracket_bound(fk_config* config, int bound) {
  return set_config(config, [&](fk::RunConfig& c) { c.bracket_bound = bound; });
}
fk_status fk_config_set_seed(fk_config* config, uint64_t seed) {
  return set_config(config, [&](fk::RunConfig& c) { c.seed = seed; });
}
fk_status fk_config_set_cache_dir(fk_config* config, const char* path) {
  if (any_null(path)) return null_argument();
  return set_config(config, [&](fk::RunConfig& c) { c.cache_dir = path; });
}

fk_status fk_braid_parse(const char* text, int width, fk_braid** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { *out = new fk_braid{fk::parse_braid(text, width)}; });
}

void fk_braid_free(fk_braid* braid) { delete braid; }

fk_status fk_braid_width(const fk_braid* braid, int* out) {
  if (any_null(braid, out)) return null_argument();
  *out = braid->word.width();
  return FK_OK;
}

fk_status fk_braid_length(const fk_braid* braid, size_t* out) {
  if (any_null(braid, out)) return null_argument();
  *out = braid->word.size();
  return FK_OK;
}

fk_status fk_braid_format(const fk_braid* braid, char** out) {
  if (any_null(braid, out)) return null_argument();
  return guarded([&] { *out = duplicate(fk::format_braid(braid->word)); });
}

fk_status fk_braid_equal(const fk_braid* a, const fk_braid* b, int* out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = fk::braids_equal(a->word, b->word) ? 1 : 0; });
}

fk_status fk_braid_cycle_count(const fk_braid* braid, int* out) {
  if (any_null(braid, out)) return null_argument();
  return guarded([&] { *out = fk::cycle_count(fk::permutation_of(braid->word)); });
}

fk_status fk_plat_from_json(const char* json, fk_plat** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { *out = new fk_plat{fk::plat_from_json(fk::parse_json_text(json, "plat_json"))}; });
}

fk_status fk_plat_from_closure(const fk_braid* braid, fk_plat** out) {
  if (any_null(braid, out)) return null_argument();
  return guarded([&] { *out = new fk_plat{fk::closure_to_plat(braid->word)}; });
}

void fk_plat_free(fk_plat* plat) { delete plat; }

fk_status fk_plat_to_json(const fk_plat* plat, char** out) {
  if (any_null(plat, out)) return null_argument();
  return guarded([&] { json_out(out, fk::to_json(plat->plat)); });
}

fk_status fk_plat_components(const fk_plat* plat, int* out) {
  if (any_null(plat, out)) return null_argument();
  return guarded([&] { *out = fk::plat_components(plat->plat); });
}

fk_status fk_pd_from_closure(const fk_braid* braid, fk_pd** out) {
  if (any_null(braid, out)) return null_argument();
  return guarded([&] { *out = new fk_pd{fk::pd_from_closure(braid->word)}; });
}

fk_status fk_pd_from_plat(const fk_plat* plat, fk_pd** out) {
  if (any_null(plat, out)) return null_argument();
  return guarded([&] { *out = new fk_pd{fk::pd_from_plat(plat->plat)}; });
}

fk_status fk_pd_from_json(const char* json, fk_pd** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { *out = new fk_pd{fk::pd_from_json(fk::parse_json_text(json, "pd_json"))}; });
}

void fk_pd_free(fk_pd* pd) { delete pd; }

fk_status fk_pd_to_json(const fk_pd* pd, char** out) {
  if (any_null(pd, out)) return null_argument();
  return guarded([&] { json_out(out, fk::to_json(pd->pd)); });
}

fk_status fk_pd_crossing_count(const fk_pd* pd, size_t* out) {
  if (any_null(pd, out)) return null_argument();
  *out = pd->pd.size();
  return FK_OK;
}

fk_status fk_pd_components(const fk_pd* pd, int* out) {
  if (any_null(pd, out)) return null_argument();
  return guarded([&] { *out = fk::component_count(pd->pd); });
}

fk_status fk_pd_writhe(const fk_pd* pd, int* out) {
  if (any_null(pd, out)) return null_argument();
  return guarded([&] { *out = fk::writhe(pd->pd); });
}

fk_status fk_pd_determinant(const fk_pd* pd, int64_t* out) {
  if (any_null(pd, out)) return null_argument();
  return guarded([&] { *out = fk::determinant(pd->pd); });
}

fk_status fk_pd_jones_json(const fk_pd* pd, char** out) {
  if (any_null(pd, out)) return null_argument();
  return guarded([&] { json_out(out, fk::to_json(fk::jones(pd->pd))); });
}

fk_status fk_fourier_knot_from_json(const char* json, fk_fourier_knot** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] {
    *out = new fk_fourier_knot{fk::fourier_knot_from_json(fk::parse_json_text(json, "fourier_knot_json"))};
  });
}

void fk_fourier_knot_free(fk_fourier_knot* knot) { delete knot; }

fk_status fk_fourier_knot_to_json(const fk_fourier_knot* knot, char** out) {
  if (any_null(knot, out)) return null_argument();
  return guarded([&] { json_out(out, fk::to_json(knot->knot)); });
}

fk_status fk_fourier_knot_evaluate(const fk_fourier_knot* knot, double t, double out[3]) {
  if (any_null(knot, out)) return null_argument();
  return guarded([&] {
    const auto p = knot->knot.point(t);
    out[0] = p[0];
    out[1] = p[1];
    out[2] = p[2];
  });
}

fk_status fk_fourier_knot_diagram(const fk_fourier_knot* knot, const fk_config* config, fk_pd** out) {
  if (any_null(knot, out)) return null_argument();
  return guarded([&] { *out = new fk_pd{fk::diagram_of(knot->knot, config_or_default(config).crossing)}; });
}

fk_status fk_run_perm(const fk_braid* braid, char** out) {
  if (any_null(braid, out)) return null_argument();
  return guarded([&] { json_out(out, fk::run_perm(braid->word)); });
}

fk_status fk_run_rosette_gen(int width, int i, int j, int sign, const fk_config* config, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { json_out(out, fk::run_rosette_gen(width, i, j, sign, config_or_default(config))); });
}

fk_status fk_run_conjugate_rosette(const fk_braid* braid, const fk_config* config, char** out) {
  if (any_null(braid, out)) return null_argument();
  return guarded([&] { json_out(out, fk::run_conjugate_rosette(braid->word, config_or_default(config))); });
}

fk_status fk_run_plat_normalize(const fk_plat* plat, char** out) {
  if (any_null(plat, out)) return null_argument();
  return guarded([&] { json_out(out, fk::run_plat_normalize(plat->plat)); });
}

fk_status fk_run_checkerboard(const fk_plat* plat, const fk_config* config, char** out) {
  if (any_null(plat, out)) return null_argument();
  return guarded([&] { json_out(out, fk::run_checkerboard(plat->plat, config_or_default(config))); });
}

fk_status fk_run_invariants(const fk_pd* pd, const fk_config* config, char** out) {
  if (any_null(pd, out)) return null_argument();
  return guarded([&] { json_out(out, fk::run_invariants(pd->pd, config_or_default(config))); });
}

fk_status fk_run_fourier_sample(const fk_fourier_knot* knot, int count, char** out) {
  if (any_null(knot, out)) return null_argument();
  return guarded([&] { *out = duplicate(fk::run_fourier_sample(knot->knot, count)); });
}

fk_status fk_run_fourier_diagram(const fk_fourier_knot* knot, const fk_config* config, char** out) {
  if (any_null(knot, out)) return null_argument();
  return guarded([&] { json_out(out, fk::run_fourier_diagram(knot->knot, config_or_default(config))); });
}

fk_status fk_run_fourierize(const fk_braid* braid, const fk_config* config, char** out) {
  if (any_null(braid, out)) return null_argument();
  return guarded([&] { json_out(out, fk::run_fourierize(braid->word, config_or_default(config))); });
}

fk_status fk_run_reference_examples(const fk_config* config, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { json_out(out, fk::run_reference_examples(config_or_default(config))); });
}

}  // extern "C"
