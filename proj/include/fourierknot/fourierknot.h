#ifndef FOURIERKNOT_H
#define FOURIERKNOT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FK_API __declspec(dllexport)
#else
#define FK_API __attribute__((visibility("default")))
#endif

typedef enum fk_status {
  FK_OK = 0,
  FK_ERR_PARSE = 1,
  FK_ERR_INVALID_ARGUMENT = 2,
  FK_ERR_PRECONDITION = 3,
  FK_ERR_NOT_FOUND = 4,
  FK_ERR_NUMERIC = 5,
  FK_ERR_BUDGET = 6,
  FK_ERR_INTERNAL = 7,
  FK_ERR_NULL_ARGUMENT = 8
} fk_status;

typedef struct fk_config fk_config;
typedef struct fk_braid fk_braid;
typedef struct fk_plat fk_plat;
typedef struct fk_pd fk_pd;
typedef struct fk_fourier_knot fk_fourier_knot;

/* Message of the last failure on the calling thread ("stage: message"), or "". */
FK_API const char* fk_last_error(void);
/* Stage name of the last failure on the calling thread, or "". */
FK_API const char* fk_last_error_stage(void);
FK_API const char* fk_status_name(fk_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
FK_API void fk_string_free(char* text);

FK_API fk_status fk_config_new(fk_config** out);
FK_API void fk_config_free(fk_config* config);
FK_API fk_status fk_config_set_grid(fk_config* config, int grid);
FK_API fk_status fk_config_set_tolerance(fk_config* config, double newton_tolerance);
FK_API fk_status fk_config_set_dedup_radius(fk_config* config, double radius);
FK_API fk_status fk_config_set_height_separation(fk_config* config, double separation);
FK_API fk_status fk_config_set_margin(fk_config* config, double margin);
FK_API fk_status fk_config_set_max_frequency(fk_config* config, int max_frequency);
FK_API fk_status fk_config_set_phase_attempts(fk_config* config, uint64_t attempts);
FK_API fk_status fk_config_set_bracket_bound(fk_config* config, int bound);
FK_API fk_status fk_config_set_seed(fk_config* config, uint64_t seed);
FK_API fk_status fk_config_set_cache_dir(fk_config* config, const char* path);

/* width == 0 infers max index + 1. */
FK_API fk_status fk_braid_parse(const char* text, int width, fk_braid** out);
FK_API void fk_braid_free(fk_braid* braid);
FK_API fk_status fk_braid_width(const fk_braid* braid, int* out);
FK_API fk_status fk_braid_length(const fk_braid* braid, size_t* out);
FK_API fk_status fk_braid_format(const fk_braid* braid, char** out);
FK_API fk_status fk_braid_equal(const fk_braid* a, const fk_braid* b, int* out);
FK_API fk_status fk_braid_cycle_count(const fk_braid* braid, int* out);

FK_API fk_status fk_plat_from_json(const char* json, fk_plat** out);
FK_API fk_status fk_plat_from_closure(const fk_braid* braid, fk_plat** out);
FK_API void fk_plat_free(fk_plat* plat);
FK_API fk_status fk_plat_to_json(const fk_plat* plat, char** out);
FK_API fk_status fk_plat_components(const fk_plat* plat, int* out);

FK_API fk_status fk_pd_from_closure(const fk_braid* braid, fk_pd** out);
FK_API fk_status fk_pd_from_plat(const fk_plat* plat, fk_pd** out);
FK_API fk_status fk_pd_from_json(const char* json, fk_pd** out);
FK_API void fk_pd_free(fk_pd* pd);
FK_API fk_status fk_pd_to_json(const fk_pd* pd, char** out);
FK_API fk_status fk_pd_crossing_count(const fk_pd* pd, size_t* out);
FK_API fk_status fk_pd_components(const fk_pd* pd, int* out);
FK_API fk_status fk_pd_writhe(const fk_pd* pd, int* out);
FK_API fk_status fk_pd_determinant(const fk_pd* pd, int64_t* out);
/* Jones polynomial in the bracket variable A as JSON. */
FK_API fk_status fk_pd_jones_json(const fk_pd* pd, char** out);

FK_API fk_status fk_fourier_knot_from_json(const char* json, fk_fourier_knot** out);
FK_API void fk_fourier_knot_free(fk_fourier_knot* knot);
FK_API fk_status fk_fourier_knot_to_json(const fk_fourier_knot* knot, char** out);
FK_API fk_status fk_fourier_knot_evaluate(const fk_fourier_knot* knot, double t, double out[3]);
FK_API fk_status fk_fourier_knot_diagram(const fk_fourier_knot* knot, const fk_config* config, fk_pd** out);

/* Subcommand reports as JSON documents; config may be NULL for defaults. */
FK_API fk_status fk_run_perm(const fk_braid* braid, char** out);
FK_API fk_status fk_run_rosette_gen(int width, int i, int j, int sign, const fk_config* config, char** out);
FK_API fk_status fk_run_conjugate_rosette(const fk_braid* braid, const fk_config* config, char** out);
FK_API fk_status fk_run_plat_normalize(const fk_plat* plat, char** out);
FK_API fk_status fk_run_checkerboard(const fk_plat* plat, const fk_config* config, char** out);
FK_API fk_status fk_run_invariants(const fk_pd* pd, const fk_config* config, char** out);
/* CSV with header t,x,y,z. */
FK_API fk_status fk_run_fourier_sample(const fk_fourier_knot* knot, int count, char** out);
FK_API fk_status fk_run_fourier_diagram(const fk_fourier_knot* knot, const fk_config* config, char** out);
FK_API fk_status fk_run_fourierize(const fk_braid* braid, const fk_config* config, char** out);
FK_API fk_status fk_run_reference_examples(const fk_config* config, char** out);

#ifdef __cplusplus
}
#endif

#endif
