#pragma once

#include <string>

#include "fourierknot/config.hpp"
#include "fourierknot/serialize.hpp"

// JSON documents produced by the fkctl subcommands. Each function throws
// fk::Error on a declared failure; the report fields named "pass" are the
// verification outcome the caller turns into an exit code.

namespace fk {

/// Rosette cache for a run: a directory-backed cache when cache_dir is set,
/// otherwise the process-wide memory cache.
RosetteCache& cache_for(const RunConfig& config);

Json run_perm(const BraidWord& word);
Json run_rosette_gen(int width, int i, int j, int sign, const RunConfig& config);
Json run_conjugate_rosette(const BraidWord& word, const RunConfig& config);
Json run_plat_normalize(const Plat& plat);
Json run_checkerboard(const Plat& plat, const RunConfig& config);
Json run_invariants(const PDCode& pd, const RunConfig& config);
std::string run_fourier_sample(const FourierKnot& knot, int count);
Json run_fourier_diagram(const FourierKnot& knot, const RunConfig& config);
Json run_fourierize(const BraidWord& word, const RunConfig& config);

/// The two explicit trefoil and figure-eight parametrizations, extracted at
/// several grids and compared with the closures of 1 1 1 and 1 -2 1 -2.
Json run_reference_examples(const RunConfig& config);

/// The same parametrizations as angular-frequency data on [0, 2 pi].
FourierKnot reference_trefoil();
FourierKnot reference_figure_eight();

}  // namespace fk
