#pragma once

#include <cstdint>
#include <string>

#include "fourierknot/diagram.hpp"
#include "fourierknot/error.hpp"
#include "fourierknot/fourier.hpp"
#include "fourierknot/rosette.hpp"

namespace fk {

/// Tolerances and budgets shared by the CLI and the C API.
struct RunConfig {
  CrossingConfig crossing;
  HeightOptions height;
  RosetteSearchOptions rosette;
  int bracket_bound = kDefaultBracketBound;
  std::uint64_t phase_attempts = 200;
  std::uint64_t seed = 1;
  std::string cache_dir;

  /// Throws ErrorKind::InvalidArgument for non-positive tolerances or zero budgets.
  void validate() const {
    crossing.validate();
    if (!(height.margin > 0.0)) throw Error(ErrorKind::InvalidArgument, "config", "margin must be positive");
    if (height.max_frequency < 1 || bracket_bound < 1 || phase_attempts < 1 || rosette.layered_orders < 1 ||
        rosette.exhaustive_budget < 1)
      throw Error(ErrorKind::InvalidArgument, "config", "budgets must be at least 1");
  }

  FourierizeOptions fourierize_options() const {
    return FourierizeOptions{crossing, height, phase_attempts, seed, rosette};
  }
};

}  // namespace fk
