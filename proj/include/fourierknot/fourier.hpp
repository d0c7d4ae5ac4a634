#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fourierknot/braid.hpp"
#include "fourierknot/diagram.hpp"
#include "fourierknot/plat.hpp"
#include "fourierknot/rosette.hpp"

namespace fk {

/// amplitude * cos(2 pi frequency t + phase) on t in [0, 1).
struct FourierTerm {
  double amplitude = 1.0;
  int frequency = 1;
  double phase = 0.0;

  friend bool operator==(const FourierTerm&, const FourierTerm&) = default;
};

/// Sum of terms with pairwise distinct frequencies, sorted by frequency.
/// Terms sharing a frequency are merged into one.
class FourierSeries {
public:
  explicit FourierSeries(std::vector<FourierTerm> terms);

  const std::vector<FourierTerm>& terms() const noexcept { return terms_; }
  int length() const noexcept { return static_cast<int>(terms_.size()); }
  int max_frequency() const noexcept { return terms_.back().frequency; }

  friend bool operator==(const FourierSeries&, const FourierSeries&) = default;

private:
  std::vector<FourierTerm> terms_;
};

double evaluate(const FourierSeries& f, double t);
double evaluate_derivative(const FourierSeries& f, double t);

/// Space curve (x1, x2, x3) with series lengths n1 <= n2 <= n3.
class FourierKnot {
public:
  FourierKnot(FourierSeries x1, FourierSeries x2, FourierSeries x3);

  const FourierSeries& x1() const noexcept { return x1_; }
  const FourierSeries& x2() const noexcept { return x2_; }
  const FourierSeries& x3() const noexcept { return x3_; }
  std::array<int, 3> type() const noexcept { return {x1_.length(), x2_.length(), x3_.length()}; }

  std::array<double, 3> point(double t) const;

  friend bool operator==(const FourierKnot&, const FourierKnot&) = default;

private:
  FourierSeries x1_, x2_, x3_;
};

/// Points at t_j = j / count.
std::vector<std::array<double, 3>> sample(const FourierKnot& knot, int count);

/// amplitude * cos(angular_frequency * t + phase) on t in [0, 2 pi].
struct AngularTerm {
  double amplitude = 1.0;
  double angular_frequency = 1.0;
  double phase = 0.0;
};

/// One series rescaled to [0, 1); frequencies divided by their gcd.
FourierSeries convert_angular_series(const std::vector<AngularTerm>& terms);

/// All three coordinates rescaled with a common gcd so the curve is traversed once.
FourierKnot convert_angular_parametrization(const std::vector<AngularTerm>& x1, const std::vector<AngularTerm>& x2,
                                            const std::vector<AngularTerm>& x3);

struct CrossingConfig {
  int grid = 2048;
  double newton_tolerance = 1e-12;
  double dedup_radius = 1e-6;
  double height_separation = 1e-6;

  void validate() const;
};

/// Double point of the (x1, x2) projection at parameters s < t.
struct CrossingRecord {
  double s = 0.0;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  /// +1 when (over tangent) x (under tangent) points out of the plane.
  int sign = 1;
  /// True when x3(s) > x3(t).
  bool over_is_s = true;
  double height_gap = 0.0;
};

/// Double points of the planar curve (x1, x2), without heights.
struct ShadowCrossing {
  double s = 0.0;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

std::vector<ShadowCrossing> find_shadow_crossings(const FourierSeries& x1, const FourierSeries& x2,
                                                  const CrossingConfig& config);

std::vector<CrossingRecord> find_crossings(const FourierKnot& knot, const CrossingConfig& config = {});

/// Planar diagram from the crossings, arcs labelled in parameter order.
PDCode diagram_from_crossings(const FourierKnot& knot, const std::vector<CrossingRecord>& crossings);
PDCode diagram_of(const FourierKnot& knot, const CrossingConfig& config = {});

struct GridCrossing {
  double s = 0.0;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  /// Checkerboard column counted from the smallest x1; level r sits between strands r+1
  /// and r+2 counted from the smallest x2.
  int column = 0;
  int level = 0;
};

/// Lissajous shadow with x1 frequency a and x2 frequency c: 2a strands in
/// the x1 direction, 2c - 1 columns, 2a - 1 levels. It is the shadow of a
/// checkerboard diagram of type (2a, c - 1).
struct ShadowReport {
  int frequency_x = 1;
  int frequency_y = 1;
  double phase_x = 0.0;
  double phase_y = 0.0;
  int columns = 1;
  int levels = 1;
  int plat_half_width = 1;
  int checkerboard_rows = 0;
  std::vector<GridCrossing> crossings;
};

/// Throws ErrorKind::Precondition "not generic" unless the shadow crossings
/// fill the grid cells with column + level odd, exactly once each.
ShadowReport classify_shadow(const FourierSeries& x1, const FourierSeries& x2, const CrossingConfig& config = {});

/// Which of the two parameters of shadow crossing c lies on top.
struct HeightRequest {
  double over = 0.0;
  double under = 0.0;
};

struct HeightOptions {
  /// Required z(over) - z(under), relative to max |z|.
  double margin = 0.05;
  int max_frequency = 256;
};

/// Least squares over the basis cos, sin(2 pi m t), m = 1..K, for growing K,
/// returning the first series meeting every request with the margin.
FourierSeries synthesize_height(const std::vector<HeightRequest>& requests, const HeightOptions& options = {});

struct FourierizeOptions {
  CrossingConfig crossing;
  HeightOptions height;
  std::uint64_t phase_attempts = 200;
  std::uint64_t seed = 1;
  RosetteSearchOptions rosette;
};

struct FourierizeVerification {
  std::int64_t input_determinant = 0;
  std::int64_t output_determinant = 0;
  LaurentPoly input_jones;
  LaurentPoly output_jones;
  bool assignment_reproduced = false;
  bool pass = false;
};

struct FourierizeResult {
  FourierKnot knot;
  int index_bound = 1;
  BraidWord destabilized;
  int plat_half_width = 1;
  int checkerboard_rows = 0;
  std::uint64_t phase_attempts_used = 0;
  std::size_t crossing_count = 0;
  FourierizeVerification verification;
};

/// Closed loop: braid -> plat -> checkerboard -> Lissajous shadow -> height
/// series -> re-extracted diagram compared with the input closure.
FourierizeResult fourier_index_upper_bound(const BraidWord& word, const FourierizeOptions& options = {},
                                           RosetteCache* cache = nullptr);

}  // namespace fk
