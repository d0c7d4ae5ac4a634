#include "fourierknot/fourier.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <numeric>
#include <random>
#include <sstream>

#include "fourierknot/error.hpp"

namespace fk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_unit(double t) {
  double r = t - std::floor(t);
  return r >= 1.0 ? 0.0 : r;
}

// 2 pi m t reduced before scaling, so t and t + 1 give the same angle.
double angle(int m, double t) {
  const double mt = static_cast<double>(m) * wrap_unit(t);
  return kTwoPi * (mt - std::floor(mt));
}

double circular_distance(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace

FourierSeries::FourierSeries(std::vector<FourierTerm> terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "fourier_series", "series needs at least one term");
  std::map<int, std::vector<FourierTerm>> groups;
  for (const auto& term : terms) {
    if (term.frequency < 1)
      throw Error(ErrorKind::InvalidArgument, "fourier_series",
                  "frequency " + std::to_string(term.frequency) + " must be at least 1");
    if (!std::isfinite(term.amplitude) || !std::isfinite(term.phase))
      throw Error(ErrorKind::InvalidArgument, "fourier_series", "amplitude and phase must be finite");
    if (term.amplitude == 0.0) throw Error(ErrorKind::InvalidArgument, "fourier_series", "amplitude must be non-zero");
    groups[term.frequency].push_back(term);
  }
  for (const auto& [freq, group] : groups) {
    if (group.size() == 1) {
      terms_.push_back(group.front());
      continue;
    }
    std::complex<double> sum{0.0, 0.0};
    double scale = 0.0;
    for (const auto& term : group) {
      sum += std::polar(term.amplitude, term.phase);
      scale += std::fabs(term.amplitude);
    }
    if (std::abs(sum) <= 1e-14 * scale) continue;
    terms_.push_back({std::abs(sum), freq, std::arg(sum)});
  }
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "fourier_series", "terms cancel to zero");
}

double evaluate(const FourierSeries& f, double t) {
  double sum = 0.0;
  for (const auto& term : f.terms()) sum += term.amplitude * std::cos(angle(term.frequency, t) + term.phase);
  return sum;
}

double evaluate_derivative(const FourierSeries& f, double t) {
  double sum = 0.0;
  for (const auto& term : f.terms())
    sum -= term.amplitude * kTwoPi * term.frequency * std::sin(angle(term.frequency, t) + term.phase);
  return sum;
}

FourierKnot::FourierKnot(FourierSeries x1, FourierSeries x2, FourierSeries x3)
    : x1_(std::move(x1)), x2_(std::move(x2)), x3_(std::move(x3)) {
  if (x1_.length() > x2_.length() || x2_.length() > x3_.length())
    throw Error(ErrorKind::InvalidArgument, "fourier_knot", "series lengths must satisfy n1 <= n2 <= n3");
}

std::array<double, 3> FourierKnot::point(double t) const {
  return {evaluate(x1_, t), evaluate(x2_, t), evaluate(x3_, t)};
}

std::vector<std::array<double, 3>> sample(const FourierKnot& knot, int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "sample", "sample count must be at least 1");
  std::vector<std::array<double, 3>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) out.push_back(knot.point(static_cast<double>(j) / count));
  return out;
}

// ---------------------------------------------------------------- conversion

namespace {

int integral_frequency(double k) {
  const double r = std::round(k);
  if (std::fabs(k - r) > 1e-9 || r < 1.0 || r > 1e9)
    throw Error(ErrorKind::InvalidArgument, "convert_parametrization",
                "curve does not close: angular frequency " + std::to_string(k) + " is not a positive integer");
  return static_cast<int>(r);
}

FourierSeries rescale(const std::vector<AngularTerm>& terms, int divisor) {
  std::vector<FourierTerm> out;
  for (const auto& term : terms)
    out.push_back({term.amplitude, integral_frequency(term.angular_frequency) / divisor, term.phase});
  return FourierSeries(std::move(out));
}

int frequency_gcd(std::initializer_list<const std::vector<AngularTerm>*> lists) {
  int g = 0;
  for (const auto* list : lists)
    for (const auto& term : *list) g = std::gcd(g, integral_frequency(term.angular_frequency));
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "convert_parametrization", "series needs at least one term");
  return g;
}

}  // namespace

FourierSeries convert_angular_series(const std::vector<AngularTerm>& terms) {
  return rescale(terms, frequency_gcd({&terms}));
}

FourierKnot convert_angular_parametrization(const std::vector<AngularTerm>& x1, const std::vector<AngularTerm>& x2,
                                            const std::vector<AngularTerm>& x3) {
  const int g = frequency_gcd({&x1, &x2, &x3});
  return FourierKnot(rescale(x1, g), rescale(x2, g), rescale(x3, g));
}

// ---------------------------------------------------------------- crossings

void CrossingConfig::validate() const {
  if (grid < 1) throw Error(ErrorKind::InvalidArgument, "config", "grid must be at least 1");
  if (!(newton_tolerance > 0.0) || !(dedup_radius > 0.0) || !(height_separation > 0.0))
    throw Error(ErrorKind::InvalidArgument, "config", "tolerances must be positive");
}

std::vector<ShadowCrossing> find_shadow_crossings(const FourierSeries& x1, const FourierSeries& x2,
                                                  const CrossingConfig& config) {
  config.validate();
  const int max_freq = std::max(x1.max_frequency(), x2.max_frequency());
  const int n = std::max(config.grid, 32 * max_freq);
  const auto un = static_cast<std::size_t>(n);

  std::vector<double> px(un), py(un);
  for (std::size_t j = 0; j < un; ++j) {
    const double t = static_cast<double>(j) / n;
    px[j] = evaluate(x1, t);
    py[j] = evaluate(x2, t);
  }
  std::vector<std::array<double, 4>> box(un);
  for (std::size_t j = 0; j < un; ++j) {
    const std::size_t k = (j + 1) % un;
    box[j] = {std::min(px[j], px[k]), std::max(px[j], px[k]), std::min(py[j], py[k]), std::max(py[j], py[k])};
  }

  std::vector<ShadowCrossing> found;
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = i + 2; j < un; ++j) {
      if (i == 0 && j == un - 1) continue;
      if (box[i][1] < box[j][0] || box[j][1] < box[i][0] || box[i][3] < box[j][2] || box[j][3] < box[i][2])
        continue;
      const std::size_t i2 = (i + 1) % un, j2 = (j + 1) % un;
      const double d1x = px[i2] - px[i], d1y = py[i2] - py[i];
      const double d2x = px[j2] - px[j], d2y = py[j2] - py[j];
      const double den = d1x * d2y - d1y * d2x;
      if (den == 0.0) continue;
      const double rx = px[j] - px[i], ry = py[j] - py[i];
      const double u = (rx * d2y - ry * d2x) / den;
      const double v = (rx * d1y - ry * d1x) / den;
      if (u < 0.0 || u >= 1.0 || v < 0.0 || v >= 1.0) continue;

      double s = (static_cast<double>(i) + u) / n;
      double t = (static_cast<double>(j) + v) / n;
      for (int iter = 0; iter < 60; ++iter) {
        const double f1 = evaluate(x1, s) - evaluate(x1, t);
        const double f2 = evaluate(x2, s) - evaluate(x2, t);
        const double a = evaluate_derivative(x1, s), b = -evaluate_derivative(x1, t);
        const double c = evaluate_derivative(x2, s), d = -evaluate_derivative(x2, t);
        const double det = a * d - b * c;
        if (std::fabs(det) <= 1e-9 * std::hypot(a, c) * std::hypot(b, d))
          throw Error(ErrorKind::Numeric, "find_crossings", "non-generic projection (tangential double point)");
        const double ds = (d * f1 - b * f2) / det;
        const double dt = (-c * f1 + a * f2) / det;
        s -= ds;
        t -= dt;
        if (std::fabs(ds) + std::fabs(dt) < config.newton_tolerance) break;
      }
      s = wrap_unit(s);
      t = wrap_unit(t);
      if (s > t) std::swap(s, t);
      const double residual =
          std::hypot(evaluate(x1, s) - evaluate(x1, t), evaluate(x2, s) - evaluate(x2, t));
      if (residual > 1e-9) throw Error(ErrorKind::Numeric, "find_crossings", "Newton refinement did not converge");
      if (circular_distance(s, t) < config.dedup_radius)
        throw Error(ErrorKind::Numeric, "find_crossings", "non-generic projection (cusp)");
      const bool duplicate = std::any_of(found.begin(), found.end(), [&](const ShadowCrossing& c) {
        return circular_distance(c.s, s) < config.dedup_radius && circular_distance(c.t, t) < config.dedup_radius;
      });
      if (!duplicate) found.push_back({s, t, evaluate(x1, s), evaluate(x2, s)});
    }
  }
  std::sort(found.begin(), found.end(), [](const ShadowCrossing& a, const ShadowCrossing& b) {
    return a.s != b.s ? a.s < b.s : a.t < b.t;
  });
  for (std::size_t a = 0; a < found.size(); ++a)
    for (std::size_t b = a + 1; b < found.size(); ++b)
      if (std::hypot(found[a].x - found[b].x, found[a].y - found[b].y) < 1e-7)
        throw Error(ErrorKind::Numeric, "find_crossings", "non-generic projection (triple point)");
  return found;
}

std::vector<CrossingRecord> find_crossings(const FourierKnot& knot, const CrossingConfig& config) {
  std::vector<CrossingRecord> out;
  for (const auto& c : find_shadow_crossings(knot.x1(), knot.x2(), config)) {
    const double zs = evaluate(knot.x3(), c.s), zt = evaluate(knot.x3(), c.t);
    const double gap = std::fabs(zs - zt);
    if (gap < config.height_separation)
      throw Error(ErrorKind::Numeric, "find_crossings", "height degenerate at crossing");
    CrossingRecord r;
    r.s = c.s;
    r.t = c.t;
    r.x = c.x;
    r.y = c.y;
    r.over_is_s = zs > zt;
    r.height_gap = gap;
    const double over = r.over_is_s ? c.s : c.t, under = r.over_is_s ? c.t : c.s;
    const double cross = evaluate_derivative(knot.x1(), over) * evaluate_derivative(knot.x2(), under) -
                         evaluate_derivative(knot.x2(), over) * evaluate_derivative(knot.x1(), under);
    r.sign = cross > 0.0 ? 1 : -1;
    out.push_back(r);
  }
  return out;
}

PDCode diagram_from_crossings(const FourierKnot& knot, const std::vector<CrossingRecord>& crossings) {
  PDCode pd;
  if (crossings.empty()) {
    pd.loops = 1;
    return pd;
  }
  struct Event {
    double param;
    std::size_t crossing;
    bool is_s;
  };
  std::vector<Event> events;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    events.push_back({crossings[c].s, c, true});
    events.push_back({crossings[c].t, c, false});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.param < b.param; });
  const int m = static_cast<int>(events.size());
  // Arc k+1 leaves event k; event k is entered by arc k (arc m for event 0).
  std::vector<std::array<int, 2>> in(crossings.size()), out(crossings.size());
  for (int k = 0; k < m; ++k) {
    const auto& e = events[static_cast<std::size_t>(k)];
    in[e.crossing][e.is_s ? 0 : 1] = k == 0 ? m : k;
    out[e.crossing][e.is_s ? 0 : 1] = k + 1;
  }
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto& r = crossings[c];
    const int under = r.over_is_s ? 1 : 0, over = 1 - under;
    const double pu = under == 0 ? r.s : r.t, po = over == 0 ? r.s : r.t;
    const double ux = evaluate_derivative(knot.x1(), pu), uy = evaluate_derivative(knot.x2(), pu);
    const double ox = evaluate_derivative(knot.x1(), po), oy = evaluate_derivative(knot.x2(), po);
    std::array<std::pair<double, int>, 4> slots{{{std::atan2(-uy, -ux), in[c][static_cast<std::size_t>(under)]},
                                                 {std::atan2(uy, ux), out[c][static_cast<std::size_t>(under)]},
                                                 {std::atan2(-oy, -ox), in[c][static_cast<std::size_t>(over)]},
                                                 {std::atan2(oy, ox), out[c][static_cast<std::size_t>(over)]}}};
    const double a0 = slots[0].first;
    auto rel = [&](double a) {
      double d = std::fmod(a - a0, kTwoPi);
      return d < 0 ? d + kTwoPi : d;
    };
    std::sort(slots.begin() + 1, slots.end(), [&](const auto& p, const auto& q) { return rel(p.first) < rel(q.first); });
    pd.crossings.push_back({slots[0].second, slots[1].second, slots[2].second, slots[3].second});
  }
  return pd;
}

PDCode diagram_of(const FourierKnot& knot, const CrossingConfig& config) {
  return diagram_from_crossings(knot, find_crossings(knot, config));
}

// ---------------------------------------------------------------- shadows

ShadowReport classify_shadow(const FourierSeries& x1, const FourierSeries& x2, const CrossingConfig& config) {
  if (x1.length() != 1 || x2.length() != 1)
    throw Error(ErrorKind::InvalidArgument, "classify_shadow", "shadow series must have length 1");
  const auto& tx = x1.terms().front();
  const auto& ty = x2.terms().front();
  const int a = tx.frequency, c = ty.frequency;
  auto not_generic = [](const std::string& why) {
    return Error(ErrorKind::Precondition, "classify_shadow", "not generic: " + why);
  };
  if (std::gcd(a, c) != 1) throw not_generic("frequencies share a common factor");

  std::vector<ShadowCrossing> raw;
  try {
    raw = find_shadow_crossings(x1, x2, config);
  } catch (const Error& e) {
    throw not_generic(e.detail());
  }
  const std::size_t expected = static_cast<std::size_t>(2 * a * c - a - c);
  if (raw.size() != expected)
    throw not_generic(std::to_string(raw.size()) + " crossings, expected " + std::to_string(expected));

  ShadowReport report;
  report.frequency_x = a;
  report.frequency_y = c;
  report.phase_x = tx.phase;
  report.phase_y = ty.phase;
  report.columns = 2 * c - 1;
  report.levels = 2 * a - 1;
  report.plat_half_width = a;
  report.checkerboard_rows = c - 1;
  if (raw.empty()) return report;

  // Levels from the strands over each crossing's x1 value: solutions of
  // amp * cos(theta) = x.
  std::vector<std::pair<double, int>> by_x;
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    const auto& r = raw[idx];
    const double ratio = std::clamp(r.x / tx.amplitude, -1.0, 1.0);
    const double base = std::acos(ratio);
    int below = 0, through = 0;
    for (int k = 0; k < a; ++k)
      for (double theta : {base, -base}) {
        const double tau = wrap_unit((theta - tx.phase + kTwoPi * k) / (kTwoPi * a));
        const double y = evaluate(x2, tau);
        if (std::fabs(y - r.y) < 1e-7)
          ++through;
        else if (y < r.y)
          ++below;
      }
    if (through != 2) throw not_generic("crossing not between exactly two strands");
    by_x.emplace_back(r.x, below);
  }
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return by_x[p].first < by_x[q].first; });

  // Maximal runs of same-parity levels in x1 order commute into one column.
  std::vector<std::vector<bool>> cell(static_cast<std::size_t>(report.columns),
                                      std::vector<bool>(static_cast<std::size_t>(report.levels), false));
  int column = 0;
  for (std::size_t idx : order) {
    const int level = by_x[idx].second;
    if ((column + level) % 2 == 0)
      ++column;
    else if (column < report.columns && cell[static_cast<std::size_t>(column)][static_cast<std::size_t>(level)])
      column += 2;
    if (level >= report.levels || column >= report.columns ||
        cell[static_cast<std::size_t>(column)][static_cast<std::size_t>(level)])
      throw not_generic("crossing grid is irregular");
    cell[static_cast<std::size_t>(column)][static_cast<std::size_t>(level)] = true;
    const auto& r = raw[idx];
    report.crossings.push_back({r.s, r.t, r.x, r.y, column, level});
  }
  std::sort(report.crossings.begin(), report.crossings.end(), [](const GridCrossing& p, const GridCrossing& q) {
    return p.column != q.column ? p.column < q.column : p.level < q.level;
  });
  return report;
}

// ---------------------------------------------------------------- heights

FourierSeries synthesize_height(const std::vector<HeightRequest>& requests, const HeightOptions& options) {
  if (!(options.margin > 0.0)) throw Error(ErrorKind::InvalidArgument, "synthesize_height", "margin must be positive");
  if (options.max_frequency < 1)
    throw Error(ErrorKind::InvalidArgument, "synthesize_height", "frequency budget must be at least 1");
  if (requests.empty()) return FourierSeries({{1.0, 1, 0.0}});

  const auto rows = static_cast<Eigen::Index>(requests.size());
  int k = 1;
  double best_ratio = -std::numeric_limits<double>::infinity();
  while (true) {
    Eigen::MatrixXd basis(rows, 2 * k);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const auto& q = requests[static_cast<std::size_t>(r)];
      for (int m = 1; m <= k; ++m) {
        basis(r, 2 * (m - 1)) = std::cos(angle(m, q.over)) - std::cos(angle(m, q.under));
        basis(r, 2 * (m - 1) + 1) = std::sin(angle(m, q.over)) - std::sin(angle(m, q.under));
      }
    }
    const Eigen::VectorXd target = Eigen::VectorXd::Ones(rows);
    const Eigen::VectorXd coef = basis.completeOrthogonalDecomposition().solve(target);

    std::vector<FourierTerm> terms;
    double largest = 0.0;
    for (int m = 1; m <= k; ++m) largest = std::max(largest, std::hypot(coef(2 * (m - 1)), coef(2 * (m - 1) + 1)));
    for (int m = 1; m <= k; ++m) {
      const double alpha = coef(2 * (m - 1)), beta = coef(2 * (m - 1) + 1);
      const double amp = std::hypot(alpha, beta);
      if (amp > 1e-12 * largest) terms.push_back({amp, m, std::atan2(-beta, alpha)});
    }
    if (!terms.empty()) {
      FourierSeries z(std::move(terms));
      const int samples = std::max(4096, 16 * k);
      double zmax = 0.0;
      for (int j = 0; j < samples; ++j) zmax = std::max(zmax, std::fabs(evaluate(z, static_cast<double>(j) / samples)));
      for (const auto& q : requests) {
        zmax = std::max({zmax, std::fabs(evaluate(z, q.over)), std::fabs(evaluate(z, q.under))});
      }
      double worst = std::numeric_limits<double>::infinity();
      for (const auto& q : requests) worst = std::min(worst, evaluate(z, q.over) - evaluate(z, q.under));
      const double ratio = zmax > 0.0 ? worst / zmax : -1.0;
      best_ratio = std::max(best_ratio, ratio);
      if (ratio >= options.margin) return z;
    }
    if (k >= options.max_frequency) break;
    k = k < 32 ? k + 1 : std::min(options.max_frequency, (k * 5 + 3) / 4);
  }
  std::ostringstream msg;
  msg << "height synthesis budget exceeded: " << requests.size() << " requests, frequencies up to " << k
      << ", best relative margin " << best_ratio << " < " << options.margin << " (raise --max-frequency)";
  throw Error(ErrorKind::Budget, "synthesize_height", msg.str());
}

// ---------------------------------------------------------------- pipeline

namespace {

int checkerboard_exponent(const CheckerboardDiagram& d, int column, int generator) {
  if (column == 0) return d.epsilons[static_cast<std::size_t>(generator / 2 - 1)];
  const int row = (column + 1) / 2 - 1;
  return d.rosette.signs()[static_cast<std::size_t>(row)][static_cast<std::size_t>(generator - 1)];
}

}  // namespace

FourierizeResult fourier_index_upper_bound(const BraidWord& word, const FourierizeOptions& options,
                                           RosetteCache* cache) {
  options.crossing.validate();
  if (cycle_count(permutation_of(word)) != 1)
    throw Error(ErrorKind::Precondition, "fourierize", "closure is not a knot");

  const PDCode input_pd = pd_from_closure(word);
  FourierizeVerification check;
  check.input_determinant = determinant(input_pd);
  check.input_jones = jones(input_pd);

  const BraidWord reduced = destabilize(word);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);

  std::vector<HeightRequest> requests;
  int half_width = 1, rows = 0;
  std::uint64_t attempts = 0;
  FourierSeries sx({{1.0, 1, 0.0}}), sy({{1.0, 1, -std::numbers::pi / 2}});

  if (reduced.width() > 1) {
    const Plat plat = normalize_plat(closure_to_plat(reduced)).plat;
    const CheckerboardDiagram board = checkerboard_from_plat(plat, cache, options.rosette);
    half_width = board.half_width;
    rows = board.rosette.rows();

    std::optional<ShadowReport> shadow;
    std::string last_reason;
    while (!shadow && attempts < options.phase_attempts) {
      ++attempts;
      const double px = phase(rng), py = phase(rng);
      FourierSeries cx({{1.0, half_width, px}}), cy({{1.0, rows + 1, py}});
      try {
        shadow = classify_shadow(cx, cy, options.crossing);
        sx = cx;
        sy = cy;
      } catch (const Error& e) {
        last_reason = e.detail();
      }
    }
    if (!shadow)
      throw Error(ErrorKind::Budget, "fourierize.shadow",
                  "no generic shadow of type (" + std::to_string(2 * half_width) + ", " + std::to_string(rows) +
                      ") within " + std::to_string(options.phase_attempts) + " phase attempts; last: " + last_reason);

    for (const auto& g : shadow->crossings) {
      const int e = checkerboard_exponent(board, g.column, g.level + 1);
      const double slope_s = evaluate_derivative(sx, g.s) * evaluate_derivative(sy, g.s);
      const double slope_t = evaluate_derivative(sx, g.t) * evaluate_derivative(sy, g.t);
      if ((slope_s > 0) == (slope_t > 0))
        throw Error(ErrorKind::Internal, "fourierize.transfer", "crossing strands do not have opposite slopes");
      const double rising = slope_s > 0 ? g.s : g.t;
      const double falling = slope_s > 0 ? g.t : g.s;
      // Exponent +1: the rising strand passes under.
      requests.push_back(e > 0 ? HeightRequest{falling, rising} : HeightRequest{rising, falling});
    }
  }

  FourierSeries z = synthesize_height(requests, options.height);
  FourierKnot knot(sx, sy, z);

  const auto crossings = find_crossings(knot, options.crossing);
  check.assignment_reproduced = crossings.size() == requests.size();
  for (const auto& q : requests) {
    const auto it = std::find_if(crossings.begin(), crossings.end(), [&](const CrossingRecord& r) {
      const double lo = std::min(q.over, q.under), hi = std::max(q.over, q.under);
      return circular_distance(r.s, lo) < options.crossing.dedup_radius &&
             circular_distance(r.t, hi) < options.crossing.dedup_radius;
    });
    if (it == crossings.end() || (it->over_is_s ? it->s : it->t) != (q.over < q.under ? it->s : it->t))
      check.assignment_reproduced = false;
  }
  const PDCode out_pd = diagram_from_crossings(knot, crossings);
  check.output_determinant = determinant(out_pd);
  check.output_jones = jones(out_pd);
  check.pass = check.assignment_reproduced && check.input_determinant == check.output_determinant &&
               check.input_jones == check.output_jones;

  if (!check.pass)
    throw Error(ErrorKind::Internal, "fourierize.verify",
                "re-extracted diagram disagrees: determinant " + std::to_string(check.output_determinant) +
                    " vs " + std::to_string(check.input_determinant) + ", jones " +
                    check.output_jones.to_string() + " vs " + check.input_jones.to_string() +
                    (check.assignment_reproduced ? "" : ", over/under assignment not reproduced"));

  return FourierizeResult{knot, knot.x3().length(), reduced, half_width, rows, attempts, crossings.size(), check};
}

}  // namespace fk
