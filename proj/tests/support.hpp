#pragma once

// Seeded generators and independent oracles shared by the test binaries.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "fourierknot/braid.hpp"
#include "fourierknot/diagram.hpp"
#include "fourierknot/rosette.hpp"

namespace fktest {

/// Seed for every randomized suite; FK_TEST_SEED overrides it.
inline std::uint32_t suite_seed() {
  if (const char* env = std::getenv("FK_TEST_SEED")) return static_cast<std::uint32_t>(std::strtoul(env, nullptr, 10));
  return 20240611u;
}

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline fk::BraidWord random_word(std::mt19937& rng, int width, int length) {
  std::vector<fk::BraidLetter> letters;
  for (int k = 0; k < length; ++k) letters.push_back({uniform(rng, 1, width - 1), uniform(rng, 0, 1) ? 1 : -1});
  return fk::BraidWord(width, letters);
}

/// Random word whose closure is a knot, drawn by rejection.
inline fk::BraidWord random_knot_word(std::mt19937& rng, int max_width, int max_length) {
  for (;;) {
    const int width = uniform(rng, 2, max_width);
    const fk::BraidWord w = random_word(rng, width, uniform(rng, 1, max_length));
    if (fk::cycle_count(fk::permutation_of(w)) == 1) return w;
  }
}

inline fk::RosetteBraid random_rosette(std::mt19937& rng, int width, int rows) {
  std::vector<std::vector<int>> signs(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(width - 1)));
  for (auto& row : signs)
    for (auto& e : row) e = uniform(rng, 0, 1) ? 1 : -1;
  return fk::RosetteBraid(width, signs);
}

/// Pure braid: a random word followed by the positive lift undoing its permutation.
inline fk::BraidWord random_pure_word(std::mt19937& rng, int width, int length) {
  fk::BraidWord w = random_word(rng, width, length);
  return w * fk::positive_lift(fk::permutation_of(w).inverse());
}

/// Strand tracking: images[p-1] is the start position of the strand ending at p.
inline std::vector<int> tracked_permutation(const fk::BraidWord& w) {
  std::vector<int> at(static_cast<std::size_t>(w.width()));
  for (int p = 0; p < w.width(); ++p) at[static_cast<std::size_t>(p)] = p + 1;
  for (const auto& l : w.letters()) std::swap(at[static_cast<std::size_t>(l.index - 1)], at[static_cast<std::size_t>(l.index)]);
  return at;
}

/// Unreduced Burau matrix at a fixed generic complex t.
inline Eigen::MatrixXcd burau(const fk::BraidWord& w, std::complex<double> t = {0.6, 0.9}) {
  const int n = w.width();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& l : w.letters()) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(n, n);
    const int i = l.index - 1;
    if (l.sign > 0) {
      g(i, i) = 1.0 - t;
      g(i, i + 1) = t;
      g(i + 1, i) = 1.0;
      g(i + 1, i + 1) = 0.0;
    } else {
      g(i, i) = 0.0;
      g(i, i + 1) = 1.0;
      g(i + 1, i) = 1.0 / t;
      g(i + 1, i + 1) = 1.0 - 1.0 / t;
    }
    m = m * g;
  }
  return m;
}

inline bool burau_equal(const fk::BraidWord& a, const fk::BraidWord& b) {
  return (burau(a) - burau(b)).cwiseAbs().maxCoeff() < 1e-8;
}

/// |V(-1)| from the Jones polynomial in t; equals the knot determinant.
inline std::int64_t determinant_from_jones(const fk::PDCode& pd) {
  const fk::LaurentPoly v = fk::jones_in_t(pd);
  std::int64_t sum = 0;
  for (const auto& [e, c] : v.terms()) sum += (e % 2 == 0) ? c : -c;
  return sum < 0 ? -sum : sum;
}

inline fk::LaurentPoly poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  fk::LaurentPoly p;
  for (const auto& [e, c] : terms) p += fk::LaurentPoly::monomial(e, c);
  return p;
}

}  // namespace fktest
