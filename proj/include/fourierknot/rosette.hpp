#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "fourierknot/braid.hpp"

namespace fk {

/// Sign matrix of a rosette braid of type (s, n): n rows of s-1 signs; entry
/// (r, j-1) is the exponent of sigma_j in row r.
class RosetteBraid {
public:
  explicit RosetteBraid(int width, std::vector<std::vector<int>> signs = {});

  int width() const noexcept { return width_; }
  int rows() const noexcept { return static_cast<int>(signs_.size()); }
  const std::vector<std::vector<int>>& signs() const noexcept { return signs_; }

  /// Rows of `other` appended after the rows of this rosette.
  RosetteBraid then(const RosetteBraid& other) const;

  friend bool operator==(const RosetteBraid&, const RosetteBraid&) = default;

private:
  int width_;
  std::vector<std::vector<int>> signs_;
};

/// Row by row: odd generators ascending, then even generators ascending.
BraidWord rosette_word(const RosetteBraid& rosette);

/// The all-plus row of type (s, 1).
RosetteBraid plus_row(int width);

/// Permutation of any element of R(s, 1); signs do not matter.
Permutation row_permutation(int width);

struct RosettePermutationReport {
  int cycle_count = 0;
  bool is_pure = false;
  std::string classified_case;
};

/// Checks the permutation statements for rosettes of type (s,1), (s,ms) and
/// (s,ms+1); a violation throws ErrorKind::Internal.
RosettePermutationReport check_rosette_permutation(const RosetteBraid& rosette);

/// Results of the rosette searches, keyed by parameters. Entries loaded from
/// disk are re-verified with braids_equal before use; a corrupt file is
/// recomputed and overwritten. Safe for concurrent readers with one writer.
class RosetteCache {
public:
  RosetteCache() = default;
  explicit RosetteCache(std::filesystem::path directory);

  RosetteCache(const RosetteCache&) = delete;
  RosetteCache& operator=(const RosetteCache&) = delete;

  const std::filesystem::path& directory() const noexcept { return directory_; }

  std::optional<RosetteBraid> lookup(const std::string& key, const BraidWord& expected) const;
  void store(const std::string& key, const RosetteBraid& rosette);

  std::size_t disk_hits() const;
  std::size_t rejected_files() const;

  /// Memory-only cache shared by calls that do not pass their own.
  static RosetteCache& process_default();

private:
  std::filesystem::path directory_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::string, RosetteBraid> memory_;
  mutable std::size_t disk_hits_ = 0;
  mutable std::size_t rejected_ = 0;
};

/// Layered construction: strands stacked by a depth order, so every crossing
/// sign is forced except those between `special` strands, which get
/// `special_sign`. Depth orders are tried lexicographically.
std::optional<RosetteBraid> search_rosette_layered(int width, const BraidWord& target,
                                                   std::optional<std::pair<int, int>> special,
                                                   int special_sign, std::uint64_t max_orders);

/// Enumerates all 2^{s(s-1)} sign matrices of type (s, s) in lexicographic
/// order (+ before -), pruned by the linking matrix, verified by braids_equal.
std::optional<RosetteBraid> search_rosette_exhaustive(int width, const BraidWord& target,
                                                      std::uint64_t budget);

struct RosetteSearchOptions {
  std::uint64_t layered_orders = 1'000'000;
  /// Exhaustive fallback is attempted only while 2^{s(s-1)} fits this budget.
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 20;
};

/// Type (s, s) rosette equal to A_{i,j}^sign.
RosetteBraid rosette_for_generator(int width, int i, int j, int sign,
                                   RosetteCache* cache = nullptr,
                                   const RosetteSearchOptions& options = {});

/// Largest width identity_rosette supports.
inline constexpr int kMaxRosetteWidth = 26;

/// Type (s, ms) rosette equal to the identity braid.
RosetteBraid identity_rosette(int width, RosetteCache* cache = nullptr,
                              const RosetteSearchOptions& options = {});

/// Combs a pure braid and substitutes one (s, s) block per factor.
RosetteBraid pure_to_rosette(const BraidWord& pure, RosetteCache* cache = nullptr,
                             const RosetteSearchOptions& options = {});

struct ConjugationCertificate {
  BraidWord alpha;
  BraidWord beta;
  RosetteBraid rosette{2};

  /// braids_equal(beta^-1 alpha beta, rosette_word(rosette)).
  bool verify() const;
};

/// Conjugates a knot-closure braid into a rosette of type (s, ns+1).
ConjugationCertificate conjugate_to_rosette(const BraidWord& alpha, RosetteCache* cache = nullptr,
                                            const RosetteSearchOptions& options = {});

}  // namespace fk
