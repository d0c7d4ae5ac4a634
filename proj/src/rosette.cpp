#include "fourierknot/rosette.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fourierknot/error.hpp"
#include "fourierknot/serialize.hpp"

namespace fk {

RosetteBraid::RosetteBraid(int width, std::vector<std::vector<int>> signs)
    : width_(width), signs_(std::move(signs)) {
  if (width_ < 2) throw Error(ErrorKind::InvalidArgument, "rosette", "width must be at least 2");
  for (const auto& row : signs_) {
    if (static_cast<int>(row.size()) != width_ - 1)
      throw Error(ErrorKind::InvalidArgument, "rosette",
                  "each row needs exactly " + std::to_string(width_ - 1) + " signs");
    for (int e : row)
      if (e != 1 && e != -1)
        throw Error(ErrorKind::InvalidArgument, "rosette", "signs must be +1 or -1");
  }
}

RosetteBraid RosetteBraid::then(const RosetteBraid& other) const {
  if (other.width_ != width_) throw Error(ErrorKind::InvalidArgument, "rosette", "incompatible widths");
  auto rows = signs_;
  rows.insert(rows.end(), other.signs_.begin(), other.signs_.end());
  return RosetteBraid(width_, std::move(rows));
}

namespace {

// Generator indices of one row in serialisation order.
std::vector<int> row_generators(int width) {
  std::vector<int> gens;
  for (int j = 1; j < width; j += 2) gens.push_back(j);
  for (int j = 2; j < width; j += 2) gens.push_back(j);
  return gens;
}

std::string sign_tag(int sign) { return sign > 0 ? "p" : "m"; }

}  // namespace

BraidWord rosette_word(const RosetteBraid& rosette) {
  const auto gens = row_generators(rosette.width());
  BraidWord out(rosette.width());
  for (const auto& row : rosette.signs())
    for (int j : gens) out.push_back({j, row[static_cast<std::size_t>(j - 1)]});
  return out;
}

RosetteBraid plus_row(int width) {
  return RosetteBraid(width, {std::vector<int>(static_cast<std::size_t>(width - 1), 1)});
}

Permutation row_permutation(int width) { return permutation_of(rosette_word(plus_row(width))); }

RosettePermutationReport check_rosette_permutation(const RosetteBraid& rosette) {
  const int s = rosette.width();
  const int n = rosette.rows();
  const Permutation perm = permutation_of(rosette_word(rosette));
  RosettePermutationReport report;
  report.cycle_count = cycle_count(perm);
  report.is_pure = perm.is_identity();

  auto violated = [&](const std::string& what) {
    throw Error(ErrorKind::Internal, "check_rosette_permutation",
                "type (" + std::to_string(s) + "," + std::to_string(n) + "): " + what);
  };
  if (n == 1) {
    report.classified_case = "n=1";
    if (report.cycle_count != 1) violated("single row is not an s-cycle");
  } else if (n % s == 0) {
    report.classified_case = n == s ? "n=s" : "n=ms";
    if (!report.is_pure) violated("permutation is not the identity");
  } else if (n % s == 1) {
    report.classified_case = "n=ms+1";
    if (report.cycle_count != 1) violated("permutation is not an s-cycle");
  } else {
    report.classified_case = "other";
  }
  return report;
}

// ---------------------------------------------------------------------------
// Cache

RosetteCache::RosetteCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  if (!directory_.empty()) std::filesystem::create_directories(directory_);
}

RosetteCache& RosetteCache::process_default() {
  static RosetteCache cache;
  return cache;
}

std::optional<RosetteBraid> RosetteCache::lookup(const std::string& key,
                                                 const BraidWord& expected) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memory_.find(key); it != memory_.end()) return it->second;
  }
  if (directory_.empty()) return std::nullopt;
  const auto path = directory_ / (key + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;

  std::optional<RosetteBraid> loaded;
  try {
    std::stringstream buffer;
    buffer << in.rdbuf();
    RosetteBraid r = rosette_from_json(parse_json_text(buffer.str(), "rosette_cache"));
    if (r.width() == expected.width() && braids_equal(rosette_word(r), expected)) loaded = std::move(r);
  } catch (const std::exception&) {
  }

  std::unique_lock lock(mutex_);
  if (!loaded) {
    ++rejected_;
    return std::nullopt;
  }
  ++disk_hits_;
  memory_.insert_or_assign(key, *loaded);
  return loaded;
}

void RosetteCache::store(const std::string& key, const RosetteBraid& rosette) {
  std::unique_lock lock(mutex_);
  memory_.insert_or_assign(key, rosette);
  if (directory_.empty()) return;
  const auto path = directory_ / (key + ".json");
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::Internal, "rosette_cache", "cannot write " + tmp.string());
    out << to_json(rosette).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::size_t RosetteCache::disk_hits() const {
  std::shared_lock lock(mutex_);
  return disk_hits_;
}

std::size_t RosetteCache::rejected_files() const {
  std::shared_lock lock(mutex_);
  return rejected_;
}

// ---------------------------------------------------------------------------
// Searches

std::optional<RosetteBraid> search_rosette_layered(int width, const BraidWord& target,
                                                   std::optional<std::pair<int, int>> special,
                                                   int special_sign, std::uint64_t max_orders) {
  const int rows = width;
  const auto gens = row_generators(width);
  std::vector<int> order(static_cast<std::size_t>(width));
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> depth(static_cast<std::size_t>(width) + 1);
  const auto target_linking = linking_matrix(target, false);

  std::uint64_t tried = 0;
  do {
    if (tried++ >= max_orders) break;
    for (std::size_t d = 0; d < order.size(); ++d) depth[static_cast<std::size_t>(order[d])] = static_cast<int>(d);

    std::vector<int> arrangement(static_cast<std::size_t>(width));
    std::iota(arrangement.begin(), arrangement.end(), 1);
    std::vector<std::vector<int>> signs(static_cast<std::size_t>(rows),
                                        std::vector<int>(static_cast<std::size_t>(width - 1)));
    for (int r = 0; r < rows; ++r) {
      for (int j : gens) {
        auto& left = arrangement[static_cast<std::size_t>(j - 1)];
        auto& right = arrangement[static_cast<std::size_t>(j)];
        int sign;
        if (special && std::min(left, right) == special->first && std::max(left, right) == special->second)
          sign = special_sign;
        else
          sign = depth[static_cast<std::size_t>(left)] < depth[static_cast<std::size_t>(right)] ? 1 : -1;
        signs[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)] = sign;
        std::swap(left, right);
      }
    }
    RosetteBraid candidate(width, std::move(signs));
    const BraidWord word = rosette_word(candidate);
    if (linking_matrix(word, false) == target_linking && braids_equal(word, target)) return candidate;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

std::optional<RosetteBraid> search_rosette_exhaustive(int width, const BraidWord& target,
                                                      std::uint64_t budget) {
  const int rows = width;
  const int entries = rows * (width - 1);
  if (entries >= 63 || (std::uint64_t{1} << entries) > budget) return std::nullopt;

  // Strand pair crossing at each matrix entry; independent of the signs.
  const auto gens = row_generators(width);
  std::vector<int> pair_of_entry(static_cast<std::size_t>(entries));
  {
    std::vector<int> arrangement(static_cast<std::size_t>(width));
    std::iota(arrangement.begin(), arrangement.end(), 0);
    for (int r = 0; r < rows; ++r)
      for (int j : gens) {
        auto& a = arrangement[static_cast<std::size_t>(j - 1)];
        auto& b = arrangement[static_cast<std::size_t>(j)];
        pair_of_entry[static_cast<std::size_t>(r * (width - 1) + j - 1)] = std::min(a, b) * width + std::max(a, b);
        std::swap(a, b);
      }
  }
  const auto target_linking = linking_matrix(target, false);
  std::vector<int> wanted(static_cast<std::size_t>(width * width), 0);
  for (int a = 0; a < width; ++a)
    for (int b = a + 1; b < width; ++b)
      wanted[static_cast<std::size_t>(a * width + b)] = target_linking[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];

  std::vector<int> lk(wanted.size());
  const std::uint64_t total = std::uint64_t{1} << entries;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(lk.begin(), lk.end(), 0);
    for (int e = 0; e < entries; ++e) {
      const int sign = (mask >> (entries - 1 - e)) & 1U ? -1 : 1;
      lk[static_cast<std::size_t>(pair_of_entry[static_cast<std::size_t>(e)])] += sign;
    }
    if (lk != wanted) continue;
    std::vector<std::vector<int>> signs(static_cast<std::size_t>(rows),
                                        std::vector<int>(static_cast<std::size_t>(width - 1)));
    for (int e = 0; e < entries; ++e)
      signs[static_cast<std::size_t>(e / (width - 1))][static_cast<std::size_t>(e % (width - 1))] =
          (mask >> (entries - 1 - e)) & 1U ? -1 : 1;
    RosetteBraid candidate(width, std::move(signs));
    if (braids_equal(rosette_word(candidate), target)) return candidate;
  }
  return std::nullopt;
}

RosetteBraid rosette_for_generator(int width, int i, int j, int sign, RosetteCache* cache,
                                   const RosetteSearchOptions& options) {
  if (width < 2 || width > kMaxRosetteWidth)
    throw Error(ErrorKind::InvalidArgument, "rosette_for_generator", "unsupported width " + std::to_string(width));
  if (!(1 <= i && i < j && j <= width))
    throw Error(ErrorKind::InvalidArgument, "rosette_for_generator", "need 1 <= i < j <= width");
  if (sign != 1 && sign != -1)
    throw Error(ErrorKind::InvalidArgument, "rosette_for_generator", "sign must be +1 or -1");
  if (!cache) cache = &RosetteCache::process_default();

  BraidWord target = pure_generator_word(width, i, j);
  if (sign < 0) target = target.inverse();
  const std::string key = "gen_s" + std::to_string(width) + "_i" + std::to_string(i) + "_j" +
                          std::to_string(j) + "_" + sign_tag(sign);
  if (auto hit = cache->lookup(key, target)) return *hit;

  auto found = search_rosette_layered(width, target, std::pair{i, j}, sign, options.layered_orders);
  if (!found) found = search_rosette_exhaustive(width, target, options.exhaustive_budget);
  if (!found) throw Error(ErrorKind::Budget, "rosette_for_generator", "no rosette found within budget");
  cache->store(key, *found);
  return *found;
}

RosetteBraid identity_rosette(int width, RosetteCache* cache, const RosetteSearchOptions& options) {
  if (width < 2 || width > kMaxRosetteWidth)
    throw Error(ErrorKind::InvalidArgument, "identity_rosette", "unsupported width " + std::to_string(width));
  if (!cache) cache = &RosetteCache::process_default();
  const BraidWord target(width);
  const std::string key = "id_s" + std::to_string(width);
  if (auto hit = cache->lookup(key, target)) return *hit;

  auto found = search_rosette_layered(width, target, std::nullopt, 1, options.layered_orders);
  if (!found) found = search_rosette_exhaustive(width, target, options.exhaustive_budget);
  if (!found) throw Error(ErrorKind::Budget, "identity_rosette", "unsupported width " + std::to_string(width));
  cache->store(key, *found);
  return *found;
}

RosetteBraid pure_to_rosette(const BraidWord& pure, RosetteCache* cache,
                             const RosetteSearchOptions& options) {
  if (!is_pure(pure)) throw Error(ErrorKind::Precondition, "pure_to_rosette", "not a pure braid");
  const auto factors = comb(pure);
  RosetteBraid out(pure.width());
  for (const auto& f : factors)
    out = out.then(rosette_for_generator(pure.width(), f.i, f.j, f.sign, cache, options));
  return out;
}

bool ConjugationCertificate::verify() const {
  if (alpha.width() != beta.width() || rosette.width() != alpha.width()) return false;
  return braids_equal(beta.inverse() * alpha * beta, rosette_word(rosette));
}

ConjugationCertificate conjugate_to_rosette(const BraidWord& alpha, RosetteCache* cache,
                                            const RosetteSearchOptions& options) {
  const int s = alpha.width();
  const Permutation pa = permutation_of(alpha);
  if (cycle_count(pa) != 1) throw Error(ErrorKind::Precondition, "conjugate_to_rosette", "closure is not a knot");
  if (s < 2) throw Error(ErrorKind::InvalidArgument, "conjugate_to_rosette", "width must be at least 2");

  // Align the cycle of pi(alpha) with the cycle of the row permutation:
  // p(b_t) = a_t gives p^-1 pi(alpha) p = pi_1.
  const Permutation p1 = row_permutation(s);
  std::vector<int> p(static_cast<std::size_t>(s));
  for (int t = 0, a = 1, b = 1; t < s; ++t, a = pa(a), b = p1(b)) p[static_cast<std::size_t>(b - 1)] = a;
  const BraidWord beta = positive_lift(Permutation(p));

  const RosetteBraid delta = plus_row(s);
  const BraidWord rest = rosette_word(delta).inverse() * beta.inverse() * alpha * beta;
  if (!is_pure(rest))
    throw Error(ErrorKind::Internal, "conjugate_to_rosette", "delta^-1 beta^-1 alpha beta is not pure");

  ConjugationCertificate cert{alpha, beta, delta.then(pure_to_rosette(rest, cache, options))};
  if (!cert.verify())
    throw Error(ErrorKind::Internal, "conjugate_to_rosette", "certificate failed verification");
  return cert;
}

}  // namespace fk
