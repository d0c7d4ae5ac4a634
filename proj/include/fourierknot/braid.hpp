#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fk {

/// One Artin generator sigma_index^sign.
struct BraidLetter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the Artin generators of B_width. The empty word is the identity.
class BraidWord {
public:
  BraidWord() = default;
  explicit BraidWord(int width, std::vector<BraidLetter> letters = {});

  /// Builds a word from signed generator indices: 2 is sigma_2, -2 its inverse.
  static BraidWord from_signed(int width, std::span<const int> letters);

  int width() const noexcept { return width_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  std::vector<int> to_signed() const;
  BraidWord inverse() const;

  /// Concatenation; both factors must have the same width.
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord& operator*=(const BraidWord& rhs);
  void push_back(BraidLetter letter);

  /// Re-embeds the word on `new_width` strands with every index moved by `offset`.
  BraidWord shifted(int offset, int new_width) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int width_ = 1;
  std::vector<BraidLetter> letters_;
};

/// Permutation of {1..n}. images()[p-1] is the starting position of the strand
/// that ends at position p, so permutation_of is a homomorphism for the usual
/// composition (a*b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_.at(static_cast<std::size_t>(point - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// (*this)(rhs(x)).
  Permutation operator*(const Permutation& rhs) const;

  /// Cycle notation, fixed points omitted; "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// Freely reduced word in x_1..x_s; letters are signed generator indices.
class FreeGroupWord {
public:
  FreeGroupWord() = default;
  explicit FreeGroupWord(std::vector<int> letters);
  static FreeGroupWord generator(int index) { return FreeGroupWord({index}); }

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  void append(int letter);
  void append(const FreeGroupWord& other);
  FreeGroupWord inverse() const;

  std::string to_string() const;

  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;

private:
  std::vector<int> letters_;
};

Permutation permutation_of(const BraidWord& word);
int cycle_count(const Permutation& perm);
bool is_pure(const BraidWord& word);

/// Images of x_1..x_s under the automorphism induced by `word`;
/// sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
std::vector<FreeGroupWord> artin_action(const BraidWord& word);

/// Exact equality in B_s through the faithful Artin action.
bool braids_equal(const BraidWord& a, const BraidWord& b);

/// Band generator A_{i,j} = (s_{j-1}..s_{i+1}) s_i^2 (s_{i+1}^-1..s_{j-1}^-1).
BraidWord pure_generator_word(int width, int i, int j);

using LinkingMatrix = std::vector<std::vector<int>>;

/// Signed crossing counts between strands labelled by their starting position.
LinkingMatrix linking_matrix(const BraidWord& word, bool require_pure);

struct CombFactor {
  int i = 1;
  int j = 2;
  int sign = 1;

  friend bool operator==(const CombFactor&, const CombFactor&) = default;
};

/// Rewrites a pure braid as a product of band generators A_{i,j}^{+-1}.
std::vector<CombFactor> comb(const BraidWord& pure);

/// Concatenation of pure_generator_word(width, i, j)^sign over the factors.
BraidWord factors_word(int width, std::span<const CombFactor> factors);

/// Positive permutation braid (each pair of strands crosses at most once)
/// whose permutation is `perm`.
BraidWord positive_lift(const Permutation& perm);

/// Parses "1 2 -1" or the compact form "abA". width == 0 infers max index + 1.
BraidWord parse_braid(std::string_view text, int width = 0);
std::string format_braid(const BraidWord& word);
std::string format_braid_letters(const BraidWord& word);

/// Removes the last strand by Markov destabilisation while sigma_{s-1}
/// occurs exactly once; the closure's link type is unchanged.
BraidWord destabilize(const BraidWord& word);

}  // namespace fk
