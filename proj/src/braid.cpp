#include "fourierknot/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fourierknot/error.hpp"

namespace fk {

namespace {

// Upper bound on the summed length of the free-group images; exceeding it
// means the word is far outside desk scale.
constexpr std::size_t kMaxArtinLetters = std::size_t{1} << 26;

void check_letter(int width, const BraidLetter& l, const char* stage) {
  if (l.index < 1 || l.index >= width)
    throw Error(ErrorKind::InvalidArgument, stage,
                "generator index " + std::to_string(l.index) + " outside [1, " +
                    std::to_string(width - 1) + "]");
  if (l.sign != 1 && l.sign != -1)
    throw Error(ErrorKind::InvalidArgument, stage, "letter sign must be +1 or -1");
}

}  // namespace

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int width, std::vector<BraidLetter> letters)
    : width_(width), letters_(std::move(letters)) {
  if (width < 1) throw Error(ErrorKind::InvalidArgument, "braid", "width must be at least 1");
  for (const auto& l : letters_) check_letter(width_, l, "braid");
}

BraidWord BraidWord::from_signed(int width, std::span<const int> letters) {
  std::vector<BraidLetter> out;
  out.reserve(letters.size());
  for (int v : letters) {
    if (v == 0) throw Error(ErrorKind::InvalidArgument, "braid", "generator index 0");
    out.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
  }
  return BraidWord(width, std::move(out));
}

std::vector<int> BraidWord::to_signed() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.index * l.sign);
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.width_ = width_;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->index, -it->sign});
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  BraidWord out = *this;
  out *= rhs;
  return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (rhs.width_ != width_)
    throw Error(ErrorKind::InvalidArgument, "braid", "incompatible widths");
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

void BraidWord::push_back(BraidLetter letter) {
  check_letter(width_, letter, "braid");
  letters_.push_back(letter);
}

BraidWord BraidWord::shifted(int offset, int new_width) const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back({l.index + offset, l.sign});
  return BraidWord(new_width, std::move(out));
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw Error(ErrorKind::InvalidArgument, "permutation", "images are not a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[p] != static_cast<int>(p + 1)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p)
    out[static_cast<std::size_t>(images_[p] - 1)] = static_cast<int>(p + 1);
  return Permutation(std::move(out));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size())
    throw Error(ErrorKind::InvalidArgument, "permutation", "size mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p)
    out[p] = (*this)(rhs.images_[p]);
  return Permutation(std::move(out));
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    os << '(';
    int p = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(p - 1)]) {
      seen[static_cast<std::size_t>(p - 1)] = true;
      if (!first) os << ' ';
      os << p;
      first = false;
      p = (*this)(p);
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------------------
// FreeGroupWord

FreeGroupWord::FreeGroupWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int g : letters) append(g);
}

void FreeGroupWord::append(int letter) {
  if (!letters_.empty() && letters_.back() == -letter)
    letters_.pop_back();
  else
    letters_.push_back(letter);
}

void FreeGroupWord::append(const FreeGroupWord& other) {
  // Cancel across the seam first, then copy the remainder in one go.
  std::size_t k = 0;
  while (k < other.letters_.size() && !letters_.empty() &&
         letters_.back() == -other.letters_[k]) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), other.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                  other.letters_.end());
}

FreeGroupWord FreeGroupWord::inverse() const {
  FreeGroupWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

std::string FreeGroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ' ';
    os << 'x' << std::abs(letters_[k]);
    if (letters_[k] < 0) os << "^-1";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Permutations and the Artin action

Permutation permutation_of(const BraidWord& word) {
  std::vector<int> arrangement(static_cast<std::size_t>(word.width()));
  std::iota(arrangement.begin(), arrangement.end(), 1);
  for (const auto& l : word.letters())
    std::swap(arrangement[static_cast<std::size_t>(l.index - 1)],
              arrangement[static_cast<std::size_t>(l.index)]);
  return Permutation(std::move(arrangement));
}

int cycle_count(const Permutation& perm) {
  std::vector<bool> seen(static_cast<std::size_t>(perm.size()), false);
  int cycles = 0;
  for (int start = 1; start <= perm.size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    ++cycles;
    for (int p = start; !seen[static_cast<std::size_t>(p - 1)]; p = perm(p))
      seen[static_cast<std::size_t>(p - 1)] = true;
  }
  return cycles;
}

bool is_pure(const BraidWord& word) { return permutation_of(word).is_identity(); }

std::vector<FreeGroupWord> artin_action(const BraidWord& word) {
  const auto s = static_cast<std::size_t>(word.width());
  std::vector<FreeGroupWord> images;
  images.reserve(s);
  for (std::size_t g = 1; g <= s; ++g) images.push_back(FreeGroupWord::generator(static_cast<int>(g)));

  std::size_t total = s;
  for (const auto& l : word.letters()) {
    auto& a = images[static_cast<std::size_t>(l.index - 1)];
    auto& b = images[static_cast<std::size_t>(l.index)];
    total -= a.size() + b.size();
    if (l.sign > 0) {
      // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
      FreeGroupWord conj = a;
      conj.append(b);
      conj.append(a.inverse());
      b = std::move(a);
      a = std::move(conj);
    } else {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      FreeGroupWord conj = b.inverse();
      conj.append(a);
      conj.append(b);
      a = std::move(b);
      b = std::move(conj);
    }
    total += a.size() + b.size();
    if (total > kMaxArtinLetters)
      throw Error(ErrorKind::Budget, "artin_action", "free-group images exceed size budget");
  }
  return images;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.width() != b.width())
    throw Error(ErrorKind::InvalidArgument, "braids_equal", "incompatible widths");
  if (a == b) return true;
  if (permutation_of(a) != permutation_of(b)) return false;
  return artin_action(a) == artin_action(b);
}

BraidWord pure_generator_word(int width, int i, int j) {
  if (!(1 <= i && i < j && j <= width))
    throw Error(ErrorKind::InvalidArgument, "pure_generator_word",
                "need 1 <= i < j <= width, got i=" + std::to_string(i) + " j=" + std::to_string(j) +
                    " width=" + std::to_string(width));
  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<std::size_t>(2 * (j - i)));
  for (int k = j - 1; k > i; --k) letters.push_back({k, 1});
  letters.push_back({i, 1});
  letters.push_back({i, 1});
  for (int k = i + 1; k < j; ++k) letters.push_back({k, -1});
  return BraidWord(width, std::move(letters));
}

LinkingMatrix linking_matrix(const BraidWord& word, bool require_pure) {
  if (require_pure && !is_pure(word))
    throw Error(ErrorKind::Precondition, "linking_matrix", "not a pure braid");
  const auto s = static_cast<std::size_t>(word.width());
  LinkingMatrix m(s, std::vector<int>(s, 0));
  std::vector<int> arrangement(s);
  std::iota(arrangement.begin(), arrangement.end(), 0);
  for (const auto& l : word.letters()) {
    auto& x = arrangement[static_cast<std::size_t>(l.index - 1)];
    auto& y = arrangement[static_cast<std::size_t>(l.index)];
    m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += l.sign;
    m[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] += l.sign;
    std::swap(x, y);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Combing

namespace {

using FactorWord = std::vector<CombFactor>;

void push_reduced(FactorWord& w, const CombFactor& f) {
  if (!w.empty() && w.back().i == f.i && w.back().j == f.j && w.back().sign == -f.sign)
    w.pop_back();
  else
    w.push_back(f);
}

// sigma_k A_{i,j}^e sigma_k^-1 as a word in band generators.
FactorWord conjugate_by_sigma(int k, const CombFactor& a) {
  const int i = a.i, j = a.j;
  FactorWord r;
  if (k == i - 1) {
    r = {{k, i, 1}, {k, j, 1}, {k, i, -1}};
  } else if (k == i && j != i + 1) {
    r = {{i + 1, j, 1}};
  } else if (k == j - 1 && k > i) {
    r = {{i, j, -1}, {i, j - 1, 1}, {i, j, 1}};
  } else if (k == j) {
    r = {{i, j + 1, 1}};
  } else {
    r = {{i, j, 1}};
  }
  if (a.sign < 0) {
    std::reverse(r.begin(), r.end());
    for (auto& f : r) f.sign = -f.sign;
  }
  return r;
}

}  // namespace

std::vector<CombFactor> comb(const BraidWord& pure) {
  if (!is_pure(pure)) throw Error(ErrorKind::Precondition, "comb", "not a pure braid");

  // Reidemeister-Schreier rewriting with positive permutation braids as coset
  // representatives. Each letter either extends the representative or
  // contributes P sigma_k^{+-2} P^-1 with P positive; that factor is expanded
  // by conjugating A_{k,k+1} through P one generator at a time.
  const int s = pure.width();
  std::vector<int> arrangement(static_cast<std::size_t>(s));
  std::iota(arrangement.begin(), arrangement.end(), 1);
  FactorWord out;

  for (const auto& l : pure.letters()) {
    const auto k = static_cast<std::size_t>(l.index - 1);
    const int left = arrangement[k];
    const int right = arrangement[k + 1];
    std::vector<int> next = arrangement;
    std::swap(next[k], next[k + 1]);

    const std::vector<int>* conjugator = nullptr;
    int sign = 0;
    if (l.sign > 0 && left > right) {
      conjugator = &next;
      sign = 1;
    } else if (l.sign < 0 && left < right) {
      conjugator = &arrangement;
      sign = -1;
    }
    if (conjugator) {
      FactorWord factor{{l.index, l.index + 1, sign}};
      const BraidWord rep = positive_lift(Permutation(*conjugator));
      const auto& letters = rep.letters();
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        FactorWord expanded;
        for (const auto& f : factor)
          for (const auto& g : conjugate_by_sigma(it->index, f)) push_reduced(expanded, g);
        factor = std::move(expanded);
      }
      for (const auto& f : factor) push_reduced(out, f);
    }
    arrangement = std::move(next);
  }
  return out;
}

BraidWord factors_word(int width, std::span<const CombFactor> factors) {
  BraidWord out(width);
  for (const auto& f : factors) {
    BraidWord g = pure_generator_word(width, f.i, f.j);
    out *= f.sign > 0 ? g : g.inverse();
  }
  return out;
}

BraidWord positive_lift(const Permutation& perm) {
  const auto& target = perm.images();
  std::vector<int> current(target.size());
  std::iota(current.begin(), current.end(), 1);
  BraidWord out(std::max(1, perm.size()));
  for (std::size_t q = 0; q < target.size(); ++q) {
    auto p = static_cast<std::size_t>(
        std::find(current.begin(), current.end(), target[q]) - current.begin());
    for (; p > q; --p) {
      std::swap(current[p - 1], current[p]);
      out.push_back({static_cast<int>(p), 1});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

BraidWord parse_braid(std::string_view text, int width) {
  std::vector<int> letters;
  std::vector<std::size_t> positions;
  const bool compact = std::any_of(text.begin(), text.end(),
                                   [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
  auto fail = [](std::size_t pos, const std::string& why) {
    throw Error(ErrorKind::Parse, "parse_braid", why + " at position " + std::to_string(pos));
  };

  if (compact) {
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      const char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c >= 'a' && c <= 'y')
        letters.push_back(c - 'a' + 1);
      else if (c >= 'A' && c <= 'Y')
        letters.push_back(-(c - 'A' + 1));
      else
        fail(pos, std::string("unexpected character '") + c + "'");
      positions.push_back(pos);
    }
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      const std::size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string token(text.substr(start, pos - start));
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(token, &used);
      } catch (const std::exception&) {
        fail(start, "malformed token '" + token + "'");
      }
      if (used != token.size()) fail(start, "malformed token '" + token + "'");
      if (value == 0) fail(start, "generator index 0 (indices start at 1)");
      if (value > 1000 || value < -1000) fail(start, "generator index out of range");
      letters.push_back(static_cast<int>(value));
      positions.push_back(start);
    }
  }

  int max_index = 0;
  for (int v : letters) max_index = std::max(max_index, std::abs(v));
  if (width == 0) width = max_index + 1;
  if (width < 1) throw Error(ErrorKind::InvalidArgument, "parse_braid", "width must be at least 1");
  for (std::size_t k = 0; k < letters.size(); ++k)
    if (std::abs(letters[k]) >= width)
      fail(positions[k], "generator index " + std::to_string(std::abs(letters[k])) +
                             " does not fit width " + std::to_string(width));
  return BraidWord::from_signed(width, letters);
}

std::string format_braid(const BraidWord& word) {
  std::ostringstream os;
  bool first = true;
  for (int v : word.to_signed()) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os.str();
}

std::string format_braid_letters(const BraidWord& word) {
  std::string out;
  for (const auto& l : word.letters()) {
    if (l.index > 25)
      throw Error(ErrorKind::InvalidArgument, "format_braid", "compact form supports indices up to 25");
    out.push_back(static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.index - 1));
  }
  return out;
}

BraidWord destabilize(const BraidWord& word) {
  std::vector<int> w = word.to_signed();
  int width = word.width();
  auto cyclic_reduce = [](std::vector<int>& v) {
    std::vector<int> r;
    for (int x : v) {
      if (!r.empty() && r.back() == -x)
        r.pop_back();
      else
        r.push_back(x);
    }
    while (r.size() >= 2 && r.front() == -r.back()) {
      r.pop_back();
      r.erase(r.begin());
    }
    v = std::move(r);
  };
  while (width > 1) {
    cyclic_reduce(w);
    const int top = width - 1;
    const auto count = std::count_if(w.begin(), w.end(), [top](int x) { return std::abs(x) == top; });
    if (count != 1) break;
    const auto at = std::find_if(w.begin(), w.end(), [top](int x) { return std::abs(x) == top; });
    // u s v ~ v u s (conjugation), then drop s.
    std::vector<int> rotated(at + 1, w.end());
    rotated.insert(rotated.end(), w.begin(), at);
    w = std::move(rotated);
    --width;
  }
  return BraidWord::from_signed(width, w);
}

}  // namespace fk
