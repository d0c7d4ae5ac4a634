#include "fourierknot/plat.hpp"

#include <algorithm>
#include <numeric>

#include "fourierknot/error.hpp"

namespace fk {

Plat::Plat(BraidWord braid) : braid_(std::move(braid)) {
  if (braid_.width() % 2 != 0) throw Error(ErrorKind::InvalidArgument, "plat", "plat width must be even");
}

std::string to_string(HildenKind kind) {
  switch (kind) {
    case HildenKind::TopTwist: return "top_twist";
    case HildenKind::TopCapSwap: return "top_cap_swap";
    case HildenKind::BottomTwist: return "bottom_twist";
    case HildenKind::BottomCapSwap: return "bottom_cap_swap";
  }
  return "unknown";
}

void CheckerboardDiagram::validate() const {
  if (half_width < 1) throw Error(ErrorKind::InvalidArgument, "checkerboard", "half-width must be positive");
  if (static_cast<int>(epsilons.size()) != half_width - 1)
    throw Error(ErrorKind::InvalidArgument, "checkerboard", "need exactly b-1 epsilons");
  for (int e : epsilons)
    if (e != 1 && e != -1) throw Error(ErrorKind::InvalidArgument, "checkerboard", "epsilons must be +1 or -1");
  if (rosette.width() != 2 * half_width)
    throw Error(ErrorKind::InvalidArgument, "checkerboard", "rosette width must be 2b");
}

namespace {

int cap_partner(int position) { return position % 2 == 1 ? position + 1 : position - 1; }

// top -> bottom map: f[q] is the bottom position reached from top position q.
std::vector<int> top_to_bottom(const BraidWord& braid) {
  const Permutation perm = permutation_of(braid);
  const auto& images = perm.images();
  std::vector<int> f(images.size() + 1);
  for (std::size_t p = 0; p < images.size(); ++p) f[static_cast<std::size_t>(images[p])] = static_cast<int>(p + 1);
  return f;
}

struct Traversal {
  std::vector<int> top;
  std::vector<int> bottom;
};

Traversal traverse(const std::vector<int>& f) {
  std::vector<int> finv(f.size());
  for (std::size_t q = 1; q < f.size(); ++q) finv[static_cast<std::size_t>(f[q])] = static_cast<int>(q);
  Traversal t;
  int q = 1;
  do {
    t.top.push_back(q);
    const int p = f[static_cast<std::size_t>(q)];
    t.bottom.push_back(p);
    const int p2 = cap_partner(p);
    t.bottom.push_back(p2);
    const int q2 = finv[static_cast<std::size_t>(p2)];
    t.top.push_back(q2);
    q = cap_partner(q2);
  } while (q != 1);
  return t;
}

BraidWord move_word(const HildenMove& m, int width) {
  const int i = m.position;
  switch (m.kind) {
    case HildenKind::TopTwist:
    case HildenKind::BottomTwist:
      return BraidWord(width, {{2 * i - 1, m.sign}});
    case HildenKind::TopCapSwap:
      return BraidWord(width, {{2 * i, 1}, {2 * i - 1, 1}, {2 * i + 1, 1}, {2 * i, 1}});
    case HildenKind::BottomCapSwap:
      return BraidWord(width, {{2 * i, 1}, {2 * i + 1, 1}, {2 * i - 1, 1}, {2 * i, 1}});
  }
  return BraidWord(width);
}

// Permutes the labels carried by plat endpoints the same way the move
// permutes the endpoints themselves.
void relabel(std::vector<int>& labels, const HildenMove& m) {
  const auto i = static_cast<std::size_t>(m.position);
  if (m.kind == HildenKind::TopTwist || m.kind == HildenKind::BottomTwist) {
    std::swap(labels[2 * i - 1], labels[2 * i]);
  } else {
    std::swap(labels[2 * i - 1], labels[2 * i + 1]);
    std::swap(labels[2 * i], labels[2 * i + 2]);
  }
}

}  // namespace

int plat_components(const Plat& plat) {
  const int n = plat.braid().width();
  // Union-find over top endpoints 0..n-1 and bottom endpoints n..2n-1.
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

  const auto f = top_to_bottom(plat.braid());
  for (int q = 1; q <= n; ++q) unite(q - 1, n + f[static_cast<std::size_t>(q)] - 1);
  for (int i = 0; i < n; i += 2) {
    unite(i, i + 1);
    unite(n + i, n + i + 1);
  }
  int components = 0;
  for (int x = 0; x < 2 * n; ++x)
    if (find(x) == x) ++components;
  return components;
}

Permutation pi0(int half_width) {
  if (half_width < 1) throw Error(ErrorKind::InvalidArgument, "pi0", "half-width must be positive");
  BraidWord w(2 * half_width);
  for (int k = 2; k < 2 * half_width; k += 2) w.push_back({k, 1});
  return permutation_of(w);
}

Plat apply_hilden_move(const Plat& plat, const HildenMove& move) {
  const int b = plat.half_width();
  const bool twist = move.kind == HildenKind::TopTwist || move.kind == HildenKind::BottomTwist;
  const int limit = twist ? b : b - 1;
  if (move.position < 1 || move.position > limit)
    throw Error(ErrorKind::InvalidArgument, "apply_hilden_move",
                to_string(move.kind) + " cap index " + std::to_string(move.position) + " outside [1, " +
                    std::to_string(limit) + "]");
  if (twist && move.sign != 1 && move.sign != -1)
    throw Error(ErrorKind::InvalidArgument, "apply_hilden_move", "twist sign must be +1 or -1");

  const BraidWord w = move_word(move, plat.braid().width());
  const bool top = move.kind == HildenKind::TopTwist || move.kind == HildenKind::TopCapSwap;
  return Plat(top ? w * plat.braid() : plat.braid() * w);
}

NormalizedPlat normalize_plat(const Plat& plat) {
  if (plat_components(plat) != 1)
    throw Error(ErrorKind::Precondition, "normalize_plat", "plat closure is not a knot");
  const int b = plat.half_width();
  const int n = 2 * b;

  // Match the k-th endpoint met while walking the current knot with the k-th
  // endpoint met while walking the closure of sigma_2 sigma_4 ... .
  const Traversal current = traverse(top_to_bottom(plat.braid()));
  BraidWord reference(n);
  for (int k = 2; k < n; k += 2) reference.push_back({k, 1});
  const Traversal target = traverse(top_to_bottom(reference));

  std::vector<int> top_label(static_cast<std::size_t>(n) + 1), bottom_label(static_cast<std::size_t>(n) + 1);
  for (std::size_t m = 0; m < current.top.size(); ++m) {
    top_label[static_cast<std::size_t>(current.top[m])] = target.top[m];
    bottom_label[static_cast<std::size_t>(current.bottom[m])] = target.bottom[m];
  }

  NormalizedPlat out{plat, {}};
  auto sort_side = [&](std::vector<int>& labels, HildenKind swap_kind, HildenKind twist_kind) {
    for (int c = 1; c <= b; ++c) {
      int holder = c;
      while (labels[static_cast<std::size_t>(2 * holder - 1)] != 2 * c - 1 &&
             labels[static_cast<std::size_t>(2 * holder)] != 2 * c - 1)
        ++holder;
      for (int k = holder - 1; k >= c; --k) {
        const HildenMove m{swap_kind, k, 1};
        out.plat = apply_hilden_move(out.plat, m);
        relabel(labels, m);
        out.moves.push_back(m);
      }
      if (labels[static_cast<std::size_t>(2 * c - 1)] != 2 * c - 1) {
        const HildenMove m{twist_kind, c, 1};
        out.plat = apply_hilden_move(out.plat, m);
        relabel(labels, m);
        out.moves.push_back(m);
      }
    }
  };
  sort_side(top_label, HildenKind::TopCapSwap, HildenKind::TopTwist);
  sort_side(bottom_label, HildenKind::BottomCapSwap, HildenKind::BottomTwist);

  if (permutation_of(out.plat.braid()) != pi0(b))
    throw Error(ErrorKind::Internal, "normalize_plat", "rerouting did not reach pi0");
  return out;
}

Plat closure_to_plat(const BraidWord& word) {
  if (cycle_count(permutation_of(word)) != 1)
    throw Error(ErrorKind::Precondition, "closure_to_plat", "closure is not a knot");
  const int s = word.width();
  const int n = 2 * s;
  // Top: adjacent cap i is carried to the nested pair (s+1-i, s+i); the word
  // sits on strands s+1..2s and strands 1..s return on the left.
  std::vector<int> top(static_cast<std::size_t>(n)), bottom(static_cast<std::size_t>(n));
  for (int i = 1; i <= s; ++i) {
    top[static_cast<std::size_t>(s - i)] = 2 * i - 1;
    top[static_cast<std::size_t>(s + i - 1)] = 2 * i;
    bottom[static_cast<std::size_t>(2 * i - 2)] = s + 1 - i;
    bottom[static_cast<std::size_t>(2 * i - 1)] = s + i;
  }
  return Plat(positive_lift(Permutation(top)) * word.shifted(s, n) * positive_lift(Permutation(bottom)));
}

CheckerboardDiagram checkerboard_from_plat(const Plat& plat, RosetteCache* cache,
                                           const RosetteSearchOptions& options) {
  const int b = plat.half_width();
  if (plat_components(plat) != 1)
    throw Error(ErrorKind::Precondition, "checkerboard_from_plat", "plat closure is not a knot");

  CheckerboardDiagram d;
  d.half_width = b;
  if (b == 1) {
    // Every word in B_2 is already a rosette of type (2, length).
    std::vector<std::vector<int>> rows;
    for (const auto& l : plat.braid().letters()) rows.push_back({l.sign});
    d.rosette = RosetteBraid(2, std::move(rows));
    return d;
  }
  if (permutation_of(plat.braid()) != pi0(b))
    throw Error(ErrorKind::Precondition, "checkerboard_from_plat", "plat not normalized");

  BraidWord even(2 * b);
  for (int k = 2; k < 2 * b; k += 2) even.push_back({k, 1});
  const BraidWord pure = even * plat.braid();
  if (!is_pure(pure)) throw Error(ErrorKind::Internal, "checkerboard_from_plat", "even layer times plat is not pure");

  d.epsilons.assign(static_cast<std::size_t>(b - 1), -1);
  d.rosette = pure_to_rosette(pure, cache, options);
  if (!braids_equal(checkerboard_word(d), plat.braid()))
    throw Error(ErrorKind::Internal, "checkerboard_from_plat", "checkerboard word differs from plat braid");
  return d;
}

BraidWord checkerboard_word(const CheckerboardDiagram& diagram) {
  diagram.validate();
  BraidWord out(2 * diagram.half_width);
  for (std::size_t k = 0; k < diagram.epsilons.size(); ++k)
    out.push_back({static_cast<int>(2 * k + 2), diagram.epsilons[k]});
  return out * rosette_word(diagram.rosette);
}

}  // namespace fk
