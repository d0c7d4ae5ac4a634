#pragma once

#include <string>
#include <vector>

#include "fourierknot/braid.hpp"
#include "fourierknot/rosette.hpp"

namespace fk {

/// Braid of even width 2b closed by caps joining positions (2i-1, 2i) at the
/// top and at the bottom. The caps are implicit.
class Plat {
public:
  explicit Plat(BraidWord braid);

  int half_width() const noexcept { return braid_.width() / 2; }
  const BraidWord& braid() const noexcept { return braid_; }

  friend bool operator==(const Plat&, const Plat&) = default;

private:
  BraidWord braid_;
};

enum class HildenKind { TopTwist, TopCapSwap, BottomTwist, BottomCapSwap };

std::string to_string(HildenKind kind);

/// Cap operation on a plat: twists turn one cap, swaps exchange caps i, i+1.
struct HildenMove {
  HildenKind kind = HildenKind::TopTwist;
  int position = 1;
  int sign = 1;

  friend bool operator==(const HildenMove&, const HildenMove&) = default;
};

/// Plat closure of sigma_2^e2 .. sigma_{2b-2}^e{2b-2} * rosette_word(rosette).
struct CheckerboardDiagram {
  int half_width = 1;
  std::vector<int> epsilons;
  RosetteBraid rosette{2};

  /// Throws if epsilons or the rosette width do not match half_width.
  void validate() const;
};

/// Link components of the plat closure.
int plat_components(const Plat& plat);

/// Permutation (2 3)(4 5)...(2b-2 2b-1) of sigma_2 sigma_4 ... sigma_{2b-2}.
Permutation pi0(int half_width);

Plat apply_hilden_move(const Plat& plat, const HildenMove& move);

struct NormalizedPlat {
  Plat plat;
  std::vector<HildenMove> moves;
};

/// Walks the knot from top cap 1 and reroutes caps with Hilden moves until
/// the braid permutation is pi0(b).
NormalizedPlat normalize_plat(const Plat& plat);

/// Plat on 2s strands whose closure is the trace closure of `word`.
Plat closure_to_plat(const BraidWord& word);

/// Checkerboard diagram with all epsilons -1 whose word equals the plat braid.
CheckerboardDiagram checkerboard_from_plat(const Plat& plat, RosetteCache* cache = nullptr,
                                           const RosetteSearchOptions& options = {});

BraidWord checkerboard_word(const CheckerboardDiagram& diagram);

}  // namespace fk
