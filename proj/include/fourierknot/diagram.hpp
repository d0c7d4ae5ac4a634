#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fourierknot/braid.hpp"
#include "fourierknot/plat.hpp"

namespace fk {

/// Integer Laurent polynomial in one variable; zero coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);
  static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }

  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);

  /// Multiplies by c * x^shift.
  LaurentPoly scaled(int shift, std::int64_t c = 1) const;
  /// x -> x^-1.
  LaurentPoly mirrored() const;
  /// Exact quotient; throws if `divisor` does not divide this polynomial.
  LaurentPoly divided_by(const LaurentPoly& divisor) const;
  /// x -> x^(1/factor); every exponent must be divisible by factor.
  LaurentPoly exponents_divided(int factor) const;

  /// "-A^5 - A^-3 + A^-7" style, highest exponent first; "0" when empty.
  std::string to_string(const std::string& variable = "A") const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  void add_term(int exponent, std::int64_t c);
  std::map<int, std::int64_t> terms_;
};

/// Planar diagram code. Each crossing lists its four arc labels
/// counterclockwise starting at the incoming under-strand; the under-strand
/// runs from entry 0 to entry 2. A crossing is positive when the over-strand
/// runs from entry 3 to entry 1. `loops` counts crossingless components.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int loops = 0;

  std::size_t size() const noexcept { return crossings.size(); }
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Trace closure; strands run downward and sigma_k^+ has the left strand under.
PDCode pd_from_closure(const BraidWord& word);
/// Plat closure, caps joining positions (2i-1, 2i).
PDCode pd_from_plat(const Plat& plat);

/// Throws ErrorKind::InvalidArgument on labels that do not appear exactly
/// twice, non-consecutive labels, or under-strands that disagree on direction.
void validate(const PDCode& pd);

/// Link components; the empty diagram counts as one unknot.
int component_count(const PDCode& pd);

/// +1/-1 per crossing, in crossing order.
std::vector<int> crossing_signs(const PDCode& pd);
int writhe(const PDCode& pd);

inline constexpr int kDefaultBracketBound = 20;

/// Kauffman bracket by the full state sum, normalised so the unknot is 1.
/// Throws "diagram too large for exact bracket" above `max_crossings`.
LaurentPoly kauffman_bracket(const PDCode& pd, int max_crossings = kDefaultBracketBound);

/// Same polynomial computed by contracting crossings one at a time; cost
/// depends on the cut width rather than the crossing count.
LaurentPoly kauffman_bracket_contracted(const PDCode& pd);

/// (-A^3)^(-writhe) <D> in the variable A, unknot 1. The Jones polynomial in
/// t is obtained by A = t^(-1/4); the mirror image is A -> A^-1.
LaurentPoly jones(const PDCode& pd);

/// Jones polynomial of a knot in t (exponents of jones(pd) divided by -4).
LaurentPoly jones_in_t(const PDCode& pd);

/// |det| of a first minor of the colouring matrix; knots only.
std::int64_t determinant(const PDCode& pd);

}  // namespace fk
