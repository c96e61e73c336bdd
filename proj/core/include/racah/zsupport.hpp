#ifndef RACAH_ZSUPPORT_HPP
#define RACAH_ZSUPPORT_HPP

#include <array>
#include <map>
#include <vector>

#include "racah/brackets.hpp"
#include "racah/semiinvariant.hpp"

namespace racah {

/// Number of distinct signed monomial factors across the eight bracket
/// expansions: 6 two-letter brackets of 3 terms, plus 6 terms each for the
/// two triple determinants.
inline constexpr int kNumZ = 30;

/// Exponent vector in the 30 formal bracket-factor variables, frozen block
/// order: (aac) 1-3, (acc) 4-6, (bbc) 7-9, (bcc) 10-12, (aab) 13-15,
/// (abb) 16-18, (abc) 19-24, (aabbcc) 25-30.
using ZExponent = std::array<int, kNumZ>;

/// Polynomial in the formal factors, deterministic term order.
using ZPoly = std::map<ZExponent, Rational>;

/// Static description of one factor variable.
struct ZVarInfo {
  BracketKind block;
  int tau_slot;                          // tau exponent feeding this block
  int sign;                              // coefficient inside the bracket
  std::array<MultiIndex6, 3> letter_exp; // contribution to alphabets a, b, c
};

/// The frozen position table. Signs and contents are derived from
/// bracket_poly expansions at startup, never hardcoded.
const std::array<ZVarInfo, kNumZ>& z_table();

/// Sign of the factor at a 1-based position.
int z_sign(int position);

/// A lattice coset shift + Z-span(generators) in Z^dim. Enumeration is
/// supported for generators that are differences of two unit vectors (the
/// only kind this artifact builds): connected coordinate blocks then carry
/// all integer vectors with a fixed block sum.
struct ShiftedLattice {
  std::vector<std::vector<int>> generators;
  std::vector<int> shift;
  int dim = 0;

  /// All nonnegative points of the coset, sorted lexicographically.
  std::vector<std::vector<int>> enumerate_nonnegative() const;
};

/// Support of the label's semiinvariant in the formal factors: the shift
/// places tau_2, tau_3, tau_6, tau_7, tau_4, tau_5, tau_1, tau_8 at
/// positions 1, 4, 7, 10, 13, 16, 19, 25; the 22 generators are the
/// in-block position differences.
ShiftedLattice z_support(const TauLabel& t);

/// One enumerated support point with its sign, per-alphabet degree
/// profile, and 1/x! weight.
struct ZPointData {
  ZExponent x{};
  int sign = 1;
  std::array<MultiIndex6, 3> profile{};
  Rational inv_factorial;
};

/// Enumerated support of the label, decorated via z_table.
std::vector<ZPointData> z_points(const TauLabel& t);

/// The semiinvariant expanded in the formal factors: multiply the signed
/// linear forms bracket by bracket and divide by tau!. Independent of the
/// support enumeration, which it must reproduce as sign(x)/x!.
ZPoly semiinvariant_z_poly(const TauLabel& t);

/// Reads a Z-polynomial back into alphabet coordinates by substituting
/// each factor's monomial content (signs already sit in the coefficients).
SparsePoly z_to_alphabets(const ZPoly& zp, GroupId g1, GroupId g2, GroupId g3);

}  // namespace racah

#endif
