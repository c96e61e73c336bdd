#ifndef RACAH_BRACKETS_HPP
#define RACAH_BRACKETS_HPP

#include <array>

#include "racah/sparse_poly.hpp"

namespace racah {

/// The eight bracket determinants over three alphabets (a, b, c). Triple
/// brackets expand to six terms, mixed two-letter brackets to three.
enum class BracketKind : int {
  abc = 0,
  aac = 1,
  acc = 2,
  aab = 3,
  abb = 4,
  bbc = 5,
  bcc = 6,
  aabbcc = 7
};

inline constexpr std::array<BracketKind, 8> kAllBrackets = {
    BracketKind::abc, BracketKind::aac, BracketKind::acc, BracketKind::aab,
    BracketKind::abb, BracketKind::bbc, BracketKind::bcc, BracketKind::aabbcc};

const char* bracket_name(BracketKind k);

/// Signed expansion of the bracket over alphabets (a, b, c) = (g1, g2, g3).
/// All coefficients come from symbolic determinant expansion:
///  - (abc): rows of single-index variables, full 3x3 determinant;
///  - two-letter kinds: cofactor expansion along the single-letter row,
///    the doubled letter contributing its 2x2 minors A12, A13, A23;
///  - (aabbcc): 3x3 determinant in the cofactor variables
///    (x~1, x~2, x~3) = (x23, -x13, x12) of each alphabet.
/// Throws GroupMismatch when the three groups are not distinct.
SparsePoly bracket_poly(BracketKind k, GroupId g1, GroupId g2, GroupId g3);

}  // namespace racah

#endif
