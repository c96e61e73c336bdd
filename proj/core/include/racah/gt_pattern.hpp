#ifndef RACAH_GT_PATTERN_HPP
#define RACAH_GT_PATTERN_HPP

#include <array>
#include <compare>
#include <vector>

namespace racah {

/// Highest weight [m1, m2, m3] of an irreducible representation. The whole
/// artifact works in the m3 = 0 cone; anything else is rejected.
struct Weight3 {
  int m1 = 0;
  int m2 = 0;
  int m3 = 0;

  friend constexpr auto operator<=>(const Weight3&, const Weight3&) = default;

  bool valid() const { return m1 >= m2 && m2 >= m3 && m3 == 0; }
};

/// Throws InvalidWeight unless w.valid().
void require_valid(const Weight3& w);

/// Gelfand-Tsetlin pattern
///   m13 m23 m33
///     m12 m22
///       m11
/// with the interlacing inequalities between adjacent rows and m33 = 0.
struct GTPattern {
  int m13 = 0, m23 = 0, m33 = 0;
  int m12 = 0, m22 = 0;
  int m11 = 0;

  friend constexpr auto operator<=>(const GTPattern&,
                                    const GTPattern&) = default;

  bool valid() const {
    return m13 >= m12 && m12 >= m23 && m23 >= m22 && m22 >= m33 && m33 == 0 &&
           m12 >= m11 && m11 >= m22;
  }

  Weight3 top() const { return {m13, m23, m33}; }

  /// gl3 weight of the basis vector: row sums differenced downwards.
  std::array<int, 3> weight() const {
    return {m11, m12 + m22 - m11, m13 + m23 + m33 - m12 - m22};
  }
};

/// Throws NotAPattern unless p.valid().
void require_valid(const GTPattern& p);

/// All patterns with top row w, sorted ascending by (m12, m22, m11).
/// Throws InvalidWeight on an invalid weight.
std::vector<GTPattern> enumerate_patterns(const Weight3& w);

/// (m1 - m2 + 1)(m2 - m3 + 1)(m1 - m3 + 2) / 2 for m3 = 0.
long weyl_dimension(const Weight3& w);

}  // namespace racah

#endif
