#ifndef RACAH_MULTI_INDEX_HPP
#define RACAH_MULTI_INDEX_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <string>

#include "racah/rational.hpp"

namespace racah {

/// The six antisymmetric variables of one alphabet, in the canonical order
/// A1, A2, A3, A12, A13, A23 used everywhere (exponent vectors, lattice
/// directions, output).
enum class Var : int { a1 = 0, a2 = 1, a3 = 2, a12 = 3, a13 = 4, a23 = 5 };

inline constexpr int kNumVars = 6;

inline constexpr std::array<Var, kNumVars> kAllVars = {
    Var::a1, Var::a2, Var::a3, Var::a12, Var::a13, Var::a23};

const char* var_name(Var x);

/// Exponent vector over one alphabet. Componentwise integers, may hold
/// negative entries when used as a lattice representative.
struct MultiIndex6 {
  std::array<int, kNumVars> e{};

  int operator[](Var x) const { return e[static_cast<int>(x)]; }
  int& operator[](Var x) { return e[static_cast<int>(x)]; }

  friend constexpr auto operator<=>(const MultiIndex6&,
                                    const MultiIndex6&) = default;

  MultiIndex6 operator+(const MultiIndex6& o) const {
    MultiIndex6 r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  MultiIndex6 operator-(const MultiIndex6& o) const {
    MultiIndex6 r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  friend MultiIndex6 operator*(int c, const MultiIndex6& m) {
    MultiIndex6 r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = c * m.e[i];
    return r;
  }

  bool nonnegative() const {
    for (int v : e)
      if (v < 0) return false;
    return true;
  }

  bool is_zero() const { return *this == MultiIndex6{}; }

  /// Degree in the single-index variables A1, A2, A3.
  int single_degree() const { return e[0] + e[1] + e[2]; }
  /// Degree in the double-index variables A12, A13, A23.
  int double_degree() const { return e[3] + e[4] + e[5]; }
  int total_degree() const { return single_degree() + double_degree(); }

  /// Eigenvalue triple of the diagonal operators E11, E22, E33 on this
  /// monomial: each variable contributes 1 for every index it carries.
  std::array<int, 3> weight() const;

  static MultiIndex6 unit(Var x) {
    MultiIndex6 r;
    r[x] = 1;
    return r;
  }
};

/// Product of componentwise factorials; exponents must be nonnegative.
Integer multi_factorial(const MultiIndex6& m);

/// "A1^2*A23", or "1" for the zero exponent vector.
std::string monomial_name(const MultiIndex6& m);

/// Action of E_{i,j} (1-based i, j) on a single variable: substitute index j
/// by i, resort to the canonical index order, track the antisymmetry sign.
/// `nonzero` is false when j is absent or the substitution repeats an index.
struct VarSubstitution {
  bool nonzero = false;
  int sign = 0;
  Var image = Var::a1;
};

VarSubstitution substitute_index(Var x, int i, int j);

}  // namespace racah

#endif
