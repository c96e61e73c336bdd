#ifndef RACAH_GAMMA_SERIES_HPP
#define RACAH_GAMMA_SERIES_HPP

#include "racah/gt_pattern.hpp"
#include "racah/multi_index.hpp"
#include "racah/rational.hpp"
#include "racah/sparse_poly.hpp"

namespace racah {

/// Direction vector of the support lattice: e1 - e2 - e13 + e23.
MultiIndex6 lattice_direction();

/// A shifted lattice class mu + Z*direction in the exponent space.
struct LatticeClass {
  MultiIndex6 representative;
  MultiIndex6 direction;
};

/// Finite hypergeometric sum F_mu = sum over x in (mu + Z v), x >= 0, of
/// A^x / x!. Zero when the class misses the nonnegative octant.
SparsePoly gamma_series(const MultiIndex6& mu, GroupId g);

/// True iff p solves the hypergeometric system attached to mu: the
/// second-order equation d1 d23 - d2 d13 = 0 plus the five homogeneity
/// equations whose eigenvalues are read off mu. Expects a single-group
/// polynomial; the zero polynomial passes.
bool check_gkz(const SparsePoly& p, const MultiIndex6& mu);

/// True iff p is annihilated by the antisymmetrized second-order operator
/// d1 d23 - d2 d13 + d3 d12. Expects a single-group polynomial.
bool check_agkz(const SparsePoly& p);

/// Exponent class of a pattern, normalized to the representative with
/// zero A13 coordinate.
LatticeClass gt_to_class(const GTPattern& p);

/// Basis vector of the pattern inside the polynomial solution space of the
/// antisymmetrized equation: a Plucker-corrected sum
///   F = sum_{s=0}^{smax} q_s zeta^s F_{mu - s(e3 + e12)},
/// zeta = A1 A23 - A2 A13, with q_s forced by the equation and q_0 set by
/// the normalization q_0 = 1 / sum_s t_s, t_0 = 1, t_s = 1/(s(s+1+n)).
SparsePoly agkz_basis(const GTPattern& p, GroupId g);

/// Squared invariant-pairing norm of agkz_basis(p, .). Cached.
Rational norm_sq(const GTPattern& p);

/// Projection of p onto the solution space of the antisymmetrized equation
/// in alphabet g, along the ideal of the three-term quadric
/// A1 A23 - A2 A13 + A3 A12. Fixes agkz_basis vectors, kills quadric
/// multiples, and leaves the invariant pairing against any solution
/// unchanged. Other alphabets of p ride along untouched. Throws
/// GroupMismatch when g is not one of p's groups.
SparsePoly agkz_project(const SparsePoly& p, GroupId g);

}  // namespace racah

#endif
