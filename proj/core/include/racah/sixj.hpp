#ifndef RACAH_SIXJ_HPP
#define RACAH_SIXJ_HPP

#include <array>
#include <functional>

#include "racah/gt_pattern.hpp"
#include "racah/rational.hpp"
#include "racah/semiinvariant.hpp"
#include "racah/zsupport.hpp"

namespace racah {

/// A 6j evaluation request: six highest weights and the four multiplicity
/// labels of the couplings (v1 v2 | u), (u v3 | w), (v2 v3 | h),
/// (v1 h | w). Each label must solve the degree equations of its triple,
/// which pins all six weights; the explicit weights are validated, not
/// trusted.
struct SixJProblem {
  Weight3 v1, v2, u, v3, w, h;
  std::array<TauLabel, 4> labels;
};

struct SixJOptions {
  /// Upper bound on the product of the six basis sizes in the
  /// definitional path.
  long long pattern_product_limit = 50000000;
  /// Testing hook: rescale every basis vector by this factor (nonzero);
  /// the 6j value must not move. Disables internal caching when set.
  std::function<Rational(const GTPattern&)> basis_scale;
};

/// How the four factors share the six alphabets: factor f_deriv acts with
/// derivatives in its letter letter_deriv on the variables that factor
/// f_var supplies through its letter letter_var. Letters are 0=a, 1=b, 2=c.
struct GroupLink {
  int f_deriv;
  int letter_deriv;
  int f_var;
  int letter_var;
};

/// The combinatorial core of one 6j evaluation: the four factor supports
/// and the six shared-alphabet links whose paired degree profiles must be
/// equal for a tuple to contribute.
struct MatchingSystem {
  std::array<ShiftedLattice, 4> supports;
  std::array<GroupLink, 6> links;
};

/// Validates the problem and assembles its matching data.
/// Throws IncompatibleLabels when any label fails its triple.
MatchingSystem build_matching_system(const SixJProblem& p);

/// True iff at least one matched support tuple exists. False guarantees a
/// zero 6j; matching is on supports, so a true result can still produce a
/// zero value through cancellation.
bool selection_rule(const SixJProblem& p);

/// Lattice path: each factor's degree-profile coefficients are the support
/// sums sign(x)/x! from the z-point enumeration, projected onto the
/// per-alphabet solution spaces (agkz_project), then contracted over
/// matched tuples with one degree factorial per (shared alphabet, variable)
/// pair. Without the projection the contraction picks up cross terms of
/// the quadric ideals and stops agreeing with the definitional value.
Rational sixj_lattice(const SixJProblem& p);

/// Differential contraction: the same factorial-weighted join, on
/// coefficients obtained by expanding the semiinvariant product and
/// projecting it alphabet by alphabet.
Rational sixj_contract(const SixJProblem& p);

/// Definitional sum over six-tuples of basis vectors of the product of the
/// four 3j pairings divided by the six squared norms. Throws ScaleExceeded
/// when the basis-product count exceeds the configured bound.
Rational sixj_by_definition(const SixJProblem& p, const SixJOptions& opts = {});

}  // namespace racah

#endif
