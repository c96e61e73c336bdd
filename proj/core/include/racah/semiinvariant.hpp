#ifndef RACAH_SEMIINVARIANT_HPP
#define RACAH_SEMIINVARIANT_HPP

#include <array>
#include <compare>
#include <vector>

#include "racah/brackets.hpp"
#include "racah/gt_pattern.hpp"
#include "racah/sparse_poly.hpp"

namespace racah {

/// Multiplicity label: exponents (tau_1 ... tau_8) of the bracket factors
/// (abc), (aac), (acc), (aab), (abb), (bbc), (bcc), (aabbcc) in that order.
struct TauLabel {
  std::array<int, 8> tau{};

  friend constexpr auto operator<=>(const TauLabel&, const TauLabel&) = default;

  int sum() const {
    int s = 0;
    for (int t : tau) s += t;
    return s;
  }
  bool nonnegative() const {
    for (int t : tau)
      if (t < 0) return false;
    return true;
  }
};

/// Bracket factor owning each tau slot.
BracketKind tau_bracket(int slot);

/// The weight triple a label produces, by the degree equations: each
/// bracket contributes its single/double degrees per alphabet.
std::array<Weight3, 3> tau_weights(const TauLabel& t);

/// All nonnegative labels solving the degree equations for the weight
/// triple, ascending lexicographic. With basis_only (default), keeps only
/// labels with tau_1 = 0 or tau_8 = 0, which span the multiplicity space
/// without relations; the full generator list is available behind the flag.
std::vector<TauLabel> enumerate_tau(const Weight3& w1, const Weight3& w2,
                                    const Weight3& w3, bool basis_only = true);

/// Product of bracket powers divided by tau!:
///   f = prod_k bracket_k^{tau_k} / tau_k!
/// over the alphabets (a, b, c) = (g1, g2, g3), fully expanded. The result
/// always carries all three groups. Throws IncompatibleLabels on negative
/// entries, GroupMismatch on repeated groups.
SparsePoly semiinvariant_poly(const TauLabel& t, GroupId g1, GroupId g2,
                              GroupId g3);

}  // namespace racah

#endif
