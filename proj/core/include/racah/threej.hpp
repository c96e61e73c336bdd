#ifndef RACAH_THREEJ_HPP
#define RACAH_THREEJ_HPP

#include <array>

#include "racah/gt_pattern.hpp"
#include "racah/rational.hpp"
#include "racah/semiinvariant.hpp"

namespace racah {

/// One 3j evaluation request: three irreps, a basis vector in each, and the
/// multiplicity label of the coupling.
struct ThreeJQuery {
  std::array<Weight3, 3> weights;
  std::array<GTPattern, 3> patterns;
  TauLabel label;
};

/// 3j-symbol in the fixed basis normalization:
///   <f_tau, F1 F2 F3> / (|F1|^2 |F2|^2 |F3|^2).
/// Zero whenever the combined basis-vector weight misses the weight of f.
/// Throws NotAPattern for bad patterns or top-row mismatches,
/// IncompatibleLabels when the label fails the degree equations.
Rational threej_value(const ThreeJQuery& q);

}  // namespace racah

#endif
