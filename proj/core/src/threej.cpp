#include "racah/threej.hpp"

#include "racah/error.hpp"
#include "racah/gamma_series.hpp"

namespace racah {

Rational threej_value(const ThreeJQuery& q) {
  for (int k = 0; k < 3; ++k) {
    require_valid(q.weights[k]);
    require_valid(q.patterns[k]);
    if (q.patterns[k].top() != q.weights[k])
      throw NotAPattern("pattern top row differs from its weight");
  }
  if (tau_weights(q.label) != q.weights)
    throw IncompatibleLabels("label does not solve the degree equations "
                             "of the weight triple");

  const GroupId a{0}, b{1}, c{2};
  const SparsePoly f = semiinvariant_poly(q.label, a, b, c);
  const SparsePoly product = agkz_basis(q.patterns[0], a) *
                             agkz_basis(q.patterns[1], b) *
                             agkz_basis(q.patterns[2], c);
  Rational value = pairing(f, product);
  for (int k = 0; k < 3; ++k) value /= norm_sq(q.patterns[k]);
  return value;
}

}  // namespace racah
