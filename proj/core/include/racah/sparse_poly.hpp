#ifndef RACAH_SPARSE_POLY_HPP
#define RACAH_SPARSE_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "racah/multi_index.hpp"
#include "racah/rational.hpp"

namespace racah {

/// Tag distinguishing commuting copies of the six-variable alphabet.
struct GroupId {
  std::uint8_t value = 0;
  friend constexpr auto operator<=>(GroupId, GroupId) = default;
};

/// Sparse polynomial with exact rational coefficients over one or more
/// alphabets. A monomial stores one exponent vector per group, aligned with
/// groups() (kept sorted and duplicate-free). Terms are held in a map with
/// lexicographic key order, so iteration and printing are deterministic.
class SparsePoly {
 public:
  using Monomial = std::vector<MultiIndex6>;
  using TermMap = std::map<Monomial, Rational>;

  /// Zero polynomial over no groups.
  SparsePoly() = default;
  /// Zero polynomial over the given groups (need not be sorted).
  explicit SparsePoly(std::vector<GroupId> groups);

  static SparsePoly constant(const Rational& c,
                             std::vector<GroupId> groups = {});
  static SparsePoly monomial(GroupId g, const MultiIndex6& exp,
                             const Rational& c = Rational(1));

  const std::vector<GroupId>& groups() const { return groups_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent). Arity-checked.
  Rational coeff(const Monomial& m) const;

  /// Adds c * monomial, erasing the entry if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// Same polynomial viewed over a superset of groups.
  SparsePoly extended_to(std::vector<GroupId> groups) const;

  /// Arithmetic unifies group sets, so A-polynomials over different
  /// alphabets multiply as a tensor product and same-alphabet powers
  /// collect exponents.
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const Rational& c, const SparsePoly& p);
  SparsePoly operator-() const;

  bool operator==(const SparsePoly& o) const;

  /// Human-readable form, deterministic term order. For diagnostics.
  std::string to_string() const;

 private:
  std::vector<GroupId> groups_;
  TermMap terms_;
};

/// Invariant pairing <f, g> = f(d/dA) g |_{A=0}. On monomials it is
/// diagonal: <A^a, A^b> = delta_{a,b} * a! (per group, multiplied).
/// Throws GroupMismatch unless both sides carry the same group set.
Rational pairing(const SparsePoly& f, const SparsePoly& g);

/// Action of E_{i,j} (1-based) on the alphabet g, extended by Leibniz.
/// Throws GroupMismatch when g is not one of p's groups.
SparsePoly apply_eij(int i, int j, const SparsePoly& p, GroupId g);

/// Sum of apply_eij over all groups of p (the diagonal action).
SparsePoly apply_eij_diagonal(int i, int j, const SparsePoly& p);

/// Partial derivative in variable x of alphabet g.
SparsePoly partial(const SparsePoly& p, GroupId g, Var x);

/// Per-group weight of a weight eigenvector, aligned with p.groups().
/// Throws NotWeightVector when p is zero or its monomials disagree.
std::vector<std::array<int, 3>> weight_of(const SparsePoly& p);

}  // namespace racah

#endif
