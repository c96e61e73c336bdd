#include "racah/brackets.hpp"

#include <algorithm>

#include "racah/error.hpp"

namespace racah {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2},
                                                       {1, 2, 0},
                                                       {2, 0, 1},
                                                       {1, 0, 2},
                                                       {0, 2, 1},
                                                       {2, 1, 0}}};

int perm_sign(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

constexpr std::array<Var, 3> kSingles = {Var::a1, Var::a2, Var::a3};

// complement of single index i (0-based) in {1,2,3}, as a double variable
constexpr std::array<Var, 3> kComplement = {Var::a23, Var::a13, Var::a12};

// cofactor variables x~i = (x23, -x13, x12)
constexpr std::array<int, 3> kCofactorSign = {1, -1, 1};

SparsePoly term(const std::array<GroupId, 3>& gs,
                const std::array<Var, 3>& vars, int sign) {
  SparsePoly t = SparsePoly::constant(Rational(sign));
  for (int k = 0; k < 3; ++k)
    t = t * SparsePoly::monomial(gs[k], MultiIndex6::unit(vars[k]));
  return t;
}

// full determinant with row k holding the single-index variables of gs[k]
SparsePoly triple_bracket(const std::array<GroupId, 3>& gs) {
  SparsePoly out;
  for (const auto& p : kPerms)
    out = out + term(gs, {kSingles[p[0]], kSingles[p[1]], kSingles[p[2]]},
                     perm_sign(p));
  return out;
}

// determinant with a doubled alphabet: expand along the single-letter row;
// the doubled rows contribute their canonical 2x2 minors
SparsePoly single_double_bracket(GroupId single_g, GroupId double_g) {
  SparsePoly out;
  for (int i = 0; i < 3; ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    out = out + (Rational(sign) *
                 (SparsePoly::monomial(single_g, MultiIndex6::unit(kSingles[i])) *
                  SparsePoly::monomial(double_g,
                                       MultiIndex6::unit(kComplement[i]))));
  }
  return out;
}

// determinant in the cofactor variables of all three alphabets
SparsePoly cofactor_bracket(const std::array<GroupId, 3>& gs) {
  SparsePoly out;
  for (const auto& p : kPerms) {
    const int sign = perm_sign(p) * kCofactorSign[p[0]] * kCofactorSign[p[1]] *
                     kCofactorSign[p[2]];
    out = out + term(gs, {kComplement[p[0]], kComplement[p[1]],
                          kComplement[p[2]]},
                     sign);
  }
  return out;
}

}  // namespace

const char* bracket_name(BracketKind k) {
  constexpr std::array<const char*, 8> names = {
      "(abc)", "(aac)", "(acc)", "(aab)", "(abb)", "(bbc)", "(bcc)", "(aabbcc)"};
  return names[static_cast<int>(k)];
}

SparsePoly bracket_poly(BracketKind k, GroupId g1, GroupId g2, GroupId g3) {
  if (g1 == g2 || g1 == g3 || g2 == g3)
    throw GroupMismatch("bracket_poly requires three distinct alphabets");
  const GroupId a = g1, b = g2, c = g3;
  switch (k) {
    case BracketKind::abc:
      return triple_bracket({a, b, c});
    case BracketKind::aac:
      return single_double_bracket(c, a);
    case BracketKind::acc:
      return single_double_bracket(a, c);
    case BracketKind::aab:
      return single_double_bracket(b, a);
    case BracketKind::abb:
      return single_double_bracket(a, b);
    case BracketKind::bbc:
      return single_double_bracket(c, b);
    case BracketKind::bcc:
      return single_double_bracket(b, c);
    case BracketKind::aabbcc:
      return cofactor_bracket({a, b, c});
  }
  throw GroupMismatch("unknown bracket kind");
}

}  // namespace racah
