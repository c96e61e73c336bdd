#include "racah/semiinvariant.hpp"

#include <algorithm>

#include "racah/error.hpp"

namespace racah {

namespace {

// single/double degree added per unit of tau_k, for alphabets a, b, c
struct DegreeRow {
  std::array<int, 3> single;
  std::array<int, 3> dbl;
};

constexpr std::array<DegreeRow, 8> kDegrees = {{
    {{1, 1, 1}, {0, 0, 0}},  // (abc)
    {{0, 0, 1}, {1, 0, 0}},  // (aac)
    {{1, 0, 0}, {0, 0, 1}},  // (acc)
    {{0, 1, 0}, {1, 0, 0}},  // (aab)
    {{1, 0, 0}, {0, 1, 0}},  // (abb)
    {{0, 0, 1}, {0, 1, 0}},  // (bbc)
    {{0, 1, 0}, {0, 0, 1}},  // (bcc)
    {{0, 0, 0}, {1, 1, 1}},  // (aabbcc)
}};

}  // namespace

BracketKind tau_bracket(int slot) { return kAllBrackets[slot]; }

std::array<Weight3, 3> tau_weights(const TauLabel& t) {
  std::array<int, 3> single{};
  std::array<int, 3> dbl{};
  for (int k = 0; k < 8; ++k)
    for (int g = 0; g < 3; ++g) {
      single[g] += t.tau[k] * kDegrees[k].single[g];
      dbl[g] += t.tau[k] * kDegrees[k].dbl[g];
    }
  std::array<Weight3, 3> w;
  for (int g = 0; g < 3; ++g) w[g] = {single[g] + dbl[g], dbl[g], 0};
  return w;
}

std::vector<TauLabel> enumerate_tau(const Weight3& w1, const Weight3& w2,
                                    const Weight3& w3, bool basis_only) {
  require_valid(w1);
  require_valid(w2);
  require_valid(w3);
  std::vector<TauLabel> out;
  // double degrees pin tau_8 plus one free choice per alphabet; the three
  // remaining single-degree equations are then checked directly
  const int t8max = std::min({w1.m2, w2.m2, w3.m2});
  for (int t8 = 0; t8 <= t8max; ++t8)
    for (int t2 = 0; t2 + t8 <= w1.m2; ++t2)
      for (int t5 = 0; t5 + t8 <= w2.m2; ++t5)
        for (int t3 = 0; t3 + t8 <= w3.m2; ++t3) {
          const int t4 = w1.m2 - t8 - t2;
          const int t6 = w2.m2 - t8 - t5;
          const int t7 = w3.m2 - t8 - t3;
          const int t1 = w1.m1 - (t2 + t3 + t4 + t5 + t8);
          if (t1 < 0) continue;
          if (t1 + t4 + t5 + t6 + t7 + t8 != w2.m1) continue;
          if (t1 + t2 + t3 + t6 + t7 + t8 != w3.m1) continue;
          if (basis_only && t1 != 0 && t8 != 0) continue;
          out.push_back(TauLabel{{t1, t2, t3, t4, t5, t6, t7, t8}});
        }
  std::sort(out.begin(), out.end());
  return out;
}

SparsePoly semiinvariant_poly(const TauLabel& t, GroupId g1, GroupId g2,
                              GroupId g3) {
  if (!t.nonnegative())
    throw IncompatibleLabels("label has negative entries");
  if (g1 == g2 || g1 == g3 || g2 == g3)
    throw GroupMismatch("semiinvariant_poly requires three distinct alphabets");
  SparsePoly f = SparsePoly::constant(1, {g1, g2, g3});
  Integer denom(1);
  for (int k = 0; k < 8; ++k) {
    if (t.tau[k] == 0) continue;
    const SparsePoly bracket = bracket_poly(kAllBrackets[k], g1, g2, g3);
    for (int rep = 0; rep < t.tau[k]; ++rep) f = f * bracket;
    denom *= factorial(static_cast<unsigned long>(t.tau[k]));
  }
  return (Rational(1) / Rational(denom)) * f;
}

}  // namespace racah
