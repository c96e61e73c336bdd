#include "racah/sparse_poly.hpp"

#include <array>
#include <random>
#include <vector>

#include "doctest.h"
#include "racah/error.hpp"

using namespace racah;

namespace {

MultiIndex6 idx(int a1, int a2, int a3, int a12, int a13, int a23) {
  return MultiIndex6{{a1, a2, a3, a12, a13, a23}};
}

Rational rat(int n, int d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

SparsePoly random_poly(std::mt19937& rng, GroupId g, int terms, int maxexp) {
  std::uniform_int_distribution<int> e(0, maxexp);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  SparsePoly p({g});
  for (int k = 0; k < terms; ++k) {
    MultiIndex6 m;
    for (Var x : kAllVars) m[x] = e(rng);
    p.add_term({m}, rat(num(rng), den(rng)));
  }
  return p;
}

const GroupId g0{0}, g1{1};

}  // namespace

TEST_CASE("pairing is diagonal with factorial weights") {
  const SparsePoly p = SparsePoly::monomial(g0, idx(2, 0, 0, 0, 0, 1));
  CHECK(pairing(p, p) == 2);
  const SparsePoly q = SparsePoly::monomial(g0, idx(0, 0, 0, 3, 0, 0));
  CHECK(pairing(q, q) == 6);
  CHECK(pairing(p, q) == 0);

  // factorials multiply across groups
  const SparsePoly t = SparsePoly::monomial(g0, idx(1, 0, 0, 0, 0, 0)) *
                       SparsePoly::monomial(g1, idx(0, 0, 0, 2, 0, 0));
  CHECK(pairing(t, t) == 2);

  CHECK_THROWS_AS(pairing(p, SparsePoly::monomial(g1, idx(1, 0, 0, 0, 0, 0))),
                  GroupMismatch);
}

TEST_CASE("pairing is diagonal on an exhaustive monomial box") {
  std::vector<MultiIndex6> box;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 3; ++d)
          for (int e = 0; e < 2; ++e)
            for (int f = 0; f < 2; ++f) box.push_back(idx(a, b, c, d, e, f));
  for (const auto& m : box)
    for (const auto& n : box) {
      const Rational got = pairing(SparsePoly::monomial(g0, m),
                                   SparsePoly::monomial(g0, n));
      if (m == n)
        CHECK(got == Rational(multi_factorial(m)));
      else
        CHECK(got == 0);
    }
}

TEST_CASE("pairing is bilinear and symmetric") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 10; ++round) {
    const SparsePoly f = random_poly(rng, g0, 6, 2);
    const SparsePoly g = random_poly(rng, g0, 6, 2);
    const SparsePoly h = random_poly(rng, g0, 6, 2);
    const Rational c = rat(7, 3);
    CHECK(pairing(f + g, h) == pairing(f, h) + pairing(g, h));
    CHECK(pairing(c * f, h) == c * pairing(f, h));
    CHECK(pairing(f, g) == pairing(g, f));
  }
}

TEST_CASE("raising and lowering are adjoint under the pairing") {
  std::mt19937 rng(20240812);
  for (int round = 0; round < 6; ++round) {
    const SparsePoly f = random_poly(rng, g0, 5, 2);
    const SparsePoly g = random_poly(rng, g0, 5, 2);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        CHECK(pairing(apply_eij(i, j, f, g0), g) ==
              pairing(f, apply_eij(j, i, g, g0)));
  }
}

TEST_CASE("the action satisfies the gl3 commutation relations") {
  std::mt19937 rng(20240813);
  const SparsePoly p = random_poly(rng, g0, 8, 2);
  const auto act = [&](int i, int j, const SparsePoly& q) {
    return apply_eij(i, j, q, g0);
  };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          const SparsePoly lhs = act(i, j, act(k, l, p)) - act(k, l, act(i, j, p));
          SparsePoly rhs({g0});
          if (j == k) rhs = rhs + act(i, l, p);
          if (l == i) rhs = rhs - act(k, j, p);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("products collect exponents and unify groups") {
  const SparsePoly a1 = SparsePoly::monomial(g0, idx(1, 0, 0, 0, 0, 0));
  const SparsePoly a2 = SparsePoly::monomial(g0, idx(0, 1, 0, 0, 0, 0));
  CHECK(a1 * a1 == SparsePoly::monomial(g0, idx(2, 0, 0, 0, 0, 0)));
  CHECK((a1 + a2) * (a1 - a2) ==
        SparsePoly::monomial(g0, idx(2, 0, 0, 0, 0, 0)) -
            SparsePoly::monomial(g0, idx(0, 2, 0, 0, 0, 0)));

  const SparsePoly b = SparsePoly::monomial(g1, idx(0, 0, 1, 0, 0, 0));
  const SparsePoly prod = a1 * b;
  CHECK(prod.groups() == std::vector<GroupId>{g0, g1});
  CHECK(prod.term_count() == 1);

  // exact rational coefficients: no drift under scale round trips
  std::mt19937 rng(20240814);
  const SparsePoly f = random_poly(rng, g0, 10, 3);
  CHECK(rat(1, 3) * (Rational(3) * f) == f);
}

TEST_CASE("extension embeds a polynomial over more groups") {
  const SparsePoly a1 = SparsePoly::monomial(g0, idx(1, 0, 0, 0, 0, 0));
  const SparsePoly wide = a1.extended_to({g0, g1});
  CHECK(wide.groups() == std::vector<GroupId>{g0, g1});
  CHECK(pairing(wide, wide) == 1);
  CHECK_THROWS_AS(a1.extended_to({g1}), GroupMismatch);
}

TEST_CASE("partial derivatives") {
  const SparsePoly p = SparsePoly::monomial(g0, idx(2, 0, 0, 0, 0, 1));
  CHECK(partial(p, g0, Var::a1) ==
        Rational(2) * SparsePoly::monomial(g0, idx(1, 0, 0, 0, 0, 1)));
  CHECK(partial(p, g0, Var::a12).is_zero());

  std::mt19937 rng(20240815);
  const SparsePoly f = random_poly(rng, g0, 5, 2);
  const SparsePoly g = random_poly(rng, g0, 5, 2);
  for (Var x : kAllVars)
    CHECK(partial(f * g, g0, x) ==
          partial(f, g0, x) * g + f * partial(g, g0, x));
}

TEST_CASE("weight vectors and their weights") {
  CHECK(weight_of(SparsePoly::monomial(g0, idx(2, 0, 0, 1, 0, 0))) ==
        std::vector<std::array<int, 3>>{{3, 1, 0}});
  const SparsePoly t = SparsePoly::monomial(g0, idx(1, 0, 0, 0, 0, 0)) *
                       SparsePoly::monomial(g1, idx(0, 0, 0, 0, 0, 1));
  CHECK(weight_of(t) ==
        std::vector<std::array<int, 3>>{{1, 0, 0}, {0, 1, 1}});

  const SparsePoly mixed = SparsePoly::monomial(g0, idx(1, 0, 0, 0, 0, 0)) +
                           SparsePoly::monomial(g0, idx(0, 1, 0, 0, 0, 0));
  CHECK_THROWS_AS(weight_of(mixed), NotWeightVector);
  CHECK_THROWS_AS(weight_of(SparsePoly({g0})), NotWeightVector);
}

TEST_CASE("diagonal action sums the per-group actions") {
  const SparsePoly t = SparsePoly::monomial(g0, idx(1, 0, 0, 0, 0, 0)) *
                       SparsePoly::monomial(g1, idx(0, 0, 0, 0, 0, 1));
  // E11 eigenvalue: 1 from the first group, 0 from the second
  CHECK(apply_eij_diagonal(1, 1, t) == t);
  CHECK(apply_eij_diagonal(2, 2, t) == t);
  CHECK(apply_eij_diagonal(3, 3, t) == t);
}
