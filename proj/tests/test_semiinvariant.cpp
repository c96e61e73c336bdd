#include "racah/semiinvariant.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "racah/error.hpp"
#include "racah/gt_pattern.hpp"

using namespace racah;

namespace {

const GroupId ga{0}, gb{1}, gc{2};

TauLabel tau(std::array<int, 8> t) { return TauLabel{t}; }

Rational rat(int n, int d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::vector<TauLabel> labels_with_sum_up_to(int bound) {
  std::vector<TauLabel> out;
  TauLabel t;
  const auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == 8) {
      out.push_back(t);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      t.tau[slot] = v;
      self(self, slot + 1, left - v);
    }
    t.tau[slot] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

// Independent multiplicity count: dimension of the space of polynomials
// with the prescribed per-alphabet bidegrees and balanced diagonal weight
// that are killed by the per-alphabet second-order operators and by the
// diagonal raising operators. Exact rational row reduction.
SparsePoly box3(const SparsePoly& f, GroupId g) {
  return partial(partial(f, g, Var::a1), g, Var::a23) -
         partial(partial(f, g, Var::a2), g, Var::a13) +
         partial(partial(f, g, Var::a3), g, Var::a12);
}

std::vector<MultiIndex6> monomials_of_bidegree(int single, int dbl) {
  std::vector<MultiIndex6> out;
  for (int a = 0; a <= single; ++a)
    for (int b = 0; a + b <= single; ++b)
      for (int p = 0; p <= dbl; ++p)
        for (int q = 0; p + q <= dbl; ++q)
          out.push_back(
              MultiIndex6{{a, b, single - a - b, p, q, dbl - p - q}});
  return out;
}

long rank_of(std::vector<std::vector<Rational>>& rows) {
  long rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows.size() && lead < cols; ++lead) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][lead] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = rows[r][lead];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][lead] == 0) continue;
      const Rational factor = rows[i][lead] / inv;
      for (std::size_t j = lead; j < cols; ++j)
        rows[i][j] -= factor * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

long multiplicity_by_rank(const Weight3& w1, const Weight3& w2,
                          const Weight3& w3) {
  const int total = w1.m1 + w1.m2 + w2.m1 + w2.m2 + w3.m1 + w3.m2;
  if (total % 3 != 0) return 0;
  const int d = total / 3;

  const std::array<Weight3, 3> ws = {w1, w2, w3};
  std::array<std::vector<MultiIndex6>, 3> per;
  for (int k = 0; k < 3; ++k)
    per[k] = monomials_of_bidegree(ws[k].m1 - ws[k].m2, ws[k].m2);

  std::vector<SparsePoly> basis;
  for (const auto& ma : per[0])
    for (const auto& mb : per[1])
      for (const auto& mc : per[2]) {
        const auto wa = ma.weight(), wb = mb.weight(), wc = mc.weight();
        bool balanced = true;
        for (int i = 0; i < 3; ++i)
          balanced = balanced && wa[i] + wb[i] + wc[i] == d;
        if (!balanced) continue;
        basis.push_back(SparsePoly::monomial(ga, ma) *
                        SparsePoly::monomial(gb, mb) *
                        SparsePoly::monomial(gc, mc));
      }
  if (basis.empty()) return 0;

  std::map<SparsePoly::Monomial, std::size_t> row_index;
  std::vector<std::vector<Rational>> rows;
  const auto add_image = [&](const SparsePoly& image, std::size_t col) {
    for (const auto& [m, c] : image.terms()) {
      auto [it, fresh] = row_index.try_emplace(m, rows.size());
      if (fresh) rows.emplace_back(basis.size(), Rational(0));
      rows[it->second][col] = c;
    }
  };
  for (std::size_t col = 0; col < basis.size(); ++col) {
    add_image(apply_eij_diagonal(1, 2, basis[col]), col);
    add_image(apply_eij_diagonal(2, 3, basis[col]), col);
    add_image(box3(basis[col], ga), col);
    add_image(box3(basis[col], gb), col);
    add_image(box3(basis[col], gc), col);
  }
  return static_cast<long>(basis.size()) - rank_of(rows);
}

}  // namespace

TEST_CASE("label weights from the degree equations") {
  CHECK(tau_weights(tau({1, 0, 0, 0, 0, 0, 0, 0})) ==
        std::array<Weight3, 3>{{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}});
  CHECK(tau_weights(tau({0, 1, 0, 0, 0, 0, 0, 0})) ==
        std::array<Weight3, 3>{{{1, 1, 0}, {0, 0, 0}, {1, 0, 0}}});
  CHECK(tau_weights(tau({0, 0, 1, 0, 0, 0, 0, 0})) ==
        std::array<Weight3, 3>{{{1, 0, 0}, {0, 0, 0}, {1, 1, 0}}});
  CHECK(tau_weights(tau({0, 0, 0, 0, 0, 0, 0, 1})) ==
        std::array<Weight3, 3>{{{1, 1, 0}, {1, 1, 0}, {1, 1, 0}}});
  // degrees add across factors
  CHECK(tau_weights(tau({1, 0, 0, 0, 0, 0, 0, 1})) ==
        std::array<Weight3, 3>{{{2, 1, 0}, {2, 1, 0}, {2, 1, 0}}});
}

TEST_CASE("label enumeration solves the degree equations") {
  CHECK(enumerate_tau({1, 0, 0}, {1, 0, 0}, {1, 0, 0}) ==
        std::vector<TauLabel>{tau({1, 0, 0, 0, 0, 0, 0, 0})});
  CHECK(enumerate_tau({1, 1, 0}, {1, 1, 0}, {1, 1, 0}) ==
        std::vector<TauLabel>{tau({0, 0, 0, 0, 0, 0, 0, 1})});
  CHECK(enumerate_tau({0, 0, 0}, {0, 0, 0}, {0, 0, 0}) ==
        std::vector<TauLabel>{tau({0, 0, 0, 0, 0, 0, 0, 0})});
  CHECK(enumerate_tau({1, 0, 0}, {1, 0, 0}, {2, 1, 0}).empty());

  // the adjoint cube has multiplicity two; the full generator list adds
  // the dependent tau1 = tau8 = 1 product
  const Weight3 adj{2, 1, 0};
  CHECK(enumerate_tau(adj, adj, adj) ==
        std::vector<TauLabel>{tau({0, 0, 1, 1, 0, 1, 0, 0}),
                              tau({0, 1, 0, 0, 1, 0, 1, 0})});
  CHECK(enumerate_tau(adj, adj, adj, false) ==
        std::vector<TauLabel>{tau({0, 0, 1, 1, 0, 1, 0, 0}),
                              tau({0, 1, 0, 0, 1, 0, 1, 0}),
                              tau({1, 0, 0, 0, 0, 0, 0, 1})});

  for (const auto& t : enumerate_tau({2, 1, 0}, {2, 0, 0}, {1, 1, 0})) {
    CHECK(t.nonnegative());
    CHECK(tau_weights(t) ==
          std::array<Weight3, 3>{{{2, 1, 0}, {2, 0, 0}, {1, 1, 0}}});
  }
}

TEST_CASE("label counts match the rank of the coupling space") {
  const std::vector<Weight3> ws = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0},
                                   {2, 0, 0}, {2, 1, 0}, {2, 2, 0}};
  for (const auto& w1 : ws)
    for (const auto& w2 : ws)
      for (const auto& w3 : ws) {
        const long expect = multiplicity_by_rank(w1, w2, w3);
        const long got =
            static_cast<long>(enumerate_tau(w1, w2, w3).size());
        CAPTURE(w1.m1);
        CAPTURE(w1.m2);
        CAPTURE(w2.m1);
        CAPTURE(w2.m2);
        CAPTURE(w3.m1);
        CAPTURE(w3.m2);
        CHECK(got == expect);
      }
}

TEST_CASE("semiinvariants are scaled bracket products") {
  CHECK(semiinvariant_poly(tau({0, 0, 0, 0, 0, 0, 0, 0}), ga, gb, gc) ==
        SparsePoly::constant(Rational(1), {ga, gb, gc}));
  CHECK(semiinvariant_poly(tau({1, 0, 0, 0, 0, 0, 0, 0}), ga, gb, gc) ==
        bracket_poly(BracketKind::abc, ga, gb, gc));
  const SparsePoly aac = bracket_poly(BracketKind::aac, ga, gb, gc);
  CHECK(semiinvariant_poly(tau({0, 2, 0, 0, 0, 0, 0, 0}), ga, gb, gc) ==
        rat(1, 2) * (aac * aac));
  CHECK_THROWS_AS(
      semiinvariant_poly(tau({0, -1, 0, 0, 0, 0, 0, 0}), ga, gb, gc),
      IncompatibleLabels);
  CHECK_THROWS_AS(semiinvariant_poly(tau({1, 0, 0, 0, 0, 0, 0, 0}), ga, ga, gc),
                  GroupMismatch);
}

TEST_CASE("semiinvariance and degree bookkeeping for small labels") {
  for (const auto& t : labels_with_sum_up_to(3)) {
    const SparsePoly f = semiinvariant_poly(t, ga, gb, gc);
    CHECK_FALSE(f.is_zero());
    CHECK(apply_eij_diagonal(1, 2, f).is_zero());
    CHECK(apply_eij_diagonal(2, 3, f).is_zero());
    CHECK(apply_eij_diagonal(1, 3, f).is_zero());

    const auto ws = tau_weights(t);
    for (const auto& [m, c] : f.terms())
      for (int k = 0; k < 3; ++k) {
        CHECK(m[k].single_degree() == ws[k].m1 - ws[k].m2);
        CHECK(m[k].double_degree() == ws[k].m2);
      }

    const int d = (ws[0].m1 + ws[0].m2 + ws[1].m1 + ws[1].m2 + ws[2].m1 +
                   ws[2].m2) / 3;
    for (int i = 1; i <= 3; ++i)
      CHECK(apply_eij_diagonal(i, i, f) == Rational(d) * f);
  }
}
