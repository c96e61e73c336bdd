#include "racah/gamma_series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "racah/error.hpp"

namespace racah {

namespace {

constexpr GroupId kCacheGroup{0};

SparsePoly retag_single_group(const SparsePoly& p, GroupId g) {
  SparsePoly out(std::vector<GroupId>{g});
  for (const auto& [m, c] : p.terms()) out.add_term(m, c);
  return out;
}

void require_single_group(const SparsePoly& p, const char* op) {
  if (p.groups().size() != 1)
    throw GroupMismatch(std::string(op) +
                        " expects a polynomial over exactly one alphabet");
}

SparsePoly second_order(const SparsePoly& p, Var x, Var y) {
  const GroupId g = p.groups().front();
  return partial(partial(p, g, x), g, y);
}

// d1 d23 - d2 d13 (+ d3 d12 when antisymmetrized)
SparsePoly box(const SparsePoly& p, bool antisymmetrized) {
  SparsePoly r = second_order(p, Var::a1, Var::a23) -
                 second_order(p, Var::a2, Var::a13);
  if (antisymmetrized) r = r + second_order(p, Var::a3, Var::a12);
  return r;
}

struct BasisEntry {
  SparsePoly poly;  // over kCacheGroup
  Rational norm;
};

}  // namespace

MultiIndex6 lattice_direction() {
  MultiIndex6 v;
  v[Var::a1] = 1;
  v[Var::a2] = -1;
  v[Var::a13] = -1;
  v[Var::a23] = 1;
  return v;
}

SparsePoly gamma_series(const MultiIndex6& mu, GroupId g) {
  SparsePoly out(std::vector<GroupId>{g});
  if (mu[Var::a3] < 0 || mu[Var::a12] < 0) return out;
  // components along the direction: +t on A1, A23; -t on A2, A13
  const int lo = std::max(-mu[Var::a1], -mu[Var::a23]);
  const int hi = std::min(mu[Var::a2], mu[Var::a13]);
  const MultiIndex6 v = lattice_direction();
  for (int t = lo; t <= hi; ++t) {
    const MultiIndex6 x = mu + t * v;
    out.add_term({x}, Rational(1) / Rational(multi_factorial(x)));
  }
  return out;
}

bool check_gkz(const SparsePoly& p, const MultiIndex6& mu) {
  if (p.is_zero()) return true;
  require_single_group(p, "check_gkz");
  for (const auto& [m, c] : p.terms()) {
    const MultiIndex6& x = m.front();
    const bool homogeneous =
        x[Var::a1] + x[Var::a2] == mu[Var::a1] + mu[Var::a2] &&
        x[Var::a1] + x[Var::a13] == mu[Var::a1] + mu[Var::a13] &&
        x[Var::a1] - x[Var::a23] == mu[Var::a1] - mu[Var::a23] &&
        x[Var::a3] == mu[Var::a3] && x[Var::a12] == mu[Var::a12];
    if (!homogeneous) return false;
  }
  return box(p, false).is_zero();
}

bool check_agkz(const SparsePoly& p) {
  if (p.is_zero()) return true;
  require_single_group(p, "check_agkz");
  return box(p, true).is_zero();
}

LatticeClass gt_to_class(const GTPattern& p) {
  require_valid(p);
  MultiIndex6 mu;
  mu[Var::a1] = p.m11 - p.m22;
  mu[Var::a2] = p.m12 - p.m23 - p.m11 + p.m22;
  mu[Var::a3] = p.m13 - p.m12;
  mu[Var::a12] = p.m22;
  mu[Var::a13] = 0;
  mu[Var::a23] = p.m23 - p.m22;
  return {mu, lattice_direction()};
}

namespace {

SparsePoly build_basis(const GTPattern& p) {
  const MultiIndex6 mu = gt_to_class(p).representative;
  const MultiIndex6 shift =
      MultiIndex6::unit(Var::a3) + MultiIndex6::unit(Var::a12);
  const int n = mu[Var::a1] + mu[Var::a2] + mu[Var::a13] + mu[Var::a23];
  const int smax = std::min(mu[Var::a3], mu[Var::a12]);

  // q_0 = 1 / sum_{s<=smax} t_s with t_0 = 1, t_s = 1/(s(s+1+n))
  Rational tsum(1);
  for (int s = 1; s <= smax; ++s)
    tsum += Rational(1) / Rational(s * (s + 1 + n));

  const SparsePoly zeta =
      SparsePoly::monomial(kCacheGroup,
                           MultiIndex6::unit(Var::a1) +
                               MultiIndex6::unit(Var::a23)) -
      SparsePoly::monomial(kCacheGroup, MultiIndex6::unit(Var::a2) +
                                            MultiIndex6::unit(Var::a13));

  SparsePoly f(std::vector<GroupId>{kCacheGroup});
  SparsePoly zeta_pow = SparsePoly::constant(1, {kCacheGroup});
  Rational q = 1 / tsum;
  MultiIndex6 nu = mu;
  for (int s = 0; s <= smax; ++s) {
    const SparsePoly component = gamma_series(nu, kCacheGroup);
    if (component.is_zero())
      throw std::logic_error("vanishing series component inside the bound");
    f = f + q * (zeta_pow * component);
    zeta_pow = zeta_pow * zeta;
    nu = nu - shift;
    // annihilation forces q_{s+1} = -q_s / ((s+1)(s+2+n))
    q = -q / Rational((s + 1) * (s + 2 + n));
  }

  if (!check_agkz(f))
    throw std::logic_error("constructed basis vector fails its equation");
  return f;
}

const BasisEntry& cached_basis(const GTPattern& p) {
  static std::map<GTPattern, BasisEntry> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) {
    SparsePoly f = build_basis(p);
    Rational n = pairing(f, f);
    it = cache.emplace(p, BasisEntry{std::move(f), std::move(n)}).first;
  }
  return it->second;
}

}  // namespace

SparsePoly agkz_basis(const GTPattern& p, GroupId g) {
  require_valid(p);
  const BasisEntry& entry = cached_basis(p);
  return g == kCacheGroup ? entry.poly : retag_single_group(entry.poly, g);
}

Rational norm_sq(const GTPattern& p) {
  require_valid(p);
  return cached_basis(p).norm;
}

namespace {

// the antisymmetrized operator acting on alphabet g of a multi-group poly
SparsePoly box_in(const SparsePoly& p, GroupId g) {
  return partial(partial(p, g, Var::a1), g, Var::a23) -
         partial(partial(p, g, Var::a2), g, Var::a13) +
         partial(partial(p, g, Var::a3), g, Var::a12);
}

SparsePoly plucker_quadric(GroupId g) {
  return SparsePoly::monomial(g, MultiIndex6::unit(Var::a1) +
                                     MultiIndex6::unit(Var::a23)) -
         SparsePoly::monomial(g, MultiIndex6::unit(Var::a2) +
                                     MultiIndex6::unit(Var::a13)) +
         SparsePoly::monomial(g, MultiIndex6::unit(Var::a3) +
                                     MultiIndex6::unit(Var::a12));
}

}  // namespace

SparsePoly agkz_project(const SparsePoly& p, GroupId g) {
  int gi = -1;
  for (std::size_t i = 0; i < p.groups().size(); ++i)
    if (p.groups()[i] == g) gi = static_cast<int>(i);
  if (gi < 0)
    throw GroupMismatch("agkz_project: alphabet not present in the operand");
  if (p.is_zero()) return p;

  // peel each bihomogeneous fiber of alphabet g independently; the operator
  // and the quadric commute with everything outside alphabet g
  std::map<std::pair<int, int>, SparsePoly> fibers;
  for (const auto& [m, c] : p.terms()) {
    const std::pair<int, int> key{m[gi].single_degree(),
                                  m[gi].double_degree()};
    auto it = fibers.find(key);
    if (it == fibers.end())
      it = fibers.emplace(key, SparsePoly(p.groups())).first;
    it->second.add_term(m, c);
  }

  const SparsePoly quadric = plucker_quadric(g);
  SparsePoly out(p.groups());
  for (auto& [bideg, fiber] : fibers) {
    // fiber = sum_s quadric^s u_s with annihilated u_s; top components peel
    // off via box^s (quadric^s u) = s! * prod_{r=1..s} (deg u + 2 + r) * u,
    // from the commutator [box, quadric] = E + 3 on one alphabet
    const int smax = std::min(bideg.first, bideg.second);
    for (int s = smax; s >= 1; --s) {
      SparsePoly top = fiber;
      for (int r = 0; r < s; ++r) top = box_in(top, g);
      if (top.is_zero()) continue;
      const int h = bideg.first + bideg.second - 2 * s + 3;
      Rational d(1);
      for (int r = 1; r <= s; ++r) d *= Rational(r * (h + r - 1));
      SparsePoly piece = Rational(1) / d * top;
      for (int r = 0; r < s; ++r) piece = piece * quadric;
      fiber = fiber - piece;
    }
    out = out + fiber;
  }
  return out;
}

}  // namespace racah
