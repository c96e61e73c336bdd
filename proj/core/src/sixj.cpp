#include "racah/sixj.hpp"

#include <map>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "racah/error.hpp"
#include "racah/gamma_series.hpp"

namespace racah {

namespace {

using Profile3 = std::array<MultiIndex6, 3>;
using CoeffMap = std::map<Profile3, Rational>;
using ProfileSet = std::set<Profile3>;
using Key4 = std::array<MultiIndex6, 4>;

constexpr std::array<GroupLink, 6> kLinks = {{
    {0, 0, 3, 0},  // A1: f1 da   <-> f4 a, carries V1
    {0, 1, 2, 0},  // A2: f1 db   <-> f3 a, carries V2
    {1, 1, 2, 1},  // A3: f2 db   <-> f3 b, carries V3
    {1, 0, 0, 2},  // A4: f2 da   <-> f1 c, carries U
    {3, 2, 1, 2},  // A5: f4 dc   <-> f2 c, carries W
    {2, 2, 3, 1},  // A6: f3 dc   <-> f4 b, carries H
}};

std::array<std::array<Weight3, 3>, 4> problem_triples(const SixJProblem& p) {
  return {{{p.v1, p.v2, p.u},
           {p.u, p.v3, p.w},
           {p.v2, p.v3, p.h},
           {p.v1, p.h, p.w}}};
}

void validate(const SixJProblem& p) {
  for (const Weight3& w : {p.v1, p.v2, p.u, p.v3, p.w, p.h}) require_valid(w);
  const auto triples = problem_triples(p);
  for (int i = 0; i < 4; ++i) {
    if (!p.labels[i].nonnegative())
      throw IncompatibleLabels("label " + std::to_string(i + 1) +
                               " has negative entries");
    if (tau_weights(p.labels[i]) != triples[i])
      throw IncompatibleLabels(
          "label " + std::to_string(i + 1) +
          " does not solve the degree equations of its weight triple");
  }
}

Rational rational_factorial(const MultiIndex6& m) {
  return Rational(multi_factorial(m));
}

// ---- per-label caches ---------------------------------------------------

// The joins contract raw polynomial data against raw polynomial data, so
// each factor must first be replaced by its representative inside the
// solution space: components along the per-alphabet quadric ideal pair to
// zero against every basis product but not against each other, and leaving
// them in would add spurious cross terms to the final sum.
CoeffMap projected_coeffs(SparsePoly f) {
  for (GroupId g : {GroupId{0}, GroupId{1}, GroupId{2}})
    f = agkz_project(f, g);
  CoeffMap m;
  for (const auto& [mono, c] : f.terms())
    m.emplace(Profile3{mono[0], mono[1], mono[2]}, c);
  return m;
}

// collapsed support sums sign(x)/x! per degree profile, then projected
const CoeffMap& cached_lattice_coeffs(const TauLabel& t) {
  static std::map<TauLabel, CoeffMap> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(t);
  if (it == cache.end()) {
    SparsePoly f(std::vector<GroupId>{GroupId{0}, GroupId{1}, GroupId{2}});
    for (const ZPointData& d : z_points(t))
      f.add_term({d.profile[0], d.profile[1], d.profile[2]},
                 Rational(d.sign) * d.inv_factorial);
    it = cache.emplace(t, projected_coeffs(std::move(f))).first;
  }
  return it->second;
}

// monomial coefficients of the expanded semiinvariant, then projected
const CoeffMap& cached_contract_coeffs(const TauLabel& t) {
  static std::map<TauLabel, CoeffMap> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(t);
  if (it == cache.end()) {
    it = cache.emplace(t, projected_coeffs(semiinvariant_poly(
                              t, GroupId{0}, GroupId{1}, GroupId{2})))
             .first;
  }
  return it->second;
}

// support profiles regardless of coefficient cancellation
const ProfileSet& cached_profiles(const TauLabel& t) {
  static std::map<TauLabel, ProfileSet> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(t);
  if (it == cache.end()) {
    ProfileSet s;
    for (const ZPointData& d : z_points(t)) s.insert(d.profile);
    it = cache.emplace(t, std::move(s)).first;
  }
  return it->second;
}

// ---- joins ---------------------------------------------------------------
// Half keys are ordered (A1, A2, A3, A5); the joined-away alphabet's degree
// factorial is folded into the half, the remaining four at the final match.

std::map<Key4, Rational> join_f1_f2(const CoeffMap& c1, const CoeffMap& c2) {
  std::map<MultiIndex6, std::vector<std::pair<Profile3, Rational>>> byA4;
  for (const auto& [pr, v] : c2) byA4[pr[0]].emplace_back(pr, v);
  std::map<Key4, Rational> out;
  for (const auto& [pr1, v1] : c1) {
    const auto it = byA4.find(pr1[2]);
    if (it == byA4.end()) continue;
    const Rational base = v1 * rational_factorial(pr1[2]);
    for (const auto& [pr2, v2] : it->second)
      out[{pr1[0], pr1[1], pr2[1], pr2[2]}] += base * v2;
  }
  return out;
}

std::map<Key4, Rational> join_f3_f4(const CoeffMap& c3, const CoeffMap& c4) {
  std::map<MultiIndex6, std::vector<std::pair<Profile3, Rational>>> byA6;
  for (const auto& [pr, v] : c4) byA6[pr[1]].emplace_back(pr, v);
  std::map<Key4, Rational> out;
  for (const auto& [pr3, v3] : c3) {
    const auto it = byA6.find(pr3[2]);
    if (it == byA6.end()) continue;
    const Rational base = v3 * rational_factorial(pr3[2]);
    for (const auto& [pr4, v4] : it->second)
      out[{pr4[0], pr3[0], pr3[1], pr4[2]}] += base * v4;
  }
  return out;
}

Rational join_halves(const std::map<Key4, Rational>& h1,
                     const std::map<Key4, Rational>& h2) {
  const auto& small = h1.size() <= h2.size() ? h1 : h2;
  const auto& large = h1.size() <= h2.size() ? h2 : h1;
  Rational total(0);
  for (const auto& [key, v] : small) {
    const auto it = large.find(key);
    if (it == large.end()) continue;
    Rational term = v * it->second;
    for (const MultiIndex6& part : key) term *= rational_factorial(part);
    total += term;
  }
  return total;
}

Rational sixj_joined(const std::array<const CoeffMap*, 4>& c) {
  return join_halves(join_f1_f2(*c[0], *c[1]), join_f3_f4(*c[2], *c[3]));
}

// presence-only versions for the selection rule

std::set<Key4> keys_f1_f2(const ProfileSet& s1, const ProfileSet& s2) {
  std::map<MultiIndex6, std::vector<Profile3>> byA4;
  for (const Profile3& pr : s2) byA4[pr[0]].push_back(pr);
  std::set<Key4> out;
  for (const Profile3& pr1 : s1) {
    const auto it = byA4.find(pr1[2]);
    if (it == byA4.end()) continue;
    for (const Profile3& pr2 : it->second)
      out.insert({pr1[0], pr1[1], pr2[1], pr2[2]});
  }
  return out;
}

std::set<Key4> keys_f3_f4(const ProfileSet& s3, const ProfileSet& s4) {
  std::map<MultiIndex6, std::vector<Profile3>> byA6;
  for (const Profile3& pr : s4) byA6[pr[1]].push_back(pr);
  std::set<Key4> out;
  for (const Profile3& pr3 : s3) {
    const auto it = byA6.find(pr3[2]);
    if (it == byA6.end()) continue;
    for (const Profile3& pr4 : it->second)
      out.insert({pr4[0], pr3[0], pr3[1], pr4[2]});
  }
  return out;
}

// ---- definitional path ----------------------------------------------------

struct WeightBasis {
  std::vector<GTPattern> patterns;
  std::vector<Rational> norms;
  // exponent -> (pattern index, coefficient), scaling already applied
  std::map<MultiIndex6, std::vector<std::pair<int, Rational>>> by_exponent;
};

WeightBasis build_weight_basis(
    const Weight3& w, const std::function<Rational(const GTPattern&)>& scale) {
  WeightBasis wb;
  wb.patterns = enumerate_patterns(w);
  wb.norms.reserve(wb.patterns.size());
  for (std::size_t i = 0; i < wb.patterns.size(); ++i) {
    const GTPattern& p = wb.patterns[i];
    Rational s(1);
    if (scale) {
      s = scale(p);
      if (s == 0)
        throw std::invalid_argument("basis rescaling must be nonzero");
    }
    wb.norms.push_back(s * s * norm_sq(p));
    const SparsePoly f = agkz_basis(p, GroupId{0});
    for (const auto& [m, c] : f.terms())
      wb.by_exponent[m[0]].emplace_back(static_cast<int>(i), s * c);
  }
  return wb;
}

using Tensor3 = std::map<std::array<int, 3>, Rational>;

// T[(p,q,r)] = <f, F_p F_q F_r> over the label's three alphabets
Tensor3 build_tensor(const TauLabel& t, const WeightBasis& a,
                     const WeightBasis& b, const WeightBasis& c) {
  Tensor3 out;
  const SparsePoly f =
      semiinvariant_poly(t, GroupId{0}, GroupId{1}, GroupId{2});
  for (const auto& [m, coeff] : f.terms()) {
    const auto ia = a.by_exponent.find(m[0]);
    if (ia == a.by_exponent.end()) continue;
    const auto ib = b.by_exponent.find(m[1]);
    if (ib == b.by_exponent.end()) continue;
    const auto ic = c.by_exponent.find(m[2]);
    if (ic == c.by_exponent.end()) continue;
    const Rational base = coeff * rational_factorial(m[0]) *
                          rational_factorial(m[1]) * rational_factorial(m[2]);
    for (const auto& [pa, ca] : ia->second)
      for (const auto& [pb, cb] : ib->second)
        for (const auto& [pc, cc] : ic->second)
          out[{pa, pb, pc}] += base * ca * cb * cc;
  }
  return out;
}

const Tensor3& cached_tensor(const TauLabel& t, const WeightBasis& a,
                             const WeightBasis& b, const WeightBasis& c) {
  static std::map<TauLabel, Tensor3> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_tensor(t, a, b, c)).first;
  return it->second;
}

}  // namespace

MatchingSystem build_matching_system(const SixJProblem& p) {
  validate(p);
  MatchingSystem ms;
  for (int i = 0; i < 4; ++i) ms.supports[i] = z_support(p.labels[i]);
  ms.links = kLinks;
  return ms;
}

bool selection_rule(const SixJProblem& p) {
  validate(p);
  const std::set<Key4> h1 =
      keys_f1_f2(cached_profiles(p.labels[0]), cached_profiles(p.labels[1]));
  if (h1.empty()) return false;
  const std::set<Key4> h2 =
      keys_f3_f4(cached_profiles(p.labels[2]), cached_profiles(p.labels[3]));
  for (const Key4& k : h2)
    if (h1.count(k)) return true;
  return false;
}

Rational sixj_lattice(const SixJProblem& p) {
  validate(p);
  return sixj_joined({&cached_lattice_coeffs(p.labels[0]),
                      &cached_lattice_coeffs(p.labels[1]),
                      &cached_lattice_coeffs(p.labels[2]),
                      &cached_lattice_coeffs(p.labels[3])});
}

Rational sixj_contract(const SixJProblem& p) {
  validate(p);
  return sixj_joined({&cached_contract_coeffs(p.labels[0]),
                      &cached_contract_coeffs(p.labels[1]),
                      &cached_contract_coeffs(p.labels[2]),
                      &cached_contract_coeffs(p.labels[3])});
}

Rational sixj_by_definition(const SixJProblem& p, const SixJOptions& opts) {
  validate(p);

  long long count = 1;
  for (const Weight3& w : {p.v1, p.v2, p.u, p.v3, p.w, p.h}) {
    count *= weyl_dimension(w);
    if (count > opts.pattern_product_limit)
      throw ScaleExceeded("basis six-tuple count exceeds the configured "
                          "limit of " +
                          std::to_string(opts.pattern_product_limit));
  }

  std::map<Weight3, WeightBasis> bases;
  for (const Weight3& w : {p.v1, p.v2, p.u, p.v3, p.w, p.h})
    if (!bases.count(w)) bases.emplace(w, build_weight_basis(w, opts.basis_scale));

  const auto triples = problem_triples(p);
  std::array<const Tensor3*, 4> t{};
  std::array<Tensor3, 4> scratch;
  for (int i = 0; i < 4; ++i) {
    const WeightBasis& a = bases.at(triples[i][0]);
    const WeightBasis& b = bases.at(triples[i][1]);
    const WeightBasis& c = bases.at(triples[i][2]);
    if (opts.basis_scale) {
      scratch[i] = build_tensor(p.labels[i], a, b, c);
      t[i] = &scratch[i];
    } else {
      t[i] = &cached_tensor(p.labels[i], a, b, c);
    }
  }

  const std::vector<Rational>& nv1 = bases.at(p.v1).norms;
  const std::vector<Rational>& nv2 = bases.at(p.v2).norms;
  const std::vector<Rational>& nv3 = bases.at(p.v3).norms;
  const std::vector<Rational>& nu = bases.at(p.u).norms;
  const std::vector<Rational>& nw = bases.at(p.w).norms;
  const std::vector<Rational>& nh = bases.at(p.h).norms;

  // contract the u index: keys become (v1, v2, v3, w)
  std::map<int, std::vector<std::pair<std::array<int, 3>, Rational>>> t2_by_u;
  for (const auto& [k, v] : *t[1]) t2_by_u[k[0]].emplace_back(k, v);
  std::map<std::array<int, 4>, Rational> u1;
  for (const auto& [k1, v1] : *t[0]) {
    const auto it = t2_by_u.find(k1[2]);
    if (it == t2_by_u.end()) continue;
    const Rational base = v1 / nu[k1[2]];
    for (const auto& [k2, v2] : it->second)
      u1[{k1[0], k1[1], k2[1], k2[2]}] += base * v2;
  }

  // contract the h index onto the same key layout
  std::map<int, std::vector<std::pair<std::array<int, 3>, Rational>>> t3_by_h;
  for (const auto& [k, v] : *t[2]) t3_by_h[k[2]].emplace_back(k, v);
  std::map<std::array<int, 4>, Rational> u2;
  for (const auto& [k4, v4] : *t[3]) {
    const auto it = t3_by_h.find(k4[1]);
    if (it == t3_by_h.end()) continue;
    const Rational base = v4 / nh[k4[1]];
    for (const auto& [k3, v3] : it->second)
      u2[{k4[0], k3[0], k3[1], k4[2]}] += base * v3;
  }

  Rational total(0);
  for (const auto& [key, v] : u1) {
    const auto it = u2.find(key);
    if (it == u2.end()) continue;
    total += v * it->second /
             (nv1[key[0]] * nv2[key[1]] * nv3[key[2]] * nw[key[3]]);
  }
  return total;
}

}  // namespace racah
