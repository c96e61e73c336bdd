#include "racah/sparse_poly.hpp"

#include <algorithm>

#include "racah/error.hpp"

namespace racah {

namespace {

std::vector<GroupId> sorted_unique(std::vector<GroupId> gs) {
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  return gs;
}

// positions of `from` groups inside `to` (resolved superset)
std::vector<std::size_t> embedding(const std::vector<GroupId>& from,
                                   const std::vector<GroupId>& to) {
  std::vector<std::size_t> pos;
  pos.reserve(from.size());
  for (GroupId g : from) {
    const auto it = std::lower_bound(to.begin(), to.end(), g);
    pos.push_back(static_cast<std::size_t>(it - to.begin()));
  }
  return pos;
}

}  // namespace

SparsePoly::SparsePoly(std::vector<GroupId> groups)
    : groups_(sorted_unique(std::move(groups))) {}

SparsePoly SparsePoly::constant(const Rational& c,
                                std::vector<GroupId> groups) {
  SparsePoly p(std::move(groups));
  if (c != 0) p.terms_.emplace(Monomial(p.groups_.size()), c);
  return p;
}

SparsePoly SparsePoly::monomial(GroupId g, const MultiIndex6& exp,
                                const Rational& c) {
  SparsePoly p(std::vector<GroupId>{g});
  if (c != 0) p.terms_.emplace(Monomial{exp}, c);
  return p;
}

Rational SparsePoly::coeff(const Monomial& m) const {
  if (m.size() != groups_.size())
    throw GroupMismatch("monomial arity " + std::to_string(m.size()) +
                        " does not match group count " +
                        std::to_string(groups_.size()));
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != groups_.size())
    throw GroupMismatch("monomial arity " + std::to_string(m.size()) +
                        " does not match group count " +
                        std::to_string(groups_.size()));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::extended_to(std::vector<GroupId> groups) const {
  SparsePoly out(std::move(groups));
  for (GroupId g : groups_)
    if (!std::binary_search(out.groups_.begin(), out.groups_.end(), g))
      throw GroupMismatch("extended_to target lacks an existing group");
  const auto pos = embedding(groups_, out.groups_);
  for (const auto& [m, c] : terms_) {
    Monomial big(out.groups_.size());
    for (std::size_t k = 0; k < m.size(); ++k) big[pos[k]] = m[k];
    out.terms_.emplace(std::move(big), c);
  }
  return out;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  std::vector<GroupId> gs = a.groups_;
  gs.insert(gs.end(), b.groups_.begin(), b.groups_.end());
  SparsePoly out(std::move(gs));
  const SparsePoly ea = a.extended_to(out.groups_);
  const SparsePoly eb = b.extended_to(out.groups_);
  out.terms_ = ea.terms_;
  for (const auto& [m, c] : eb.terms_) out.add_term(m, c);
  return out;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  return a + (-b);
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SparsePoly operator*(const Rational& c, const SparsePoly& p) {
  SparsePoly out(p.groups_);
  if (c == 0) return out;
  out.terms_ = p.terms_;
  for (auto& [m, q] : out.terms_) q *= c;
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  std::vector<GroupId> gs = a.groups_;
  gs.insert(gs.end(), b.groups_.begin(), b.groups_.end());
  SparsePoly out(std::move(gs));
  const SparsePoly ea = a.extended_to(out.groups_);
  const SparsePoly eb = b.extended_to(out.groups_);
  const std::size_t n = out.groups_.size();
  for (const auto& [ma, ca] : ea.terms_)
    for (const auto& [mb, cb] : eb.terms_) {
      SparsePoly::Monomial m(n);
      for (std::size_t k = 0; k < n; ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, ca * cb);
    }
  return out;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  return (*this - o).is_zero();
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += '(' + rational_to_string(c) + ')';
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].is_zero()) continue;
      s += "*[" + std::to_string(groups_[k].value) + ']' + monomial_name(m[k]);
    }
  }
  return s;
}

Rational pairing(const SparsePoly& f, const SparsePoly& g) {
  if (f.groups() != g.groups())
    throw GroupMismatch("pairing requires identical group sets");
  const auto& small = f.term_count() <= g.term_count() ? f : g;
  const auto& large = f.term_count() <= g.term_count() ? g : f;
  Rational total(0);
  for (const auto& [m, c] : small.terms()) {
    const auto it = large.terms().find(m);
    if (it == large.terms().end()) continue;
    Integer fact(1);
    for (const MultiIndex6& part : m) fact *= multi_factorial(part);
    total += c * it->second * Rational(fact);
  }
  return total;
}

SparsePoly apply_eij(int i, int j, const SparsePoly& p, GroupId g) {
  const auto& gs = p.groups();
  const auto it = std::lower_bound(gs.begin(), gs.end(), g);
  if (it == gs.end() || *it != g)
    throw GroupMismatch("apply_eij: group not present in polynomial");
  const std::size_t slot = static_cast<std::size_t>(it - gs.begin());

  SparsePoly out(gs);
  for (const auto& [m, c] : p.terms()) {
    const MultiIndex6& exp = m[slot];
    for (Var x : kAllVars) {
      if (exp[x] == 0) continue;
      const VarSubstitution sub = substitute_index(x, i, j);
      if (!sub.nonzero) continue;
      SparsePoly::Monomial img = m;
      img[slot][x] -= 1;
      img[slot][sub.image] += 1;
      out.add_term(img, Rational(sub.sign * exp[x]) * c);
    }
  }
  return out;
}

SparsePoly apply_eij_diagonal(int i, int j, const SparsePoly& p) {
  SparsePoly out(p.groups());
  for (GroupId g : p.groups()) out = out + apply_eij(i, j, p, g);
  return out;
}

SparsePoly partial(const SparsePoly& p, GroupId g, Var x) {
  const auto& gs = p.groups();
  const auto it = std::lower_bound(gs.begin(), gs.end(), g);
  if (it == gs.end() || *it != g)
    throw GroupMismatch("partial: group not present in polynomial");
  const std::size_t slot = static_cast<std::size_t>(it - gs.begin());

  SparsePoly out(gs);
  for (const auto& [m, c] : p.terms()) {
    const int k = m[slot][x];
    if (k == 0) continue;
    SparsePoly::Monomial img = m;
    img[slot][x] -= 1;
    out.add_term(img, Rational(k) * c);
  }
  return out;
}

std::vector<std::array<int, 3>> weight_of(const SparsePoly& p) {
  if (p.is_zero())
    throw NotWeightVector("zero polynomial has no defined weight");
  std::vector<std::array<int, 3>> w;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::array<int, 3>> cur;
    cur.reserve(m.size());
    for (const MultiIndex6& part : m) cur.push_back(part.weight());
    if (first) {
      w = std::move(cur);
      first = false;
    } else if (cur != w) {
      throw NotWeightVector("monomials carry different weights");
    }
  }
  return w;
}

}  // namespace racah
