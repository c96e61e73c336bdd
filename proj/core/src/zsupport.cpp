#include "racah/zsupport.hpp"

#include <algorithm>
#include <stdexcept>

#include "racah/error.hpp"

namespace racah {

namespace {

constexpr std::array<Var, 3> kSingles = {Var::a1, Var::a2, Var::a3};
constexpr std::array<Var, 3> kComplement = {Var::a23, Var::a13, Var::a12};

constexpr std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2},
                                                       {1, 2, 0},
                                                       {2, 0, 1},
                                                       {1, 0, 2},
                                                       {0, 2, 1},
                                                       {2, 1, 0}}};

struct BlockSpec {
  BracketKind kind;
  int tau_slot;
  int start;  // 0-based position of the block's first variable
  int size;
};

constexpr std::array<BlockSpec, 8> kBlocks = {{
    {BracketKind::aac, 1, 0, 3},
    {BracketKind::acc, 2, 3, 3},
    {BracketKind::bbc, 5, 6, 3},
    {BracketKind::bcc, 6, 9, 3},
    {BracketKind::aab, 3, 12, 3},
    {BracketKind::abb, 4, 15, 3},
    {BracketKind::abc, 0, 18, 6},
    {BracketKind::aabbcc, 7, 24, 6},
}};

// letter contents of position k (0-based within the block)
std::array<MultiIndex6, 3> block_letter_exp(BracketKind kind, int k) {
  std::array<MultiIndex6, 3> exp{};
  auto two_letter = [&](int single_letter, int double_letter) {
    exp[single_letter][kSingles[k]] += 1;
    exp[double_letter][kComplement[k]] += 1;
  };
  switch (kind) {
    case BracketKind::aac: two_letter(2, 0); break;
    case BracketKind::acc: two_letter(0, 2); break;
    case BracketKind::bbc: two_letter(2, 1); break;
    case BracketKind::bcc: two_letter(1, 2); break;
    case BracketKind::aab: two_letter(1, 0); break;
    case BracketKind::abb: two_letter(0, 1); break;
    case BracketKind::abc:
      for (int l = 0; l < 3; ++l) exp[l][kSingles[kPerms[k][l]]] += 1;
      break;
    case BracketKind::aabbcc:
      for (int l = 0; l < 3; ++l) exp[l][kComplement[kPerms[k][l]]] += 1;
      break;
  }
  return exp;
}

std::array<ZVarInfo, kNumZ> build_table() {
  const GroupId a{0}, b{1}, c{2};
  const std::vector<GroupId> abc_groups = {a, b, c};
  std::array<ZVarInfo, kNumZ> table{};
  for (const BlockSpec& blk : kBlocks) {
    const SparsePoly bracket =
        bracket_poly(blk.kind, a, b, c).extended_to(abc_groups);
    for (int k = 0; k < blk.size; ++k) {
      ZVarInfo& info = table[blk.start + k];
      info.block = blk.kind;
      info.tau_slot = blk.tau_slot;
      info.letter_exp = block_letter_exp(blk.kind, k);
      const Rational coeff = bracket.coeff(
          {info.letter_exp[0], info.letter_exp[1], info.letter_exp[2]});
      if (coeff != 1 && coeff != -1)
        throw std::logic_error("factor table out of step with its bracket");
      info.sign = coeff == 1 ? 1 : -1;
    }
  }
  return table;
}

void append_compositions(int total, int slots, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    prefix.push_back(v);
    append_compositions(total - v, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::array<ZVarInfo, kNumZ>& z_table() {
  static const std::array<ZVarInfo, kNumZ> table = build_table();
  return table;
}

int z_sign(int position) {
  if (position < 1 || position > kNumZ)
    throw std::out_of_range("factor position must be in 1..30");
  return z_table()[position - 1].sign;
}

std::vector<std::vector<int>> ShiftedLattice::enumerate_nonnegative() const {
  // connected components of the coordinate graph drawn by the generators
  std::vector<int> comp(dim, -1);
  std::vector<std::vector<int>> members;
  for (const auto& gen : generators) {
    int p = -1, q = -1;
    bool clean = true;
    for (int i = 0; i < dim; ++i) {
      if (gen[i] == 0) continue;
      if (gen[i] == 1 && p < 0)
        p = i;
      else if (gen[i] == -1 && q < 0)
        q = i;
      else
        clean = false;
    }
    if (!clean || p < 0 || q < 0)
      throw std::logic_error("enumeration requires unit-difference generators");
    const int cp = comp[p];
    const int cq = comp[q];
    if (cp < 0 && cq < 0) {
      comp[p] = comp[q] = static_cast<int>(members.size());
      members.push_back({p, q});
    } else if (cp < 0) {
      comp[p] = cq;
      members[cq].push_back(p);
    } else if (cq < 0) {
      comp[q] = cp;
      members[cp].push_back(q);
    } else if (cp != cq) {
      for (int m : members[cq]) {
        comp[m] = cp;
        members[cp].push_back(m);
      }
      members[cq].clear();
    }
  }

  std::vector<int> base(dim, 0);
  // isolated coordinates are frozen at the shift value
  for (int i = 0; i < dim; ++i) {
    if (comp[i] >= 0) continue;
    if (shift[i] < 0) return {};
    base[i] = shift[i];
  }

  std::vector<std::vector<int>> result = {base};
  for (auto& block : members) {
    if (block.empty()) continue;
    std::sort(block.begin(), block.end());
    int total = 0;
    for (int i : block) total += shift[i];
    if (total < 0) return {};
    std::vector<std::vector<int>> comps;
    std::vector<int> prefix;
    append_compositions(total, static_cast<int>(block.size()), prefix, comps);
    std::vector<std::vector<int>> next;
    next.reserve(result.size() * comps.size());
    for (const auto& point : result)
      for (const auto& comp_vals : comps) {
        std::vector<int> np = point;
        for (std::size_t k = 0; k < block.size(); ++k)
          np[block[k]] = comp_vals[k];
        next.push_back(std::move(np));
      }
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

ShiftedLattice z_support(const TauLabel& t) {
  if (!t.nonnegative())
    throw IncompatibleLabels("label has negative entries");
  ShiftedLattice lat;
  lat.dim = kNumZ;
  lat.shift.assign(kNumZ, 0);
  for (const BlockSpec& blk : kBlocks) {
    lat.shift[blk.start] = t.tau[blk.tau_slot];
    for (int k = 1; k < blk.size; ++k) {
      std::vector<int> gen(kNumZ, 0);
      gen[blk.start + k] = 1;
      gen[blk.start] = -1;
      lat.generators.push_back(std::move(gen));
    }
  }
  return lat;
}

std::vector<ZPointData> z_points(const TauLabel& t) {
  const auto& table = z_table();
  std::vector<ZPointData> out;
  for (const auto& point : z_support(t).enumerate_nonnegative()) {
    ZPointData d;
    Integer fact(1);
    for (int p = 0; p < kNumZ; ++p) {
      const int e = point[p];
      d.x[p] = e;
      if (e == 0) continue;
      if (table[p].sign < 0 && e % 2 == 1) d.sign = -d.sign;
      for (int l = 0; l < 3; ++l)
        d.profile[l] = d.profile[l] + e * table[p].letter_exp[l];
      fact *= factorial(e);
    }
    d.inv_factorial = Rational(1) / Rational(fact);
    out.push_back(std::move(d));
  }
  return out;
}

ZPoly semiinvariant_z_poly(const TauLabel& t) {
  if (!t.nonnegative())
    throw IncompatibleLabels("label has negative entries");
  const auto& table = z_table();
  ZPoly f;
  f.emplace(ZExponent{}, Rational(1));
  for (const BlockSpec& blk : kBlocks) {
    const int power = t.tau[blk.tau_slot];
    for (int rep = 0; rep < power; ++rep) {
      ZPoly next;
      for (const auto& [exp, coeff] : f)
        for (int k = 0; k < blk.size; ++k) {
          ZExponent ne = exp;
          ne[blk.start + k] += 1;
          const Rational c = coeff * table[blk.start + k].sign;
          auto [it, inserted] = next.emplace(ne, c);
          if (!inserted) {
            it->second += c;
            if (it->second == 0) next.erase(it);
          }
        }
      f = std::move(next);
    }
    if (power > 1) {
      const Rational inv = Rational(1) / Rational(factorial(power));
      for (auto& [exp, coeff] : f) coeff *= inv;
    }
  }
  return f;
}

SparsePoly z_to_alphabets(const ZPoly& zp, GroupId g1, GroupId g2,
                          GroupId g3) {
  if (g1 == g2 || g1 == g3 || g2 == g3)
    throw GroupMismatch("z_to_alphabets requires three distinct alphabets");
  const auto& table = z_table();
  std::vector<GroupId> sorted = {g1, g2, g3};
  std::sort(sorted.begin(), sorted.end());
  const std::array<GroupId, 3> letters = {g1, g2, g3};
  std::array<std::size_t, 3> slot{};
  for (int l = 0; l < 3; ++l)
    slot[l] = std::lower_bound(sorted.begin(), sorted.end(), letters[l]) -
              sorted.begin();
  SparsePoly out(sorted);
  for (const auto& [exp, coeff] : zp) {
    SparsePoly::Monomial m(3);
    for (int p = 0; p < kNumZ; ++p) {
      const int e = exp[p];
      if (e == 0) continue;
      for (int l = 0; l < 3; ++l)
        m[slot[l]] = m[slot[l]] + e * table[p].letter_exp[l];
    }
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace racah
