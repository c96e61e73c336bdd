#include "racah/multi_index.hpp"

#include <algorithm>

namespace racah {

namespace {

// index-set membership of each variable, 1-based indices, 0 = unused slot
constexpr std::array<std::array<int, 2>, kNumVars> kMembers = {{
    {1, 0},  // A1
    {2, 0},  // A2
    {3, 0},  // A3
    {1, 2},  // A12
    {1, 3},  // A13
    {2, 3},  // A23
}};

constexpr std::array<const char*, kNumVars> kNames = {"A1",  "A2",  "A3",
                                                      "A12", "A13", "A23"};

Var pair_var(int p, int q) {
  // p < q assumed
  if (p == 1) return q == 2 ? Var::a12 : Var::a13;
  return Var::a23;
}

}  // namespace

const char* var_name(Var x) { return kNames[static_cast<int>(x)]; }

std::array<int, 3> MultiIndex6::weight() const {
  std::array<int, 3> w{};
  for (int v = 0; v < kNumVars; ++v)
    for (int idx : kMembers[v])
      if (idx != 0) w[idx - 1] += e[v];
  return w;
}

Integer multi_factorial(const MultiIndex6& m) {
  Integer r = 1;
  for (int v : m.e) r *= factorial(static_cast<unsigned long>(v));
  return r;
}

std::string monomial_name(const MultiIndex6& m) {
  std::string s;
  for (int v = 0; v < kNumVars; ++v) {
    if (m.e[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += kNames[v];
    if (m.e[v] != 1) s += '^' + std::to_string(m.e[v]);
  }
  return s.empty() ? "1" : s;
}

VarSubstitution substitute_index(Var x, int i, int j) {
  const auto& mem = kMembers[static_cast<int>(x)];
  const bool has_j = mem[0] == j || mem[1] == j;
  if (!has_j) return {};
  if (i == j) return {true, 1, x};

  if (mem[1] == 0) {
    // single-index variable: A_j -> A_i
    return {true, 1, static_cast<Var>(i - 1)};
  }
  const int other = mem[0] == j ? mem[1] : mem[0];
  if (other == i) return {};  // repeated index kills the wedge
  const int p = std::min(i, other);
  const int q = std::max(i, other);
  // substitution keeps j's slot, then sorting the pair may swap once
  const bool was_first = mem[0] == j;
  const bool is_first = i < other;
  const int sign = (was_first == is_first) ? 1 : -1;
  return {true, sign, pair_var(p, q)};
}

}  // namespace racah
