#include "racah/gt_pattern.hpp"

#include <string>

#include "racah/error.hpp"

namespace racah {

void require_valid(const Weight3& w) {
  if (!w.valid())
    throw InvalidWeight("weight [" + std::to_string(w.m1) + "," +
                        std::to_string(w.m2) + "," + std::to_string(w.m3) +
                        "] is not dominant with m3 = 0");
}

void require_valid(const GTPattern& p) {
  if (!p.valid())
    throw NotAPattern("rows [" + std::to_string(p.m13) + "," +
                      std::to_string(p.m23) + "," + std::to_string(p.m33) +
                      "; " + std::to_string(p.m12) + "," +
                      std::to_string(p.m22) + "; " + std::to_string(p.m11) +
                      "] violate the interlacing inequalities");
}

std::vector<GTPattern> enumerate_patterns(const Weight3& w) {
  require_valid(w);
  std::vector<GTPattern> out;
  for (int m12 = w.m2; m12 <= w.m1; ++m12)
    for (int m22 = w.m3; m22 <= w.m2; ++m22)
      for (int m11 = m22; m11 <= m12; ++m11)
        out.push_back({w.m1, w.m2, w.m3, m12, m22, m11});
  return out;
}

long weyl_dimension(const Weight3& w) {
  require_valid(w);
  const long a = w.m1 - w.m2 + 1;
  const long b = w.m2 - w.m3 + 1;
  const long c = w.m1 - w.m3 + 2;
  return a * b * c / 2;
}

}  // namespace racah
