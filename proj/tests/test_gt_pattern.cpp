#include "racah/gt_pattern.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "racah/error.hpp"

using namespace racah;

TEST_CASE("weight validation") {
  CHECK(Weight3{2, 1, 0}.valid());
  CHECK(Weight3{0, 0, 0}.valid());
  CHECK_FALSE(Weight3{1, 2, 0}.valid());
  CHECK_FALSE(Weight3{2, 1, 1}.valid());
  CHECK_FALSE(Weight3{3, -1, 0}.valid());
  CHECK_THROWS_AS(require_valid(Weight3{2, 1, 1}), InvalidWeight);
}

TEST_CASE("pattern validation and weights") {
  const GTPattern p{2, 1, 0, 2, 1, 1};
  CHECK(p.valid());
  CHECK(p.top() == Weight3{2, 1, 0});
  CHECK(p.weight() == std::array<int, 3>{1, 2, 0});

  CHECK_FALSE(GTPattern{2, 1, 0, 2, 1, 0}.valid());  // m11 < m22
  CHECK_FALSE(GTPattern{2, 1, 0, 0, 0, 0}.valid());  // m12 < m23
  CHECK_FALSE(GTPattern{2, 1, 1, 2, 1, 1}.valid());  // m33 != 0
  CHECK_THROWS_AS(require_valid(GTPattern{2, 1, 0, 2, 1, 0}), NotAPattern);
}

TEST_CASE("pattern enumeration matches the Weyl dimension") {
  CHECK(enumerate_patterns({1, 0, 0}).size() == 3);
  CHECK(enumerate_patterns({1, 1, 0}).size() == 3);
  CHECK(enumerate_patterns({2, 1, 0}).size() == 8);
  CHECK(enumerate_patterns({0, 0, 0}).size() == 1);

  for (int m1 = 0; m1 <= 6; ++m1)
    for (int m2 = 0; m2 <= m1; ++m2) {
      const Weight3 w{m1, m2, 0};
      const auto pats = enumerate_patterns(w);
      CHECK(static_cast<long>(pats.size()) == weyl_dimension(w));
      CHECK(std::is_sorted(pats.begin(), pats.end()));
      CHECK(std::set<GTPattern>(pats.begin(), pats.end()).size() ==
            pats.size());
      for (const auto& p : pats) {
        CHECK(p.valid());
        CHECK(p.top() == w);
        const auto wt = p.weight();
        CHECK(wt[0] + wt[1] + wt[2] == m1 + m2);
      }
    }

  CHECK_THROWS_AS(enumerate_patterns({1, 2, 0}), InvalidWeight);
}
