// Copyright 2026 The weylqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "weylqubit/qubit.hpp"
#include "weylqubit/qudit.hpp"

namespace weylqubit {
namespace {

TEST(QuditTest, ProjectorsResolveIdentity) {
  for (int64_t d = 2; d <= 5; ++d) {
    AlgebraElement sum;
    for (int64_t l = 1; l <= d; ++l) {
      const AlgebraElement p = projector(d, l);
      EXPECT_TRUE(equals(p * p, p));
      EXPECT_TRUE(equals(adjoint(p), p));
      for (int64_t m = l + 1; m <= d; ++m) EXPECT_TRUE((p * projector(d, m)).is_zero());
      sum += p;
    }
    EXPECT_TRUE(equals(sum, AlgebraElement::identity())) << "d=" << d;
  }
}

TEST(QuditTest, MatrixUnitTable) {
  const int64_t d = 3;
  for (int64_t a = 1; a <= d; ++a)
    for (int64_t b = 1; b <= d; ++b)
      for (int64_t c = 1; c <= d; ++c)
        for (int64_t e = 1; e <= d; ++e) {
          const AlgebraElement prod = matrix_unit(d, a, b) * matrix_unit(d, c, e);
          if (b == c) {
            EXPECT_TRUE(equals(prod, matrix_unit(d, a, e)));
          } else {
            EXPECT_TRUE(prod.is_zero());
          }
        }
}

TEST(QuditTest, Reports) {
  for (int64_t d : {2, 3, 4, 6}) {
    const Report r = verify_qudit(d);
    EXPECT_TRUE(r.all_pass()) << r.to_text();
  }
}

TEST(QuditTest, QubitCaseMatchesLadder) {
  const auto& g = generators();
  EXPECT_TRUE(equals(matrix_unit(2, 2, 1), g.a_plus));
  EXPECT_TRUE(equals(matrix_unit(2, 1, 2), g.a_minus));
}

TEST(QuditTest, RejectsBadDimension) { 
  EXPECT_ANY_THROW(projector(1, 1));
  EXPECT_ANY_THROW(projector(3, 0));
  EXPECT_ANY_THROW(matrix_unit(3, 1, 4));
 }

}  // namespace
}  // namespace weylqubit
