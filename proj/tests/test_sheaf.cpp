/*
   Copyright 2026 The jacsyz Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "jacsyz/sheaf.hpp"

namespace {

using namespace jacsyz;

const std::vector<std::string> xyz = {"x", "y", "z"};

LocalInvariants inv(const char* germ) { return local_invariants(parse_polynomial(germ, {"u", "v"})); }

TEST(Chern, UntwistedClasses) {
  EXPECT_EQ(chern_TV_P3(4, 0), (ChernData{3, 0, 6, -20, 0}));
  EXPECT_EQ(chern_TV_P3(2, 0), (ChernData{3, 2, 2, 0, 0}));
  EXPECT_EQ(chern_TV_P3(7, 13), (ChernData{3, -3, 27, -172, 0}));
  EXPECT_THROW(chern_TV_P3(1, 0), PreconditionError);
  EXPECT_THROW(chern_TV_P3(4, -1), PreconditionError);
}

TEST(Chern, TwistByZeroIsIdentityAndTwistsCompose) {
  for (long N = 2; N <= 12; ++N)
    for (long tau = 0; tau <= 6; ++tau) {
      const ChernData c = chern_TV_P3(N, tau);
      EXPECT_EQ(chern_twist(c, 0), c);
      for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) EXPECT_EQ(chern_twist(chern_twist(c, a), b), chern_twist(c, a + b));
    }
  ChernData rank2;
  rank2.rank = 2;
  EXPECT_THROW(chern_twist(rank2, 1), PreconditionError);
}

TEST(Chern, NormalizedTwistAtDegreeThreeMPlusFour) {
  for (long m = 0; m <= 5; ++m) {
    const long N = 3 * m + 4;
    for (long tau = 0; tau <= 8 * m + 5; ++tau) {
      const ChernData f = chern_twist(chern_TV_P3(N, tau), m);
      EXPECT_EQ(f.c1, 0);
      EXPECT_EQ(f.c2, 6 * (m + 1) * (m + 1));
      // substitute N = 3m + 4 into c3 + m c2 + m^2 c1 + m^3 and expand
      EXPECT_EQ(*f.c3, -20 * m * m * m - 60 * m * m - 60 * m - 20 + tau);
    }
  }
}

TEST(Chern, NormalizeTwist) {
  EXPECT_EQ(normalize_twist(7), (std::pair<long, long>{1, 0}));
  EXPECT_EQ(normalize_twist(6), (std::pair<long, long>{0, -2}));
  EXPECT_EQ(normalize_twist(4), (std::pair<long, long>{0, 0}));
  EXPECT_EQ(normalize_twist(2), (std::pair<long, long>{-1, -1}));
  for (long N = 2; N <= 60; ++N) {
    const auto [m, c1] = normalize_twist(N);
    EXPECT_EQ(c1, -N + 4 + 3 * m);
    EXPECT_TRUE(c1 <= 0 && c1 >= -2);
    EXPECT_EQ(chern_twist(chern_TV_P3(N, 0), m).c1, c1);
  }
}

TEST(SpaceStability, ArithmeticCertificate) {
  const StabilityVerdict a = stability_P3_thm13(4, 5);
  EXPECT_EQ(a.status, StabilityStatus::stable_certified);
  ASSERT_TRUE(a.chern);
  EXPECT_EQ(*a.chern, (ChernData{3, 0, 6, -15, 0}));
  EXPECT_EQ(stability_P3_thm13(7, 14).status, StabilityStatus::undetermined);
  EXPECT_EQ(stability_P3_thm13(7, 13).status, StabilityStatus::stable_certified);
  const StabilityVerdict six = stability_P3_thm13(6, 0);
  EXPECT_EQ(six.status, StabilityStatus::undetermined);
  EXPECT_NE(six.witness.find("not congruent to 1 mod 3"), std::string::npos);
  EXPECT_FALSE(six.chern);
}

TEST(SpaceStability, QuarticSurfacesHaveNoLinearRelations) {
  for (const auto& c : corpus::quartic_surfaces()) {
    const JacobianData j = JacobianData::from(c.polynomial());
    GradedEngine g(j);
    const CertifiedLocus locus = certify_singular_locus(j, g, c.projective_points());
    ASSERT_LE(locus.tau_global, 5u) << c.name;
    EXPECT_EQ(stability_P3_thm13(4, static_cast<long>(locus.tau_global)).status, StabilityStatus::stable_certified);
    EXPECT_EQ(g.dim_AR(1), 0u) << c.name;
  }
}

TEST(PlaneStability, ExactCriterion) {
  for (int N = 5; N <= 8; ++N) {
    GradedEngine g(JacobianData::from(corpus::vn_curve(N).polynomial()));
    EXPECT_EQ(stability_P2_exact(g).status, StabilityStatus::stable_certified) << N;
  }
  GradedEngine cubic(JacobianData::from(corpus::nodal_curves().front().polynomial()));
  EXPECT_EQ(stability_P2_exact(cubic).status, StabilityStatus::stable_certified);
  // three lines: free, with a degree-1 relation x f_x - y f_y = 0
  GradedEngine lines(JacobianData::from(parse_poly("x*y*z", xyz)));
  const StabilityVerdict v = stability_P2_exact(lines);
  EXPECT_EQ(v.status, StabilityStatus::not_stable);
  EXPECT_EQ(*v.witness_degree, 1);
  GradedEngine surface(JacobianData::from(corpus::fermat(4, corpus::kSpace).polynomial()));
  EXPECT_THROW(stability_P2_exact(surface), PreconditionError);
}

TEST(PlaneStability, SufficientCriterion) {
  const LocalInvariants t = inv("u^2*v^2+u^5+v^5");
  EXPECT_EQ(stability_P2_sufficient(5, {t}).status, StabilityStatus::undetermined);  // 2 > 1
  for (long N = 6; N <= 20; ++N) EXPECT_EQ(stability_P2_sufficient(N, {t}).status, StabilityStatus::stable_certified);
  EXPECT_EQ(stability_P2_sufficient(4, {inv("u^2*v+v^3")}).status, StabilityStatus::stable_certified);
  const LocalInvariants heavy = inv("u^6+v^6");
  EXPECT_EQ(stability_P2_sufficient(7, {heavy, heavy}).status, StabilityStatus::undetermined);
}

TEST(PlaneStability, SufficientNeverContradictsExact) {
  std::vector<corpus::Instance> curves = corpus::nodal_curves();
  for (auto& c : corpus::torelli_curves()) curves.push_back(c);
  for (int N = 5; N <= 7; ++N) curves.push_back(corpus::vn_curve(N));
  curves.push_back(corpus::cone_quartic());
  for (const auto& c : curves) {
    const JacobianData j = JacobianData::from(c.polynomial());
    GradedEngine g(j);
    const CertifiedLocus locus = certify_singular_locus(j, g, c.projective_points());
    if (stability_P2_sufficient(j.N, locus.locals).status == StabilityStatus::stable_certified) {
      EXPECT_EQ(stability_P2_exact(g).status, StabilityStatus::stable_certified) << c.name;
    }
  }
}

TEST(Freeness, Obstruction) {
  EXPECT_EQ(freeness_obstruction(5, {inv("u^2*v^2+u^5+v^5")}), Freeness::possible);
  EXPECT_EQ(freeness_obstruction(5, {inv("u^2+v^2")}), Freeness::excluded);
  EXPECT_EQ(freeness_obstruction(5, {}), Freeness::excluded);
  // x y z is free, so the obstruction must not exclude it
  const LocalInvariants node = inv("u*v");
  EXPECT_EQ(freeness_obstruction(3, {node, node, node}), Freeness::possible);
}

}  // namespace
