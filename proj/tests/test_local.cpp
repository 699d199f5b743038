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

#include "jacsyz/local.hpp"

namespace {

using namespace jacsyz;

const std::vector<std::string> uv = {"u", "v"};
const std::vector<std::string> uvw = {"u", "v", "w"};

LocalPoly germ(const std::string& s, const std::vector<std::string>& vars = uv) { return parse_polynomial(s, vars); }

/// g(u, v) -> g(a u + b v, c u + d v).
LocalPoly linear_change(const LocalPoly& g, const LocalPoly& new_u, const LocalPoly& new_v) {
  LocalPoly out(2);
  for (const auto& [e, c] : g.terms()) out += c * new_u.pow(e[0]) * new_v.pow(e[1]);
  return out;
}

std::vector<LocalPoly> powers_ideal(std::size_t n, int e) {
  std::vector<LocalPoly> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(LocalPoly::variable(n, i).pow(e));
  return gens;
}

TEST(Truncated, MaximalIdealLeavesConstants) {
  const TruncatedAlgebra a = truncated_quotient({germ("u"), germ("v")}, 3);
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_EQ(a.standard_monomials(), (std::vector<Exponent>{{0, 0}}));
}

TEST(Truncated, PowerIdealHasLengthEToTheN) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (int e = 2; e <= 4; ++e) {
      const int D = static_cast<int>(n) * (e - 1) + 2;
      long expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= e;
      EXPECT_EQ(truncated_quotient(powers_ideal(n, e), D).dim(), static_cast<std::size_t>(expected));
    }
}

TEST(Truncated, NodeTjurinaIdeal) {
  EXPECT_EQ(truncated_quotient(tjurina_ideal(germ("v^2-u^3-u^2")), 3).dim(), 1u);
}

TEST(Truncated, ReductionIdempotentAndKillsGenerators) {
  const LocalPoly g = germ("u^2*v^2+u^5+v^5");
  const TruncatedAlgebra a = tjurina_algebra(g);
  for (const auto& gen : a.gens()) EXPECT_TRUE(a.reduces_to_zero(gen));
  const LocalPoly h = germ("1+u*v+3*u^3-v^4+u^2*v^5");
  EXPECT_EQ(a.reduce(a.reduce(h)), a.reduce(h));
}

TEST(Invariants, AkSeries) {
  for (int k = 1; k <= 6; ++k) {
    const LocalInvariants l = local_invariants(germ("u^2+v^" + std::to_string(k + 1)));
    EXPECT_EQ(l.tau, k);
    EXPECT_EQ(l.mu, k);
    EXPECT_EQ(l.a, k);
    EXPECT_EQ(l.mult, 2);
    EXPECT_EQ(l.weighted_homogeneous, WeightedHomogeneous::yes);
  }
}

TEST(Invariants, NodeCuspAndTriplePoint) {
  const LocalInvariants node = local_invariants(germ("v^2-u^3-u^2"));
  EXPECT_TRUE(node.is_node());
  EXPECT_TRUE(local_invariants(germ("u^2+v^3")).is_cusp());
  const LocalInvariants d4 = local_invariants(germ("u^2*v+v^3"));
  EXPECT_EQ(d4.tau, 4);
  EXPECT_EQ(d4.mu, 4);
  EXPECT_EQ(d4.a, 3);
  EXPECT_EQ(d4.mult, 3);
}

TEST(Invariants, T255Germ) {
  const LocalInvariants l = local_invariants(germ("u^2*v^2+u^5+v^5"));
  EXPECT_EQ(l.tau, 10);
  EXPECT_EQ(l.mu, 11);
  EXPECT_EQ(l.a, 5);
  EXPECT_EQ(l.mult, 4);
  EXPECT_EQ(l.weighted_homogeneous, WeightedHomogeneous::undetermined);
}

TEST(Invariants, OrdinaryMultiplePoints) {
  for (int d = 2; d <= 6; ++d) {
    const std::string e = std::to_string(d);
    const LocalInvariants l = local_invariants(germ("u^" + e + "+v^" + e));
    EXPECT_EQ(l.tau, (d - 1) * (d - 1));
    EXPECT_EQ(l.mu, (d - 1) * (d - 1));
    EXPECT_EQ(l.a, 2 * d - 3);
    EXPECT_EQ(l.mult, d);
  }
}

TEST(Invariants, BrieskornMilnorNumbers) {
  // mu(u^p + v^q) = (p-1)(q-1); in three variables the product of three factors
  for (int p = 2; p <= 5; ++p)
    for (int q = p; q <= 6; ++q)
      EXPECT_EQ(milnor_local(germ("u^" + std::to_string(p) + "+v^" + std::to_string(q))), (p - 1) * (q - 1));
  EXPECT_EQ(milnor_local(germ("u^2+v^3+w^4", uvw)), 6);
  EXPECT_EQ(tjurina_local(germ("u^2+v^3+w^4", uvw)), 6);
  EXPECT_EQ(tjurina_local(germ("u*v+w^2", uvw)), 1);
}

TEST(Invariants, RejectsSmoothAndNonIsolated) {
  EXPECT_THROW(tjurina_local(germ("u+v^2")), PreconditionError);
  EXPECT_THROW(tjurina_local(germ("1+u^2")), PreconditionError);
  LocalOptions small;
  small.truncation_cap = 12;
  EXPECT_THROW(tjurina_local(germ("u^2"), small), PreconditionError);
  EXPECT_THROW(multiplicity(LocalPoly(2)), PreconditionError);
}

TEST(Order, PowerIdealsAndSmallCases) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (int e = 1; e <= 4; ++e) EXPECT_EQ(ideal_order_o(powers_ideal(n, e)), static_cast<int>(n) * (e - 1) + 1);
  EXPECT_EQ(ideal_order_o({germ("u"), germ("v")}), 1);
  EXPECT_EQ(ideal_order_o(tjurina_ideal(germ("v^2-u^3-u^2"))), 1);
  EXPECT_EQ(ideal_order_o({germ("1+u"), germ("v")}), 1);
}

TEST(Order, AgreesWithContactOrder) {
  for (const char* s : {"u^2+v^2", "u^2+v^3", "u^2*v+v^3", "u^2*v^2+u^5+v^5", "u^3+v^4", "u^4+v^4+u^2*v^2",
                        "u^2+v^7", "u^3+u*v^5"}) {
    const LocalPoly g = germ(s);
    EXPECT_EQ(contact_order_a(g), ideal_order_o(tjurina_ideal(g))) << s;
  }
}

TEST(Order, NakayamaCriterionIsStable) {
  for (const char* s : {"u^2+v^3", "u^2*v+v^3", "u^2*v^2+u^5+v^5", "u^4+v^5"}) {
    const auto gens = tjurina_ideal(germ(s));
    const int a = contact_order_a(germ(s));
    EXPECT_TRUE(TruncatedAlgebra(gens, a + 2, 2).kills_max_ideal_power(a + 1)) << s;
    if (a > 1) {
      EXPECT_FALSE(TruncatedAlgebra(gens, a, 2).kills_max_ideal_power(a - 1)) << s;
    }
  }
}

TEST(Invariance, ScalingAndLinearChanges) {
  const LocalPoly nu = germ("u+2*v"), nv = germ("3*v-u");
  for (const char* s : {"u^2+v^3", "u^2*v+v^3", "u^2*v^2+u^5+v^5", "u^3+v^5", "u^2+v^6"}) {
    const LocalPoly g = germ(s);
    const LocalInvariants base = local_invariants(g);
    for (const LocalPoly& h : {Rational(-7, 3) * g, linear_change(g, nu, nv)}) {
      const LocalInvariants l = local_invariants(h);
      EXPECT_EQ(l.tau, base.tau) << s;
      EXPECT_EQ(l.mu, base.mu) << s;
      EXPECT_EQ(l.a, base.a) << s;
      EXPECT_EQ(l.mult, base.mult) << s;
    }
  }
}

TEST(EvalRow, ConstantsAndHighOrderForms) {
  const std::vector<std::string> xyz = {"x", "y", "z"};
  const HomogPoly f = parse_poly("x^2*y^2*z+x^5+y^5", xyz);
  const ProjPoint p({Rational(0), Rational(0), Rational(1)});
  const TruncatedAlgebra a = tjurina_algebra(localize_at(f, p));
  const auto one = eval_row(HomogPoly(Polynomial::constant(3, 1), 0), p, a);
  const auto basis = a.standard_monomials();
  for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(one[i], total_degree(basis[i]) == 0 ? 1 : 0);
  const auto high = eval_row(parse_poly("x^6*z+y^7", xyz), p, a);
  for (const auto& c : high) EXPECT_EQ(c, 0);
}

TEST(EvalRow, NodalCubicLinearForms) {
  const std::vector<std::string> xyz = {"x", "y", "z"};
  const HomogPoly f = parse_poly("z*y^2-x^3-x^2*z", xyz);
  const ProjPoint p({Rational(0), Rational(0), Rational(1)});
  const TruncatedAlgebra a = tjurina_algebra(localize_at(f, p));
  ASSERT_EQ(a.dim(), 1u);
  EXPECT_EQ(eval_row(parse_poly("z", xyz), p, a)[0], 1);
  EXPECT_EQ(eval_row(parse_poly("x", xyz), p, a)[0], 0);
  EXPECT_EQ(eval_row(parse_poly("y", xyz), p, a)[0], 0);
}

}  // namespace
