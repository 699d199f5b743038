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

#ifndef JACSYZ_TOOLS_CORPUS_HPP
#define JACSYZ_TOOLS_CORPUS_HPP

#include <string>
#include <vector>

#include "jacsyz/graded.hpp"

// Built-in instances with hand-checked singular loci. Equations are written
// expanded because the input grammar has no parentheses.

namespace jacsyz::corpus {

enum class NodeLayout { none, one, two, three_collinear, three_general, other };

struct Instance {
  std::string name;
  std::vector<std::string> variables;
  std::string equation;
  std::vector<std::vector<long>> points;
  NodeLayout layout = NodeLayout::other;

  HomogPoly polynomial() const { return parse_poly(equation, variables); }

  std::vector<ProjPoint> projective_points() const {
    std::vector<ProjPoint> out;
    for (const auto& p : points) {
      std::vector<Rational> c;
      for (long v : p) c.emplace_back(v);
      out.emplace_back(std::move(c));
    }
    return out;
  }
};

inline const std::vector<std::string> kPlane = {"x", "y", "z"};
inline const std::vector<std::string> kSpace = {"x", "y", "z", "w"};

namespace detail {

inline std::string zpow(int e) {
  if (e == 0) return "";
  if (e == 1) return "*z";
  return "*z^" + std::to_string(e);
}

}  // namespace detail

/// x^2 y^2 z^{N-4} + x^5 z^{N-5} + y^5 z^{N-5} + x^N + y^N, N >= 5; one T_{2,5,5} point at (0:0:1).
inline Instance vn_curve(int N) {
  const std::string n = std::to_string(N);
  Instance c;
  c.name = "V_" + n;
  c.variables = kPlane;
  c.equation = "x^2*y^2" + detail::zpow(N - 4) + "+x^5" + detail::zpow(N - 5) + "+y^5" + detail::zpow(N - 5) + "+x^" + n +
               "+y^" + n;
  c.points = {{0, 0, 1}};
  return c;
}

inline Instance fermat(int N, const std::vector<std::string>& vars) {
  Instance c;
  c.name = "fermat_" + std::to_string(vars.size() - 1) + "_" + std::to_string(N);
  c.variables = vars;
  for (std::size_t i = 0; i < vars.size(); ++i) c.equation += (i ? "+" : "") + vars[i] + "^" + std::to_string(N);
  c.layout = NodeLayout::none;
  return c;
}

/// Plane curves with 1, 2 or 3 nodes, two degrees per layout.
inline std::vector<Instance> nodal_curves() {
  return {
      {"one_node_3", kPlane, "y^2*z-x^3-x^2*z", {{0, 0, 1}}, NodeLayout::one},
      {"one_node_5", kPlane, "z^3*y^2-z^3*x^2+x^5+y^5+x^4*y", {{0, 0, 1}}, NodeLayout::one},
      {"two_nodes_3", kPlane, "x*y*z-z^3", {{1, 0, 0}, {0, 1, 0}}, NodeLayout::two},
      {"two_nodes_5", kPlane, "z^3*y^2-z^3*x^2+x^3*y^2-x^3*z^2+y^5", {{0, 0, 1}, {1, 0, 0}}, NodeLayout::two},
      {"three_collinear_4", kPlane, "x^2*y*z-x*y^2*z+z^4+x^2*z^2+y^2*z^2", {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}},
       NodeLayout::three_collinear},
      {"three_collinear_6", kPlane,
       "x^4*y^2-2*x^3*y^3+x^2*y^4+x^4*y*z+x^2*y^3*z+x^2*y*z^3-x^3*y^2*z-x*y^4*z-x*y^2*z^3+z^6+x^4*z^2+y^4*z^2",
       {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, NodeLayout::three_collinear},
      {"three_general_3", kPlane, "x*y*z", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, NodeLayout::three_general},
      {"three_general_4", kPlane, "y^2*z^2+x^2*z^2+x^2*y^2+3*x*y*z^2+5*x^2*y*z+7*x*y^2*z",
       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, NodeLayout::three_general},
      {"three_general_5", kPlane,
       "x^3*y^2-x^3*z^2+y^3*z^2-y^3*x^2+z^3*x^2-z^3*y^2+x^2*y^2*z+2*x*y^2*z^2", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
       NodeLayout::three_general},
  };
}

/// Curves inside the membership-test hypothesis tau <= (N-2)/2.
inline std::vector<Instance> torelli_curves() {
  return {
      {"one_node_4", kPlane, "z^2*y^2-z^2*x^2+x^4+y^4", {{0, 0, 1}}, NodeLayout::one},
      {"one_node_6", kPlane, "z^4*y^2-z^4*x^2+x^6+y^6", {{0, 0, 1}}, NodeLayout::one},
      {"one_cusp_6", kPlane, "y^2*z^4-x^3*z^3+x^6+y^6", {{0, 0, 1}}, NodeLayout::other},
      {"two_nodes_6", kPlane, "z^4*y^2-z^4*x^2+x^4*y^2-x^4*z^2+y^6", {{0, 0, 1}, {1, 0, 0}}, NodeLayout::two},
  };
}

/// Quartic surfaces with tau <= 5.
inline std::vector<Instance> quartic_surfaces() {
  return {
      {"quartic_node", kSpace, "w^2*x*y+w^2*z^2+x^4+y^4+z^4", {{0, 0, 0, 1}}, NodeLayout::one},
      {"quartic_a2", kSpace, "w^2*x*y+w*z^3+x^4+y^4+z^4", {{0, 0, 0, 1}}, NodeLayout::other},
      {"quartic_node_b", kSpace, "w^2*x*y+w^2*z^2+x^2*y*z+x^4+y^4+z^4+x*y*z*w", {{0, 0, 0, 1}}, NodeLayout::one},
  };
}

/// z x y (x - y): an ordinary triple point of multiplicity N-1 and three nodes.
inline Instance cone_quartic() {
  return {"cone_quartic", kPlane, "x^2*y*z-x*y^2*z", {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, NodeLayout::other};
}

}  // namespace jacsyz::corpus

#endif  // JACSYZ_TOOLS_CORPUS_HPP
