// Copyright 2026 The Parity Compiler Authors
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

#include "parity/cnot.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "parity/parity_code.hpp"
#include "statevector.hpp"

using namespace parity;

namespace {

ProjectorSet set_of(std::size_t n, std::vector<Projector> projectors) {
  ProjectorSet set;
  set.num_terms = n;
  set.num_physical = n;
  set.projectors = std::move(projectors);
  return set;
}

Gate cx(std::size_t c, std::size_t t) { return {GateKind::cnot, c, t, 0.0}; }
Gate rz(std::size_t q, double a) { return {GateKind::rz, q, q, a}; }

std::vector<std::size_t> range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = i;
  }
  return v;
}

// Per-qubit gate sequences; scheduling must keep each unchanged.
std::map<std::size_t, std::vector<Gate>> per_qubit(const Circuit& c) {
  std::map<std::size_t, std::vector<Gate>> out;
  for (const auto& g : c.gates) {
    out[g.control].push_back(g);
    if (g.kind == GateKind::cnot) {
      out[g.target].push_back(g);
    }
  }
  return out;
}

}  // namespace

TEST(polyomino_shapes, fixed_counts) {
  EXPECT_EQ(polyomino_shapes(1).size(), 1U);
  EXPECT_EQ(polyomino_shapes(2).size(), 2U);
  EXPECT_EQ(polyomino_shapes(3).size(), 6U);
  EXPECT_EQ(polyomino_shapes(4).size(), 19U);
  for (const auto& shape : polyomino_shapes(4)) {
    EXPECT_TRUE(sites_connected(shape));
  }
  EXPECT_THROW(polyomino_shapes(5), std::invalid_argument);
}

TEST(emit_circuit, path_tree_matches_reference_gate_order) {
  ProjectorTree tree{0, 3, {{2, 3}, {1, 2}, {0, 1}}, {1, 2, 3}};
  const std::vector<Projector> projectors{{{0, 1, 2, 3}, false}};
  const std::vector<double> angles{0.7};
  const auto c = emit_circuit(std::vector<ProjectorTree>{tree}, projectors, angles, 4);
  const std::vector<Gate> expected{cx(0, 1), cx(1, 2), cx(2, 3), rz(3, 0.7), cx(2, 3), cx(1, 2), cx(0, 1)};
  EXPECT_EQ(c.gates, expected);
  EXPECT_TRUE(moments_valid(c));
}

TEST(emit_circuit, singleton_is_one_rotation) {
  ProjectorTree tree{0, 2, {}, {}};
  const std::vector<Projector> projectors{{{2}, true}};
  const auto c = emit_circuit(std::vector<ProjectorTree>{tree}, projectors, std::vector<double>{1.0}, 3);
  EXPECT_EQ(c.gates, (std::vector<Gate>{rz(2, -1.0)}));
}

TEST(emit_circuit, gate_sequence_is_palindromic_around_rotation) {
  const auto result = lay_out_contiguous(set_of(7, {{range(7), false}}));
  ASSERT_TRUE(result.layout.has_value());
  const auto c = emit_circuit(result.layout->trees, result.layout->projectors, std::vector<double>{1.0}, 7);
  ASSERT_EQ(c.gates.size(), 13U);
  EXPECT_EQ(c.gates[6].kind, GateKind::rz);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(c.gates[i], c.gates[12 - i]);
  }
}

TEST(emit_circuit, unitary_matches_parity_phase) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (std::size_t size = 2; size <= 8; ++size) {
    for (bool odd : {false, true}) {
      const auto set = set_of(size, {{range(size), odd}});
      const auto layout = lay_out_contiguous(set, {.seed = size});
      ASSERT_TRUE(layout.layout.has_value());
      ASSERT_TRUE(verify_contiguous(*layout.layout, set));
      for (int trial = 0; trial < 3; ++trial) {
        const double a = angle(rng);
        const auto c = schedule(emit_circuit(layout.layout->trees, set.projectors, std::vector<double>{a}, size));
        const auto u = parity::testing::circuit_unitary(c);
        const double sign = odd ? -1.0 : 1.0;
        EXPECT_LE(parity::testing::distance_to_parity_phases(u, {range(size)}, {sign * a}), 1e-12);
      }
    }
  }
}

TEST(schedule, examples) {
  EXPECT_TRUE(schedule(Circuit{3, {}, {}}).gates.empty());
  EXPECT_TRUE(schedule(Circuit{3, {}, {}}).moments.empty());

  Circuit chain{4, {cx(0, 1), cx(1, 2), cx(2, 3), rz(3, 1.0), cx(2, 3), cx(1, 2), cx(0, 1)}, {}};
  EXPECT_EQ(schedule(chain).moments.size(), 7U);

  const std::vector<Projector> projectors{{{0, 1, 2}, false}, {{3, 4, 5}, false}};
  const std::vector<ProjectorTree> trees{{0, 1, {{0, 1}, {2, 1}}, {1, 1}}, {1, 4, {{3, 4}, {5, 4}}, {1, 1}}};
  const auto joint = schedule(emit_circuit(trees, projectors, std::vector<double>{1.0, 2.0}, 6));
  const auto alone = schedule(emit_circuit(std::vector<ProjectorTree>{trees[0]}, projectors, std::vector<double>{1.0}, 6));
  EXPECT_EQ(joint.moments.size(), alone.moments.size());
  EXPECT_TRUE(moments_valid(joint));
}

TEST(schedule, preserves_per_qubit_order_and_depth_bound) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    Circuit c{5, {}, {}};
    std::uniform_int_distribution<std::size_t> q(0, 4);
    for (int g = 0; g < 20; ++g) {
      const std::size_t a = q(rng);
      std::size_t b = q(rng);
      if (a == b) {
        c.gates.push_back(rz(a, 0.5));
      } else {
        c.gates.push_back(cx(a, b));
      }
    }
    const auto s = schedule(c);
    EXPECT_TRUE(moments_valid(s));
    EXPECT_LE(s.moments.size(), c.gates.size());
    EXPECT_EQ(per_qubit(s), per_qubit(c));
    const auto us = parity::testing::circuit_unitary(s);
    const auto uc = parity::testing::circuit_unitary(c);
    double worst = 0.0;
    for (std::size_t j = 0; j < us.size(); ++j) {
      for (std::size_t i = 0; i < us.size(); ++i) {
        worst = std::max(worst, std::abs(us[j][i] - uc[j][i]));
      }
    }
    EXPECT_LE(worst, 1e-12);
  }
}

TEST(lay_out_contiguous, shapes_and_reference_projectors) {
  const auto domino = lay_out_contiguous(set_of(2, {{{0, 1}, false}}));
  ASSERT_TRUE(domino.layout.has_value());
  EXPECT_EQ(domino.layout->layout.height * domino.layout->layout.width, 2U);

  const auto tetromino = lay_out_contiguous(set_of(4, {{{0, 1, 2, 3}, false}}));
  ASSERT_TRUE(tetromino.layout.has_value());
  std::vector<Site> sites;
  for (const auto& p : tetromino.layout->layout.positions) {
    sites.push_back(*p);
  }
  std::sort(sites.begin(), sites.end());
  const auto& shapes = polyomino_shapes(4);
  EXPECT_NE(std::find(shapes.begin(), shapes.end(), sites), shapes.end());

  const auto code = build_parity_code(parity::testing::five_qubit_problem());
  const auto set = build_projector_set(code.check, code.check_offset, {.mode = ProjectorMode::cnot, .max_len = 6});
  const auto result = lay_out_contiguous(set);
  ASSERT_TRUE(result.layout.has_value());
  EXPECT_TRUE(verify_contiguous(*result.layout, set));
  EXPECT_EQ(result.layout->trees.size(), 2U);
}

TEST(lay_out_contiguous, root_has_highest_degree) {
  const auto set = set_of(4, {{{0, 1, 2, 3}, false}});
  const std::vector<std::optional<Site>> t_shape{Site{0, 0}, Site{0, 1}, Site{0, 2}, Site{1, 1}};
  const auto tree = build_tree(set.projectors[0], 0, t_shape);
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->root, 1U);
  EXPECT_EQ(tree->edges.size(), 3U);
  const std::vector<std::optional<Site>> split{Site{0, 0}, Site{0, 1}, Site{2, 2}, Site{1, 1}};
  EXPECT_FALSE(build_tree(set.projectors[0], 0, split).has_value());
}

TEST(lay_out_contiguous, fuzz_layouts_and_full_circuits) {
  std::mt19937_64 rng(63);
  int compiled = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto problem = parity::testing::random_problem(rng, {.max_qubits = 5, .max_terms = 9});
    const auto code = build_parity_code(problem);
    std::uniform_int_distribution<std::size_t> len(3, 8);
    const auto set = build_projector_set(code.check, code.check_offset, {.mode = ProjectorMode::cnot, .max_len = len(rng)});
    const auto result = lay_out_contiguous(set, {.seed = static_cast<std::uint64_t>(trial), .budget = 20000});
    if (!result.layout) {
      continue;
    }
    ++compiled;
    ASSERT_TRUE(verify_contiguous(*result.layout, set));
    EXPECT_EQ(lay_out_contiguous(set, {.seed = static_cast<std::uint64_t>(trial), .budget = 20000}).layout,
              result.layout);
    if (set.num_physical > 10) {
      continue;
    }
    std::vector<double> angles;
    std::vector<std::vector<std::size_t>> supports;
    for (std::size_t p = 0; p < set.projectors.size(); ++p) {
      angles.push_back(0.3 + 0.1 * static_cast<double>(p));
      supports.push_back(set.projectors[p].qubits);
    }
    const auto c = schedule(emit_circuit(result.layout->trees, set.projectors, angles, set.num_physical));
    ASSERT_TRUE(moments_valid(c));
    for (const auto& g : c.gates) {
      if (g.kind == GateKind::cnot) {
        EXPECT_TRUE(sites_adjacent(*result.layout->layout.positions[g.control],
                                   *result.layout->layout.positions[g.target]));
      }
    }
    std::vector<double> signed_angles;
    for (std::size_t p = 0; p < angles.size(); ++p) {
      signed_angles.push_back(set.projectors[p].odd ? -angles[p] : angles[p]);
    }
    EXPECT_LE(parity::testing::distance_to_parity_phases(parity::testing::circuit_unitary(c), supports, signed_angles),
              1e-12);
  }
  EXPECT_GT(compiled, 50);
}
