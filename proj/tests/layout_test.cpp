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

#include "parity/layout.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "parity/hamiltonian.hpp"
#include "parity/parity_code.hpp"

using namespace parity;
using gf2::BitMatrix;
using gf2::BitVector;
using parity::testing::bits_of;

namespace {

ProjectorSet set_of(std::size_t num_terms, std::vector<Projector> projectors) {
  ProjectorSet set;
  set.num_terms = num_terms;
  set.num_physical = num_terms;
  set.projectors = std::move(projectors);
  return set;
}

std::size_t shared_qubits(const Plaquette& a, const Plaquette& b) {
  std::size_t n = 0;
  for (auto q : a.qubits) {
    n += std::count(b.qubits.begin(), b.qubits.end(), q);
  }
  return n;
}

}  // namespace

TEST(lay_out, reference_check_gives_two_adjacent_squares) {
  const auto code = build_parity_code(parity::testing::five_qubit_problem());
  const auto set = build_projector_set(code.check, code.check_offset);
  const auto result = lay_out(set);
  ASSERT_TRUE(result.layout.has_value()) << result.diagnostics.summary();
  const auto& layout = *result.layout;
  EXPECT_TRUE(verify_layout(layout, set));
  ASSERT_EQ(layout.plaquettes.size(), 2U);
  const auto& a = layout.plaquettes[0];
  const auto& b = layout.plaquettes[1];
  EXPECT_EQ(a.kind, PlaquetteKind::square);
  EXPECT_EQ(b.kind, PlaquetteKind::square);
  EXPECT_EQ(shared_qubits(a, b), 2U);
  EXPECT_TRUE(sites_adjacent(a.cell, b.cell));
  EXPECT_EQ(layout.height * layout.width, 6U);
  EXPECT_TRUE(layout.dynamical_ancillas.empty());
}

TEST(lay_out, single_triangle) {
  const auto set = set_of(3, {{{0, 1, 2}, false}});
  const auto result = lay_out(set);
  ASSERT_TRUE(result.layout.has_value());
  ASSERT_EQ(result.layout->plaquettes.size(), 1U);
  EXPECT_EQ(result.layout->plaquettes[0].kind, PlaquetteKind::triangle);
  EXPECT_TRUE(verify_layout(*result.layout, set));
}

TEST(lay_out, disjoint_projectors_use_distinct_cells) {
  const auto set = set_of(7, {{{0, 1, 2, 3}, false}, {{4, 5, 6}, true}});
  const auto result = lay_out(set);
  ASSERT_TRUE(result.layout.has_value());
  EXPECT_NE(result.layout->plaquettes[0].cell, result.layout->plaquettes[1].cell);
  EXPECT_TRUE(verify_layout(*result.layout, set));
}

TEST(lay_out, edge_projectors_are_adjacent_pairs) {
  const auto set = set_of(4, {{{0, 1}, false}, {{1, 2, 3}, false}});
  const auto result = lay_out(set);
  ASSERT_TRUE(result.layout.has_value());
  const auto& layout = *result.layout;
  EXPECT_EQ(layout.plaquettes[0].kind, PlaquetteKind::edge);
  EXPECT_TRUE(sites_adjacent(*layout.positions[0], *layout.positions[1]));
  EXPECT_TRUE(verify_layout(layout, set));
}

TEST(lay_out, unconstrained_and_pinned_qubits) {
  auto set = set_of(6, {{{0, 1, 2}, false}});
  set.pinned = {{5, true}};
  const auto result = lay_out(set);
  ASSERT_TRUE(result.layout.has_value());
  const auto& layout = *result.layout;
  EXPECT_FALSE(layout.positions[5].has_value());
  EXPECT_TRUE(layout.positions[3].has_value());
  EXPECT_TRUE(layout.positions[4].has_value());
  EXPECT_TRUE(verify_layout(layout, set));
}

TEST(lay_out, infeasible_instance_reports_diagnostics) {
  // Three squares through one lattice edge cannot be placed: an edge borders two cells.
  const auto set = set_of(8, {{{0, 1, 2, 3}, false}, {{0, 1, 4, 5}, false}, {{0, 1, 6, 7}, false}});
  const auto result = lay_out(set, {.budget = 2000, .max_dynamic_ancillas = 2, .max_grid_growth = 1});
  EXPECT_FALSE(result.layout.has_value());
  EXPECT_EQ(result.diagnostics.dynamic_ancillas, 2U);
  EXPECT_TRUE(result.diagnostics.hardest.has_value());
  EXPECT_NE(result.diagnostics.summary().find("hardest projector"), std::string::npos);
}

TEST(lay_out, rejects_long_projectors) {
  EXPECT_THROW(lay_out(set_of(5, {{{0, 1, 2, 3, 4}, false}})), std::invalid_argument);
}

TEST(split_dynamically, brute_force_projection) {
  AncillaPool pool(4);
  for (bool odd : {false, true}) {
    const Projector original{{0, 1, 2, 3}, odd};
    auto [first, second, record] = split_dynamically(original, pool);
    const std::size_t x = record.physical_index;
    EXPECT_EQ(first.qubits, (std::vector<std::size_t>{0, 1, x}));
    EXPECT_EQ(second.qubits, (std::vector<std::size_t>{2, 3, x}));
    std::size_t solutions = 0;
    for (std::uint64_t v = 0; v < 32; ++v) {
      const BitVector five = bits_of(v, 5);
      BitVector full = five.slice(0, 4).resized(pool.num_physical());
      full.set(x, five.get(4));
      if (satisfies(first, full) && satisfies(second, full)) {
        ++solutions;
        EXPECT_TRUE(satisfies(original, full));
      }
    }
    EXPECT_EQ(solutions, 8U);
  }
  EXPECT_THROW(split_dynamically({{0, 1, 2}, false}, pool), std::invalid_argument);
}

TEST(verify_layout, detects_broken_layouts) {
  const auto code = build_parity_code(parity::testing::five_qubit_problem());
  const auto set = build_projector_set(code.check, code.check_offset);
  const auto layout = *lay_out(set).layout;
  ASSERT_TRUE(verify_layout(layout, set));

  auto same_cell = layout;
  same_cell.plaquettes[1].cell = same_cell.plaquettes[0].cell;
  EXPECT_FALSE(verify_layout(same_cell, set));

  auto wrong_parity = layout;
  wrong_parity.plaquettes[0].odd = !wrong_parity.plaquettes[0].odd;
  EXPECT_FALSE(verify_layout(wrong_parity, set));

  auto collision = layout;
  collision.positions[0] = collision.positions[1];
  EXPECT_FALSE(verify_layout(collision, set));

  auto missing = layout;
  missing.plaquettes.pop_back();
  EXPECT_FALSE(verify_layout(missing, set));
}

TEST(lay_out, same_seed_same_layout) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto problem = parity::testing::random_problem(rng, {.max_qubits = 6, .max_terms = 10});
    const auto code = build_parity_code(problem);
    const auto set = build_projector_set(code.check, code.check_offset);
    const LayoutOptions options{.seed = 7, .budget = 20000};
    const auto a = lay_out(set, options);
    const auto b = lay_out(set, options);
    EXPECT_EQ(a.layout, b.layout);
  }
}

TEST(lay_out, fuzz_layouts_verify_and_hold_codewords) {
  std::mt19937_64 rng(52);
  int compiled = 0;
  int attempted = 0;
  int dynamical = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto problem =
        parity::testing::random_problem(rng, {.max_qubits = 6, .max_terms = 10, .max_constraints = 1});
    ParityCode code;
    try {
      code = build_parity_code(problem);
    } catch (const InfeasibleConstraints&) {
      continue;
    }
    const auto set = build_projector_set(code.check, code.check_offset);
    ++attempted;
    const auto result = lay_out(set, {.seed = static_cast<std::uint64_t>(trial), .budget = 20000});
    if (!result.layout) {
      continue;
    }
    ++compiled;
    const auto& layout = *result.layout;
    dynamical += layout.dynamical_ancillas.empty() ? 0 : 1;
    ASSERT_TRUE(verify_layout(layout, set));
    const auto couplers = coupling_projectors(layout);
    const auto ancillas = layout.all_ancillas();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << problem.num_qubits()); ++x) {
      const auto v = bits_of(x, problem.num_qubits());
      if (!check_constraints(problem, v)) {
        continue;
      }
      const auto w = extend_with_ancillas(encode(code, v), layout.num_physical(), ancillas);
      for (const auto& c : couplers) {
        EXPECT_TRUE(satisfies(c, w));
      }
      for (const auto& pin : layout.pinned) {
        EXPECT_EQ(w.get(pin.qubit), pin.value);
      }
    }
  }
  EXPECT_GT(compiled, attempted * 9 / 10);
  EXPECT_GT(dynamical, 0);
}

TEST(emit_physical_hamiltonian, five_qubit_example) {
  const auto problem = parity::testing::five_qubit_problem();
  const auto code = build_parity_code(problem);
  const auto set = build_projector_set(code.check, code.check_offset);
  const auto layout = *lay_out(set).layout;
  const double c = default_strength(problem);
  EXPECT_EQ(c, 13.0);
  const auto ham = emit_physical_hamiltonian(layout, problem, c);
  EXPECT_EQ(ham.fields, std::vector<double>(6, 1.0));
  ASSERT_EQ(ham.couplings.size(), 2U);
  for (const auto& t : ham.couplings) {
    EXPECT_EQ(t.qubits.size(), 4U);
    EXPECT_EQ(t.coefficient, -c);
  }
  EXPECT_EQ(ham.constant, 0.0);
}

TEST(emit_physical_hamiltonian, empty_and_pinned) {
  const LogicalProblem empty(2, {}, {});
  const auto ham = emit_physical_hamiltonian(std::vector<Projector>{}, 0, {}, empty, 1.0);
  EXPECT_TRUE(ham.fields.empty());
  EXPECT_TRUE(ham.couplings.empty());
  EXPECT_EQ(physical_energy(ham, BitVector(0)), 0.0);

  const LogicalProblem two(2, {{{0}, 0.5}, {{1}, -2.0}});
  const std::vector<PinnedQubit> pinned{{1, true}};
  const auto pinned_ham = emit_physical_hamiltonian(std::vector<Projector>{}, 2, pinned, two, 1.0);
  EXPECT_EQ(pinned_ham.fields, (std::vector<double>{0.5, 0.0}));
  EXPECT_EQ(pinned_ham.constant, 2.0);
  EXPECT_THROW(emit_physical_hamiltonian(std::vector<Projector>{}, 2, {}, two, -1.0), std::invalid_argument);
}

TEST(field_energy, equals_logical_energy_on_codewords) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto problem = parity::testing::random_problem(rng, {.max_qubits = 7, .max_terms = 12, .max_order = 4});
    const auto code = build_parity_code(problem);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << problem.num_qubits()); ++x) {
      const auto v = bits_of(x, problem.num_qubits());
      EXPECT_EQ(field_energy(problem, encode(code, v)), logical_energy(problem, v));
    }
  }
}
