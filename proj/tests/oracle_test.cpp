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

#include "parity/oracle.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "fixtures.hpp"
#include "parity/layout.hpp"

using namespace parity;
using gf2::BitVector;
using parity::testing::bits_of;

namespace {

// Plain loop over logical_energy, independent of the bit tricks in the oracle.
Optimum naive_optimum(const LogicalProblem& problem) {
  Optimum out;
  out.energy = std::numeric_limits<double>::infinity();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << problem.num_qubits()); ++x) {
    const auto v = bits_of(x, problem.num_qubits());
    if (!check_constraints(problem, v)) {
      continue;
    }
    const double e = logical_energy(problem, v);
    if (e < out.energy) {
      out.energy = e;
      out.states.clear();
    }
    if (e == out.energy) {
      out.states.push_back(v);
    }
  }
  return out;
}

// The unit-coupling instance with J_123 = -1, which frustrates the fields.
LogicalProblem frustrated_five_qubit() {
  auto terms = parity::testing::five_qubit_problem().terms();
  terms[4].coefficient = -1.0;
  return LogicalProblem(5, terms);
}

struct Pipeline {
  ParityCode code;
  Layout layout;
  PhysicalConstraints constraints;
};

std::optional<Pipeline> compile(const LogicalProblem& problem, std::uint64_t seed = 0) {
  Pipeline p;
  p.code = build_parity_code(problem);
  const auto set = build_projector_set(p.code.check, p.code.check_offset);
  auto result = lay_out(set, {.seed = seed, .budget = 20000});
  if (!result.layout) {
    return std::nullopt;
  }
  p.layout = std::move(*result.layout);
  p.constraints = physical_constraints(p.layout);
  return p;
}

}  // namespace

TEST(logical_spectrum, five_qubit_unit_couplings) {
  const auto problem = parity::testing::five_qubit_problem();
  const auto optimum = logical_spectrum(problem);
  const auto naive = naive_optimum(problem);
  EXPECT_EQ(optimum.energy, naive.energy);
  EXPECT_EQ(optimum.states, naive.states);
  // Every term can reach -1 at once: s = (a, -a, +1, a, -a).
  EXPECT_EQ(optimum.energy, -6.0);
  ASSERT_EQ(optimum.states.size(), 2U);
  EXPECT_EQ(optimum.states[0], BitVector::from_string("10010"));
  EXPECT_EQ(optimum.states[1], BitVector::from_string("01001"));
}

TEST(logical_spectrum, single_spin) {
  const LogicalProblem problem(1, {{{0}, -1.0}});
  const auto optimum = logical_spectrum(problem);
  EXPECT_EQ(optimum.energy, -1.0);
  ASSERT_EQ(optimum.states.size(), 1U);
  EXPECT_FALSE(optimum.states[0].get(0));
}

TEST(logical_spectrum, unsatisfiable_and_oversized) {
  const LogicalProblem contradiction(1, {{{0}, 1.0}}, {{{0}, 1}, {{0}, -1}});
  EXPECT_THROW(logical_spectrum(contradiction), EmptyFeasibleSet);
  const LogicalProblem big(21, {{{0, 20}, 1.0}});
  EXPECT_THROW(logical_spectrum(big), CapExceeded);
}

TEST(logical_spectrum, threads_do_not_change_results) {
  std::mt19937_64 rng(71);
  int compared = 0;
  for (int trial = 0; trial < 200 && compared < 3; ++trial) {
    auto problem = parity::testing::random_problem(rng, {.max_qubits = 14, .max_terms = 30, .max_constraints = 2});
    if (problem.num_qubits() < 13) {
      continue;
    }
    try {
      const auto one = logical_spectrum(problem, 1);
      const auto many = logical_spectrum(problem, 4);
      EXPECT_EQ(one.energy, many.energy);
      EXPECT_EQ(one.states, many.states);
      ++compared;
    } catch (const EmptyFeasibleSet&) {
    }
  }
  EXPECT_EQ(compared, 3);
}

TEST(physical_spectrum, ground_states_are_codewords_at_default_strength) {
  const auto problem = parity::testing::five_qubit_problem();
  const auto p = *compile(problem);
  const auto ham = emit_physical_hamiltonian(p.layout, problem, default_strength(problem));
  EXPECT_EQ(physical_spectrum(ham, p.constraints).non_codewords, 0U);

  const auto unfrustrated = physical_spectrum(emit_physical_hamiltonian(p.layout, problem, 0.0), p.constraints);
  EXPECT_EQ(unfrustrated.non_codewords, 0U);

  const auto frustrated = frustrated_five_qubit();
  const auto q = *compile(frustrated);
  const auto weak = physical_spectrum(emit_physical_hamiltonian(q.layout, frustrated, 0.0), q.constraints);
  EXPECT_EQ(weak.non_codewords, weak.states.size());
  EXPECT_EQ(weak.energy, -6.0);
}

TEST(physical_spectrum, empty_hamiltonian_is_fully_degenerate) {
  const LogicalProblem problem(3, {{{0}, 1.0}});
  PhysicalHamiltonian ham;
  ham.num_physical = 3;
  ham.fields.assign(3, 0.0);
  const auto optimum = physical_spectrum(ham, {3, {}, {}});
  EXPECT_EQ(optimum.energy, 0.0);
  EXPECT_EQ(optimum.states.size(), 8U);
}

TEST(physical_spectrum, matches_direct_evaluation) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    const auto problem = parity::testing::random_problem(rng, {.max_qubits = 5, .max_terms = 8});
    const auto p = compile(problem, trial);
    if (!p) {
      continue;
    }
    const auto ham = emit_physical_hamiltonian(p->layout, problem, 1.5);
    const auto optimum = physical_spectrum(ham, p->constraints, 2);
    const std::size_t n = ham.num_physical;
    if (n > 16) {
      continue;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      best = std::min(best, physical_energy(ham, bits_of(x, n)));
    }
    EXPECT_TRUE(energies_equal(optimum.energy, best));
    for (const auto& w : optimum.states) {
      EXPECT_TRUE(energies_equal(physical_energy(ham, w), best));
    }
  }
}

TEST(verify_pipeline, five_qubit_end_to_end) {
  const auto problem = parity::testing::five_qubit_problem();
  const auto p = *compile(problem);
  const double strength = default_strength(problem);
  const auto ham = emit_physical_hamiltonian(p.layout, problem, strength);
  const auto report = verify_pipeline(problem, p.code, p.constraints, ham);
  EXPECT_TRUE(report.decoded_match);
  EXPECT_TRUE(report.energy_match);
  EXPECT_EQ(report.physical.energy, -6.0 - 2 * strength);
  EXPECT_EQ(report.constraint_violations_in_gs, 0U);

  const auto frustrated = frustrated_five_qubit();
  const auto q = *compile(frustrated);
  const auto strong = verify_pipeline(frustrated, q.code, q.constraints,
                                      emit_physical_hamiltonian(q.layout, frustrated, default_strength(frustrated)));
  EXPECT_TRUE(strong.decoded_match);
  EXPECT_TRUE(strong.energy_match);
  const auto weak =
      verify_pipeline(frustrated, q.code, q.constraints, emit_physical_hamiltonian(q.layout, frustrated, 0.0));
  EXPECT_FALSE(weak.decoded_match);
  EXPECT_FALSE(weak.energy_match);
  EXPECT_GT(weak.constraint_violations_in_gs, 0U);
}

TEST(verify_pipeline, constrained_fragment_respects_constraint) {
  // Terms s3 s4, s3 s5, s4 s9 with s5 s9 = +1 imposed.
  const LogicalProblem problem(9, {{{2, 3}, 1.0}, {{2, 4}, -0.5}, {{3, 8}, 0.75}}, {{{4, 8}, 1}});
  const auto p = *compile(problem);
  const auto ham = emit_physical_hamiltonian(p.layout, problem, default_strength(problem));
  const auto report = verify_pipeline(problem, p.code, p.constraints, ham);
  EXPECT_TRUE(report.decoded_match);
  EXPECT_TRUE(report.energy_match);
  for (const auto& w : report.physical.states) {
    const auto v = decode(p.code, w.slice(0, p.code.num_terms()));
    EXPECT_EQ(v.get(4), v.get(8));
  }
}

TEST(verify_pipeline, fuzz_default_strength) {
  std::mt19937_64 rng(73);
  int verified = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto problem =
        parity::testing::random_problem(rng, {.max_qubits = 6, .max_terms = 10, .max_constraints = 1});
    std::optional<Pipeline> p;
    try {
      p = compile(problem, trial);
    } catch (const InfeasibleConstraints&) {
      continue;
    }
    if (!p || p->constraints.num_physical - p->constraints.pinned.size() > 16) {
      continue;
    }
    const auto ham = emit_physical_hamiltonian(p->layout, problem, default_strength(problem));
    const auto report = verify_pipeline(problem, p->code, p->constraints, ham);
    EXPECT_TRUE(report.decoded_match) << serialize_problem(problem);
    EXPECT_TRUE(report.energy_match) << serialize_problem(problem);
    ++verified;
  }
  EXPECT_GT(verified, 25);
}
