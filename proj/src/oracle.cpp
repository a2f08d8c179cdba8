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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <limits>
#include <set>
#include <string>
#include <thread>

namespace parity {

namespace {

struct Candidate {
  double energy;
  std::uint64_t state;
};

struct Partial {
  double best = std::numeric_limits<double>::infinity();
  std::vector<Candidate> candidates;
};

// Energy functions return nothing for infeasible states.
using Evaluate = std::function<std::optional<double>(std::uint64_t)>;

Partial scan(const Evaluate& evaluate, std::uint64_t begin, std::uint64_t end) {
  Partial part;
  for (std::uint64_t x = begin; x < end; ++x) {
    const auto e = evaluate(x);
    if (!e) {
      continue;
    }
    if (energies_equal(*e, part.best)) {
      part.best = std::min(part.best, *e);
    } else if (*e < part.best) {
      part.best = *e;
      std::erase_if(part.candidates, [&](const Candidate& c) { return !energies_equal(c.energy, part.best); });
    } else {
      continue;
    }
    part.candidates.push_back({*e, x});
  }
  return part;
}

std::pair<double, std::vector<std::uint64_t>> minimize(std::size_t bits, const Evaluate& evaluate,
                                                       std::size_t threads) {
  const std::uint64_t total = std::uint64_t{1} << bits;
  threads = std::clamp<std::size_t>(threads, 1, 64);
  if (total < 4096) {
    threads = 1;
  }
  std::vector<Partial> parts(threads);
  if (threads == 1) {
    parts[0] = scan(evaluate, 0, total);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::uint64_t begin = total * t / threads;
      const std::uint64_t end = total * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] { parts[t] = scan(evaluate, begin, end); });
    }
    for (auto& w : workers) {
      w.join();
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : parts) {
    best = std::min(best, p.best);
  }
  std::vector<std::uint64_t> states;
  for (const auto& p : parts) {
    for (const auto& c : p.candidates) {
      if (energies_equal(c.energy, best)) {
        states.push_back(c.state);
      }
    }
  }
  return {best, states};
}

std::uint64_t mask_of(const std::vector<std::size_t>& qubits) {
  std::uint64_t mask = 0;
  for (auto q : qubits) {
    mask |= std::uint64_t{1} << q;
  }
  return mask;
}

bool odd_parity(std::uint64_t x) { return (std::popcount(x) & 1) != 0; }

gf2::BitVector to_bits(std::uint64_t x, std::size_t n) {
  gf2::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v.set(i, ((x >> i) & 1U) != 0);
  }
  return v;
}

}  // namespace

bool energies_equal(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) {
    return a == b;
  }
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

Optimum logical_spectrum(const LogicalProblem& problem, std::size_t threads) {
  const std::size_t n = problem.num_qubits();
  if (n > kMaxEnumeratedBits) {
    throw CapExceeded("logical enumeration needs N <= " + std::to_string(kMaxEnumeratedBits) + ", got " +
                      std::to_string(n));
  }
  std::vector<std::pair<std::uint64_t, double>> terms;
  for (const auto& t : problem.terms()) {
    terms.emplace_back(mask_of(t.support), t.coefficient);
  }
  std::vector<std::pair<std::uint64_t, bool>> constraints;
  for (const auto& c : problem.constraints()) {
    constraints.emplace_back(mask_of(c.support), c.odd());
  }
  const Evaluate evaluate = [&](std::uint64_t x) -> std::optional<double> {
    for (const auto& [mask, odd] : constraints) {
      if (odd_parity(x & mask) != odd) {
        return std::nullopt;
      }
    }
    double e = 0.0;
    for (const auto& [mask, j] : terms) {
      e += odd_parity(x & mask) ? -j : j;
    }
    return e;
  };
  auto [energy, states] = minimize(n, evaluate, threads);
  if (states.empty()) {
    throw EmptyFeasibleSet("no assignment satisfies the constraints");
  }
  Optimum out;
  out.energy = energy;
  for (auto x : states) {
    out.states.push_back(to_bits(x, n));
  }
  return out;
}

PhysicalOptimum physical_spectrum(const PhysicalHamiltonian& ham, const PhysicalConstraints& constraints,
                                  std::size_t threads) {
  const std::size_t n = ham.num_physical;
  if (constraints.num_physical != n) {
    throw std::invalid_argument("constraints and Hamiltonian disagree on the qubit count");
  }
  std::vector<bool> is_pinned(n, false);
  std::uint64_t pinned_bits = 0;
  for (const auto& pin : ham.pinned) {
    is_pinned[pin.qubit] = true;
    pinned_bits |= pin.value ? std::uint64_t{1} << pin.qubit : 0;
  }
  std::vector<std::size_t> free;
  for (std::size_t q = 0; q < n; ++q) {
    if (!is_pinned[q]) {
      free.push_back(q);
    }
  }
  if (free.size() > kMaxEnumeratedBits || n > 64) {
    throw CapExceeded("physical enumeration needs at most " + std::to_string(kMaxEnumeratedBits) +
                      " free qubits, got " + std::to_string(free.size()));
  }
  std::vector<std::pair<std::uint64_t, double>> fields;
  for (std::size_t q = 0; q < n; ++q) {
    if (ham.fields[q] != 0.0 && !is_pinned[q]) {
      fields.emplace_back(std::uint64_t{1} << q, ham.fields[q]);
    }
  }
  std::vector<std::pair<std::uint64_t, double>> couplings;
  for (const auto& c : ham.couplings) {
    couplings.emplace_back(mask_of(c.qubits), c.coefficient);
  }
  const auto expand = [&](std::uint64_t x) {
    std::uint64_t w = pinned_bits;
    for (std::size_t i = 0; i < free.size(); ++i) {
      w |= ((x >> i) & 1U) << free[i];
    }
    return w;
  };
  const Evaluate evaluate = [&](std::uint64_t x) -> std::optional<double> {
    const std::uint64_t w = expand(x);
    double e = ham.constant;
    for (const auto& [mask, h] : fields) {
      e += (w & mask) != 0 ? -h : h;
    }
    for (const auto& [mask, j] : couplings) {
      e += odd_parity(w & mask) ? -j : j;
    }
    return e;
  };
  auto [energy, states] = minimize(free.size(), evaluate, threads);
  PhysicalOptimum out;
  out.energy = energy;
  for (auto x : states) {
    auto w = to_bits(expand(x), n);
    out.non_codewords += physical_syndrome_weight(constraints, w) == 0 ? 0 : 1;
    out.states.push_back(std::move(w));
  }
  return out;
}

SpectrumReport verify_pipeline(const LogicalProblem& problem, const ParityCode& code,
                               const PhysicalConstraints& constraints, const PhysicalHamiltonian& ham,
                               std::size_t threads) {
  SpectrumReport report;
  report.logical = logical_spectrum(problem, threads);
  report.physical = physical_spectrum(ham, constraints, threads);
  report.num_couplers = constraints.couplers.size();
  report.strength = ham.strength;
  const auto basis = gf2::rref(degeneracy_basis(code)).matrix;
  std::set<gf2::BitVector> expected;
  for (const auto& v : report.logical.states) {
    expected.insert(orbit_representative(basis, v));
  }
  std::set<gf2::BitVector> decoded;
  const std::size_t k = code.num_terms();
  for (const auto& w : report.physical.states) {
    const auto v = decode(code, w.slice(0, k));
    const bool codeword = physical_syndrome_weight(constraints, w) == 0;
    if (!codeword || !check_constraints(problem, v)) {
      ++report.constraint_violations_in_gs;
    }
    decoded.insert(orbit_representative(basis, v));
  }
  report.decoded_match = report.constraint_violations_in_gs == 0 && decoded == expected;
  const double predicted = report.logical.energy - ham.strength * static_cast<double>(report.num_couplers);
  report.energy_match = energies_equal(report.physical.energy, predicted);
  return report;
}

}  // namespace parity
