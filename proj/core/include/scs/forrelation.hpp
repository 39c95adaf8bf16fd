// Copyright 2026 The scsynth Authors
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

#ifndef SCSYNTH_FORRELATION_HPP
#define SCSYNTH_FORRELATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scs/scs.hpp"
#include "scs/sim.hpp"

namespace scs {

inline constexpr int kMaxOracleQubits = 6;

/// Boolean function on n <= 6 bits with values in {+1, -1}.
struct BooleanFn {
  int n = 0;
  std::vector<std::int8_t> values;

  void validate() const;
  std::size_t size() const { return values.size(); }
};

/// Unnormalized Walsh spectrum: f_hat(y) = sum_x f(x) (-1)^{x.y}.
std::vector<double> walsh_spectrum(const BooleanFn& f);

/// Phi = 2^{-3n/2} sum_{x,y} f(x) (-1)^{x.y} g(y); equals the single-query
/// circuit amplitude <0| H g H f H |0>.
double forrelation_value(const BooleanFn& f, const BooleanFn& g);

/// k-fold generalization: 2^{-n(k+1)/2} sum f1(x1) (-1)^{x1.x2} f2(x2) ...
double kfold_forrelation(const std::vector<BooleanFn>& fns);

enum class InstanceLabel { kForrelated, kUniform };

struct ForrelationInstance {
  int n = 0;
  int k = 0;
  std::vector<BooleanFn> fns;
  double phi = 0;
  InstanceLabel label = InstanceLabel::kUniform;
};

/// label = uniform: k i.i.d. uniform +/-1 functions. label = forrelated:
/// f1 uniform, then f_{i+1}(y) = sign(f_i_hat(y)) with uniform tie-break.
ForrelationInstance sample_instance(int n, int k, InstanceLabel label,
                                    Rng& rng);

enum class CircuitOpKind { kH, kCnot, kRz, kDiagOracle, kMeasureAll };

struct CircuitOp {
  CircuitOpKind kind;
  int qubit = 0;      // H, Rz; CNOT control
  int qubit2 = 0;     // CNOT target
  double angle = 0;   // Rz
  BooleanFn fn;       // kDiagOracle
};

struct CircuitIR {
  int n = 0;
  std::vector<CircuitOp> ops;
};

/// H^n, then alternately DIAG_ORACLE(fn_i) and H^n for i = 1..k, then
/// MEASURE_ALL. The |0^n> amplitude equals the k-fold Forrelation value.
CircuitIR build_circuit(const ForrelationInstance& inst);

/// Walsh decomposition of the +/-1 diagonal oracle into parity-phase
/// networks: for each nonzero Walsh coefficient, a CNOT ladder onto the
/// highest bit, one Rz, and the reversed ladder. At most 2^n - 1 Rz gates;
/// exact up to global phase.
std::vector<CircuitOp> decompose_oracle(const BooleanFn& fn);

/// Replaces every kDiagOracle op by its decomposition.
CircuitIR decompose_circuit(const CircuitIR& circuit);

/// Exact simulation of a CircuitIR from |0^n> (oracles as exact diagonals,
/// Rz exact); stops at MEASURE_ALL.
StateVector simulate_ideal(const CircuitIR& circuit);

enum class SynthMode { kDeterministic, kScs };

struct CompileOptions {
  SynthMode mode = SynthMode::kDeterministic;
  double eps = 0.00390625;  // per-gate synthesis accuracy
  const EpsilonNet* net = nullptr;
  ScsConfig scs;  // ensemble_size, temperatures, master_seed (kScs)
  int jobs = 1;
};

enum class CompiledOpKind { kH, kCnot, kWord, kMeasureAll };

struct CompiledOp {
  CompiledOpKind kind;
  int qubit = 0;
  int qubit2 = 0;
  GateWord word;  // kWord
};

struct CompiledMember {
  std::vector<CompiledOp> ops;
};

/// Compiled circuit: one member per ensemble run (deterministic mode has
/// exactly one). Every Rz is replaced by a gate word meeting the per-gate
/// accuracy; H and CNOT pass through.
struct CompiledCircuit {
  int n = 0;
  std::vector<CompiledMember> members;
  std::vector<int> member_t_counts;
  /// Sum over Rz gates of the achieved synthesis distance, per member
  /// (the union-bound budget for output total variation).
  std::vector<double> member_eps_sums;
  int rz_count = 0;
};

/// Throws SynthesisError (with gate position in the message) on a failed
/// synthesis. The circuit must already be decomposed (no kDiagOracle ops).
CompiledCircuit compile_circuit(const CircuitIR& circuit,
                                const CompileOptions& opts);

struct Score {
  double fidelity_proxy = 0;   // <ideal| rho |ideal> of the member average
  double p_accept = 0;         // P(0^n)
  double total_variation = 0;  // TV(diag(rho), ideal distribution)
};

/// Simulates every member under the noise model, averages the output
/// density matrices, and scores against the exact simulation of the ideal
/// circuit.
Score score_circuit(const CompiledCircuit& compiled, const CircuitIR& ideal,
                    const GateSet& gs, const NoiseModel& noise);

}  // namespace scs

#endif  // SCSYNTH_FORRELATION_HPP
