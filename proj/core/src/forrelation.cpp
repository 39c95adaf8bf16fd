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

#include "scs/forrelation.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace scs {

void BooleanFn::validate() const {
  if (n < 1 || n > kMaxOracleQubits) {
    throw std::invalid_argument("BooleanFn: n must be in [1, " +
                                std::to_string(kMaxOracleQubits) + "]");
  }
  if (values.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("BooleanFn: values length must be 2^n");
  }
  for (std::int8_t v : values) {
    if (v != 1 && v != -1) {
      throw std::invalid_argument("BooleanFn: values must be +/-1");
    }
  }
}

std::vector<double> walsh_spectrum(const BooleanFn& f) {
  f.validate();
  std::vector<double> a(f.values.begin(), f.values.end());
  // In-place fast Walsh-Hadamard transform.
  for (std::size_t len = 1; len < a.size(); len <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        double u = a[j], v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
    }
  }
  return a;
}

double forrelation_value(const BooleanFn& f, const BooleanFn& g) {
  if (f.n != g.n) {
    throw std::invalid_argument("forrelation_value: size mismatch");
  }
  std::vector<double> fh = walsh_spectrum(f);
  double acc = 0;
  for (std::size_t y = 0; y < fh.size(); ++y) acc += fh[y] * g.values[y];
  return acc * std::pow(2.0, -1.5 * f.n);
}

double kfold_forrelation(const std::vector<BooleanFn>& fns) {
  if (fns.size() < 2) {
    throw std::invalid_argument("kfold_forrelation: need k >= 2 functions");
  }
  int n = fns[0].n;
  for (const auto& f : fns) {
    f.validate();
    if (f.n != n) {
      throw std::invalid_argument("kfold_forrelation: size mismatch");
    }
  }
  // Contract left to right: v <- diag(f_i) W v.
  std::size_t dim = std::size_t{1} << n;
  std::vector<double> v(fns[0].values.begin(), fns[0].values.end());
  for (std::size_t i = 1; i < fns.size(); ++i) {
    // Walsh transform of v.
    for (std::size_t len = 1; len < dim; len <<= 1) {
      for (std::size_t a = 0; a < dim; a += 2 * len) {
        for (std::size_t j = a; j < a + len; ++j) {
          double u = v[j], w = v[j + len];
          v[j] = u + w;
          v[j + len] = u - w;
        }
      }
    }
    for (std::size_t x = 0; x < dim; ++x) v[x] *= fns[i].values[x];
  }
  double acc = 0;
  for (double x : v) acc += x;
  int k = static_cast<int>(fns.size());
  return acc * std::pow(2.0, -0.5 * n * (k + 1));
}

ForrelationInstance sample_instance(int n, int k, InstanceLabel label,
                                    Rng& rng) {
  if (n < 1 || n > kMaxOracleQubits) {
    throw std::invalid_argument("sample_instance: n out of range");
  }
  if (k < 2 || k > 3) {
    throw std::invalid_argument("sample_instance: k must be 2 or 3");
  }
  std::size_t dim = std::size_t{1} << n;
  auto uniform_fn = [&] {
    BooleanFn f{n, {}};
    f.values.resize(dim);
    for (auto& v : f.values) v = rng.uniform() < 0.5 ? -1 : 1;
    return f;
  };

  ForrelationInstance inst;
  inst.n = n;
  inst.k = k;
  inst.label = label;
  if (label == InstanceLabel::kUniform) {
    for (int i = 0; i < k; ++i) inst.fns.push_back(uniform_fn());
  } else {
    inst.fns.push_back(uniform_fn());
    for (int i = 1; i < k; ++i) {
      std::vector<double> spec = walsh_spectrum(inst.fns.back());
      BooleanFn g{n, {}};
      g.values.resize(dim);
      for (std::size_t y = 0; y < dim; ++y) {
        if (spec[y] > 0) {
          g.values[y] = 1;
        } else if (spec[y] < 0) {
          g.values[y] = -1;
        } else {
          g.values[y] = rng.uniform() < 0.5 ? -1 : 1;
        }
      }
      inst.fns.push_back(std::move(g));
    }
  }
  inst.phi = kfold_forrelation(inst.fns);
  return inst;
}

CircuitIR build_circuit(const ForrelationInstance& inst) {
  CircuitIR c;
  c.n = inst.n;
  auto h_layer = [&] {
    for (int q = 0; q < inst.n; ++q) {
      c.ops.push_back({CircuitOpKind::kH, q, 0, 0, {}});
    }
  };
  h_layer();
  for (const BooleanFn& f : inst.fns) {
    CircuitOp op{CircuitOpKind::kDiagOracle, 0, 0, 0, f};
    c.ops.push_back(std::move(op));
    h_layer();
  }
  c.ops.push_back({CircuitOpKind::kMeasureAll, 0, 0, 0, {}});
  return c;
}

std::vector<CircuitOp> decompose_oracle(const BooleanFn& fn) {
  fn.validate();
  std::size_t dim = fn.size();
  // theta(x) = pi * (1 - f(x)) / 2 in {0, pi}; expand over parities.
  std::vector<double> theta(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    theta[x] = fn.values[x] == 1 ? 0.0 : kPi;
  }
  // Walsh coefficients a_S = 2^-n sum_x theta(x) chi_S(x).
  for (std::size_t len = 1; len < dim; len <<= 1) {
    for (std::size_t i = 0; i < dim; i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        double u = theta[j], v = theta[j + len];
        theta[j] = u + v;
        theta[j + len] = u - v;
      }
    }
  }
  double scale = 1.0 / static_cast<double>(dim);

  std::vector<CircuitOp> ops;
  for (std::size_t s = 1; s < dim; ++s) {  // skip S = empty (global phase)
    double a = theta[s] * scale;
    if (std::abs(a) < 1e-15) continue;
    // Parity of the bits in s, accumulated on the highest set bit.
    int target = std::bit_width(s) - 1;
    std::vector<int> others;
    for (int b = 0; b < target; ++b) {
      if (s & (std::size_t{1} << b)) others.push_back(b);
    }
    for (int b : others) {
      ops.push_back({CircuitOpKind::kCnot, b, target, 0, {}});
    }
    // exp(i a chi_S(x)) on the parity bit is Rz(-2a).
    ops.push_back({CircuitOpKind::kRz, target, 0, -2.0 * a, {}});
    for (auto it = others.rbegin(); it != others.rend(); ++it) {
      ops.push_back({CircuitOpKind::kCnot, *it, target, 0, {}});
    }
  }
  return ops;
}

CircuitIR decompose_circuit(const CircuitIR& circuit) {
  CircuitIR out;
  out.n = circuit.n;
  for (const CircuitOp& op : circuit.ops) {
    if (op.kind != CircuitOpKind::kDiagOracle) {
      out.ops.push_back(op);
      continue;
    }
    if (op.fn.n != circuit.n) {
      throw std::invalid_argument("decompose_circuit: oracle size mismatch");
    }
    std::vector<CircuitOp> dec = decompose_oracle(op.fn);
    out.ops.insert(out.ops.end(), dec.begin(), dec.end());
  }
  return out;
}

StateVector simulate_ideal(const CircuitIR& circuit) {
  StateVector psi(circuit.n);
  // Textbook real Hadamard (global phase matters for amplitude checks).
  Eigen::Matrix2cd h;
  double inv = 1.0 / std::sqrt(2.0);
  h << inv, inv, inv, -inv;

  for (const CircuitOp& op : circuit.ops) {
    switch (op.kind) {
      case CircuitOpKind::kH:
        psi.apply_1q(h, op.qubit);
        break;
      case CircuitOpKind::kCnot:
        psi.apply_cnot(op.qubit, op.qubit2);
        break;
      case CircuitOpKind::kRz: {
        Eigen::Matrix2cd rz = Eigen::Matrix2cd::Zero();
        rz(0, 0) = std::exp(std::complex<double>(0, -op.angle / 2));
        rz(1, 1) = std::exp(std::complex<double>(0, op.angle / 2));
        psi.apply_1q(rz, op.qubit);
        break;
      }
      case CircuitOpKind::kDiagOracle: {
        std::vector<std::complex<double>> phases(psi.dim());
        for (std::size_t x = 0; x < phases.size(); ++x) {
          phases[x] = static_cast<double>(op.fn.values[x]);
        }
        psi.apply_diagonal(phases);
        break;
      }
      case CircuitOpKind::kMeasureAll:
        return psi;
    }
  }
  return psi;
}

CompiledCircuit compile_circuit(const CircuitIR& circuit,
                                const CompileOptions& opts) {
  if (opts.net == nullptr) {
    throw std::invalid_argument("compile_circuit: null net");
  }
  int members = opts.mode == SynthMode::kScs ? opts.scs.ensemble_size : 1;

  CompiledCircuit out;
  out.n = circuit.n;
  out.members.resize(static_cast<std::size_t>(members));
  out.member_t_counts.assign(static_cast<std::size_t>(members), 0);
  out.member_eps_sums.assign(static_cast<std::size_t>(members), 0.0);

  const GateSet& gs = opts.net->gate_set();
  int rz_position = 0;
  for (std::size_t oi = 0; oi < circuit.ops.size(); ++oi) {
    const CircuitOp& op = circuit.ops[oi];
    switch (op.kind) {
      case CircuitOpKind::kH:
        for (auto& m : out.members) {
          m.ops.push_back({CompiledOpKind::kH, op.qubit, 0, {}});
        }
        break;
      case CircuitOpKind::kCnot:
        for (auto& m : out.members) {
          m.ops.push_back({CompiledOpKind::kCnot, op.qubit, op.qubit2, {}});
        }
        break;
      case CircuitOpKind::kMeasureAll:
        for (auto& m : out.members) {
          m.ops.push_back({CompiledOpKind::kMeasureAll, 0, 0, {}});
        }
        break;
      case CircuitOpKind::kDiagOracle:
        throw std::invalid_argument(
            "compile_circuit: circuit still contains a diagonal oracle; run "
            "decompose_circuit first");
      case CircuitOpKind::kRz: {
        Unitary2 target = Unitary2::rz(op.angle);
        int depth = depth_for_eps(opts.eps, opts.net->eps0());
        // The prediction is nominal; bump until the deterministic route
        // meets eps (same depth is then used for every member).
        GateWord det;
        for (;; ++depth) {
          det = sk_synthesize(target, {depth, opts.net, false});
          if (op_distance(det.unitary(), target) <= opts.eps || depth >= 12) {
            break;
          }
        }
        double det_dist = op_distance(det.unitary(), target);
        if (det_dist > opts.eps) {
          throw SynthesisError("compile_circuit: Rz gate at op " +
                                   std::to_string(oi) + " missed eps",
                               det_dist);
        }
        if (opts.mode == SynthMode::kDeterministic) {
          out.member_t_counts[0] += det.t_count(gs);
          out.member_eps_sums[0] += det_dist;
          out.members[0].ops.push_back(
              {CompiledOpKind::kWord, op.qubit, 0, std::move(det)});
        } else {
          ScsConfig cfg = opts.scs;
          cfg.eps_target = opts.eps;
          cfg.depth = depth;
          cfg.master_seed = derive_seed(opts.scs.master_seed,
                                        static_cast<std::uint64_t>(rz_position));
          EnsembleResult er;
          try {
            er = ensemble_synthesize(target, cfg, *opts.net, opts.jobs);
          } catch (const SynthesisError& e) {
            throw SynthesisError("compile_circuit: Rz gate at op " +
                                     std::to_string(oi) + ": " + e.what(),
                                 e.achieved(), e.run_index());
          }
          for (int j = 0; j < members; ++j) {
            auto ju = static_cast<std::size_t>(j);
            out.member_t_counts[ju] += er.words[ju].t_count(gs);
            out.member_eps_sums[ju] +=
                op_distance(er.words[ju].unitary(), target);
            out.members[ju].ops.push_back(
                {CompiledOpKind::kWord, op.qubit, 0, std::move(er.words[ju])});
          }
        }
        ++rz_position;
        break;
      }
    }
  }
  out.rz_count = rz_position;
  return out;
}

namespace {

// Noisy CNOT: rotation by pi + alpha along the CNOT generator, i.e.
// M = I + (e^{i(pi+alpha)} - 1) |-><-| on the target within the
// control = 1 subspace. alpha = 0 gives M = X exactly.
void apply_noisy_cnot(DensityMatrix& rho, int control, int target,
                      const NoiseModel& noise) {
  if (noise.overrotation_alpha == 0.0) {
    rho.apply_cnot(control, target);
  } else {
    std::complex<double> d =
        std::exp(std::complex<double>(0, kPi + noise.overrotation_alpha)) -
        1.0;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    m(0, 0) += d * 0.5;
    m(0, 1) -= d * 0.5;
    m(1, 0) -= d * 0.5;
    m(1, 1) += d * 0.5;
    rho.apply_controlled_1q(m, control, target);
  }
  if (noise.depolarizing_p > 0) {
    rho.depolarize(control, noise.depolarizing_p);
    rho.depolarize(target, noise.depolarizing_p);
  }
}

}  // namespace

Score score_circuit(const CompiledCircuit& compiled, const CircuitIR& ideal,
                    const GateSet& gs, const NoiseModel& noise) {
  StateVector psi_ideal = simulate_ideal(ideal);
  std::vector<double> p_ideal = psi_ideal.probabilities();

  Unitary2 h = Unitary2::h();
  DensityMatrix avg(compiled.n);
  avg.scale(0.0);
  for (const CompiledMember& member : compiled.members) {
    DensityMatrix rho(compiled.n);
    for (const CompiledOp& op : member.ops) {
      switch (op.kind) {
        case CompiledOpKind::kH:
          rho.apply_unitary(noisy_gate(h, noise), op.qubit);
          if (noise.depolarizing_p > 0) {
            rho.depolarize(op.qubit, noise.depolarizing_p);
          }
          break;
        case CompiledOpKind::kCnot:
          apply_noisy_cnot(rho, op.qubit, op.qubit2, noise);
          break;
        case CompiledOpKind::kWord:
          apply_word(rho, op.word, gs, noise, op.qubit);
          break;
        case CompiledOpKind::kMeasureAll:
          break;
      }
    }
    avg.accumulate(rho, 1.0 / static_cast<double>(compiled.members.size()));
  }

  Score s;
  s.fidelity_proxy = avg.fidelity_with(psi_ideal);
  std::vector<double> p = avg.probabilities();
  s.p_accept = p[0];
  double tv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - p_ideal[i]);
  s.total_variation = 0.5 * tv;
  return s;
}

}  // namespace scs
