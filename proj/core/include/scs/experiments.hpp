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

#ifndef SCSYNTH_EXPERIMENTS_HPP
#define SCSYNTH_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "scs/forrelation.hpp"
#include "scs/rc.hpp"

namespace scs {

/// Distance of the word's unitary to the target computed through an
/// independent path: the word is re-simulated gate by gate on basis states
/// and the resulting matrix compared projectively. Used to cross-check
/// every distance before it is printed.
double resimulated_distance(const GateWord& word, const GateSet& gs,
                            const Unitary2& target);

/// Smallest depth (up to max_depth) at which the deterministic recursion
/// reaches eps for this target, found from one synthesis trace. Returns -1
/// if unreachable.
int measured_depth_for_eps(const Unitary2& target, const EpsilonNet& net,
                           double eps, int max_depth);

// ---------------------------------------------------------------------------
// Rz trace-distance / error-split experiment
// ---------------------------------------------------------------------------

struct RcExperimentParams {
  int num_angles = 100;
  double eps = 0.00390625;  // 2^-8
  double alpha = 0.01;      // over-rotation amplitude for the split section
  ScsConfig scs;            // K', K, T0, beta, master_seed
  std::vector<int> kprime_sweep;  // e.g. {4, 8, 16, 32, 64}; empty = off
  int sweep_targets = 20;
  int max_depth = 8;
  int jobs = 1;
};

struct RcAngleRecord {
  double theta = 0;
  int depth = 0;
  double det_distance = 0;        // synthesis distance of the det word
  double det_trace_distance = 0;  // on input |+>, noiseless
  double scs_trace_distance = 0;  // ensemble average vs ideal, noiseless
  double det_coherent_angle = 0;  // under alpha over-rotation
  double scs_coherent_angle = 0;
  double det_incoherent = 0;
  double scs_incoherent = 0;
  std::size_t det_length = 0;
  double scs_mean_length = 0;
};

struct KprimeSweepPoint {
  int kprime = 0;
  double mean_coherent_angle = 0;
  double mean_residual_norm = 0;  // || mean residual Lie vector ||
};

struct RcExperimentReport {
  RcExperimentParams params;
  std::vector<RcAngleRecord> angles;
  double mean_det_trace = 0;
  double mean_scs_trace = 0;
  double trace_ratio = 0;  // mean det / mean scs
  double mean_det_coherent = 0;
  double mean_scs_coherent = 0;
  double coherent_ratio = 0;            // mean scs / mean det
  double coherent_suppression_pct = 0;  // 100 * (1 - coherent_ratio)
  std::vector<KprimeSweepPoint> sweep;
  double sweep_slope = 0;  // d log(coh) / d log K'
};

RcExperimentReport run_rc_experiment(const EpsilonNet& net,
                                     const RcExperimentParams& params);

// ---------------------------------------------------------------------------
// Word-length scaling experiment
// ---------------------------------------------------------------------------

struct ScalingParams {
  int num_targets = 20;
  std::vector<int> depths = {0, 1, 2, 3, 4, 5};
  SynthMode mode = SynthMode::kDeterministic;
  ScsConfig scs;
  int jobs = 1;
};

struct ScalingPoint {
  int depth = 0;
  double mean_eps = 0;
  double mean_length = 0;
  double mean_tcount = 0;
};

struct ScalingReport {
  ScalingParams params;
  std::vector<ScalingPoint> points;
  /// OLS fit of log(mean length) on log log(1 / mean eps).
  double slope = 0;
  double intercept = 0;
  double ci95_width = 0;  // full width of the 95% slope interval
  int fit_points = 0;
};

ScalingReport run_scaling_experiment(const EpsilonNet& net,
                                     const ScalingParams& params);

// ---------------------------------------------------------------------------
// Forrelation fidelity experiment
// ---------------------------------------------------------------------------

struct ForrelationExpParams {
  int n = 3;
  int k = 3;
  int num_instances = 20;
  double eps = 0.00390625;
  double alpha = 0.01;
  double depolarizing_p = 0.0;
  InstanceLabel label = InstanceLabel::kForrelated;
  ScsConfig scs;
  int jobs = 1;
};

struct ForrelationInstanceRecord {
  double phi = 0;
  Score det;
  Score scs;
  int det_t_count = 0;
  double scs_mean_t_count = 0;
};

struct ForrelationExpReport {
  ForrelationExpParams params;
  std::vector<ForrelationInstanceRecord> records;
  double mean_det_fidelity = 0;
  double mean_scs_fidelity = 0;
  double paired_t = 0;   // one-sided paired t statistic (scs - det)
  double p_value = 1.0;  // P(T_{n-1} > paired_t)
};

ForrelationExpReport run_forrelation_experiment(
    const EpsilonNet& net, const ForrelationExpParams& params);

// ---------------------------------------------------------------------------
// Serialization (reports are byte-stable for fixed seeds)
// ---------------------------------------------------------------------------

std::string to_json(const RcExperimentReport& report, bool with_timestamp);
std::string to_json(const ForrelationExpReport& report, bool with_timestamp);
std::string to_csv(const ScalingReport& report);

/// One-sided upper tail of Student's t with df degrees of freedom.
double student_t_tail(double t, int df);
/// Two-sided 95% quantile of Student's t.
double student_t_975(int df);

}  // namespace scs

#endif  // SCSYNTH_EXPERIMENTS_HPP
