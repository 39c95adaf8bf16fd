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

#ifndef SCSYNTH_SCS_HPP
#define SCSYNTH_SCS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scs/rng.hpp"
#include "scs/sk.hpp"

namespace scs {

/// Stochastic synthesis configuration. Defaults follow the experimental
/// operating point: T0 = 0.1, beta = 0.7, K' = 16 ensemble members, K = 12
/// representatives/candidates.
struct ScsConfig {
  double eps_target = 0.00390625;  // 2^-8
  int k_reps = 12;                 // K: candidates per decomposition
  int ensemble_size = 16;          // K': independent runs
  double t0 = 0.1;                 // T0
  double beta = 0.7;               // cooling factor
  int mcmc_steps = 4;              // Metropolis refinement of the chosen pair
  std::uint64_t master_seed = 0;
  int depth = 4;

  /// Throws std::invalid_argument on hard violations (beta outside (0,1),
  /// nonpositive sizes).
  void validate() const;

  /// Non-fatal advisories, e.g. beta outside the recommended (0.5, 0.9).
  std::vector<std::string> warnings() const;
};

/// Annealing schedule: T0 * beta^level, exactly. `level` counts refinement
/// steps from the top of the recursion (level 0 = the outermost, coarsest
/// correction), so deeper recursion levels sample at colder temperatures.
double temperature(int level, const ScsConfig& cfg);

struct CandidatePair {
  Unitary2 v, w;
  double energy = 0;  // raw Frobenius residual ||delta - v w v' w'||_F
};

/// `count` candidate commutator pairs for delta. Candidate 0 is always the
/// deterministic gc_decompose pair. The rest mix exact re-splits (rotated
/// split frames, zero energy) with conjugation jitters of the deterministic
/// pair (rotation angle ~ N(0, (0.1 sqrt(||delta - I||))^2)). Candidates
/// whose reconstruction misses delta by more than the contraction budget
/// 0.35 * ||delta - I||_F^{3/2} are rejected and redrawn.
std::vector<CandidatePair> propose_candidates(const Unitary2& delta, int count,
                                              Rng& rng);

/// Index sampled with probability proportional to exp(-energy / temp) over
/// the finite candidate list (log-sum-exp stabilized). temp = 0 returns the
/// argmin, ties to the lowest index.
std::size_t gibbs_sample_index(const std::vector<CandidatePair>& candidates,
                               double temp, Rng& rng);

CandidatePair gibbs_sample(const Unitary2& delta,
                           const std::vector<CandidatePair>& candidates,
                           double temp, Rng& rng);

class SynthesisError : public std::runtime_error {
 public:
  SynthesisError(const std::string& what, double achieved, int run_index = -1)
      : std::runtime_error(what), achieved_(achieved), run_index_(run_index) {}
  double achieved() const { return achieved_; }
  int run_index() const { return run_index_; }

 private:
  double achieved_;
  int run_index_;
};

struct ScsRunResult {
  GateWord word;
  /// Residual Lie vectors log(target * approx^dag) per level, base first
  /// (depth + 1 entries).
  std::vector<LieVector> residual_trace;
};

/// One stochastic synthesis run. Samples the base word among the k_reps
/// nearest net entries and the commutator pair among propose_candidates at
/// each level, Gibbs-weighted at that level's temperature. A run that
/// misses eps_target is re-run once at temperature 0 (deterministic
/// fallback); a second miss raises SynthesisError with the achieved
/// distance.
///
/// With k_reps = 1 and t0 = 0 every choice degenerates to the
/// deterministic one and the output is bit-identical to sk_synthesize.
ScsRunResult scs_synthesize(const Unitary2& target, const ScsConfig& cfg,
                            const EpsilonNet& net, std::uint64_t run_seed);

struct EnsembleResult {
  std::vector<GateWord> words;                // K' entries, run order
  std::vector<LieVector> per_run_residuals;   // final residual per run
  ScsConfig config_echo;
};

/// K' independent runs with seeds derive_seed(master_seed, run_index).
/// Runs may execute on `jobs` threads; results are assembled in run order,
/// so parallel and serial execution are bit-identical.
EnsembleResult ensemble_synthesize(const Unitary2& target,
                                   const ScsConfig& cfg,
                                   const EpsilonNet& net, int jobs = 1);

}  // namespace scs

#endif  // SCSYNTH_SCS_HPP
